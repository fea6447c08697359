use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // graph construction
    #[error("graph contains an odd cycle through vertex {vertex}")]
    NotBipartite { vertex: usize },
    #[error("edge {edge} joins two vertices of the same color")]
    ImproperColoring { edge: usize },
    #[error("graph is disconnected: vertex {vertex} unreachable from vertex 0")]
    Disconnected { vertex: usize },
    #[error("rotation system is not planar: V - E + F = {characteristic}, expected 2")]
    EulerViolation { characteristic: i64 },
    #[error("duplicate edge between {u} and {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("input required: {0}")]
    InputRequired(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),

    // matchings
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("size cap exceeded: {what} ({actual} > {limit})")]
    SizeCapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("edge set is not a perfect matching: {0}")]
    NotAMatching(String),
    #[error("edge set is not a cycle: {0}")]
    NotACycle(String),

    // Z-transformation digraph
    #[error("Z-transformation digraph has a directed cycle through matching {matching}")]
    CycleDetected { matching: usize },
    #[error("arc {from} -> {to} of the Z-transformation digraph is not a cover relation")]
    HasseMismatch { from: usize, to: usize },
    #[error("{count} sources found across {components} components")]
    MultipleSources { count: usize, components: usize },
    #[error("{count} sinks found across {components} components")]
    MultipleSinks { count: usize, components: usize },
    #[error("matchings {upper} and {lower} are not comparable in the required order")]
    NotComparable { upper: usize, lower: usize },
    #[error("not a directed path: {0}")]
    NotAPath(String),
    #[error("graph is not 2-connected outerplane: {0}")]
    NotOuterplane(String),
    #[error("directed inner dual has a cycle through face {face}")]
    DirectedCycleInInnerDual { face: usize },
    #[error("matching {matching} has a {orientation} alternating cycle of length {length}")]
    ExtremalViolation {
        matching: usize,
        orientation: &'static str,
        length: usize,
    },
    #[error("structural check failed: {0}")]
    StructureViolation(String),
    #[error("isomorphism check failed: {0}")]
    IsoFailure(String),

    // lattices
    #[error("not a poset: {0}")]
    InvalidPoset(String),
    #[error("elements {x} and {y} have no {missing}")]
    NotALattice {
        x: usize,
        y: usize,
        missing: &'static str,
    },
    #[error("lattice is not graded at cover {lower} < {upper}")]
    NotGraded { lower: usize, upper: usize },
    #[error("element {x} has two complements {a} and {b}")]
    DuplicateComplement { x: usize, a: usize, b: usize },
    #[error("elements {x} and {y} are not complementary")]
    NotComplementary { x: usize, y: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("chain is not saturated at position {position}")]
    ChainNotSaturated { position: usize },
    #[error("product decomposition does not reproduce the lattice: {0}")]
    ProductMismatch(String),

    // generators
    #[error("row lengths must be positive and non-increasing: {0:?}")]
    InvalidRowLengths(Vec<usize>),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("no opposite-color pair of outer vertices between parts {left} and {right}")]
    ColorClash { left: usize, right: usize },
    #[error("embedding conflict: {0}")]
    EmbeddingConflict(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeCapExceeded { .. } => 3,
            Error::CycleDetected { .. }
            | Error::HasseMismatch { .. }
            | Error::IsoFailure(_)
            | Error::StructureViolation(_)
            | Error::ExtremalViolation { .. }
            | Error::ProductMismatch(_)
            | Error::DuplicateComplement { .. }
            | Error::DirectedCycleInInnerDual { .. } => 1,
            _ => 2,
        }
    }
}
