use crate::error::{Error, Result};

/// Hard limits for the exhaustive algorithms. Exceeding one is always an
/// error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_vertices: usize,
    pub max_inner_faces: usize,
    pub max_matchings: usize,
    /// Elements of any lattice whose meet/join tables are materialized.
    pub max_lattice_elements: usize,
    /// Matchings allowed for the quadratic pairwise oracles (weak elementarity).
    pub max_oracle_matchings: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: 64,
            max_inner_faces: 20,
            max_matchings: 100_000,
            max_lattice_elements: 2048,
            max_oracle_matchings: 2000,
        }
    }
}

pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeCapExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
