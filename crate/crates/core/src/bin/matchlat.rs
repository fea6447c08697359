use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use matchlat::generators::GraphSpec;
use matchlat::io::{
    graph_from_json, graph_to_dot, graph_to_json, hasse_to_dot, zdigraph_to_dot, MatchingsJson,
    PosetJson, ZDigraphJson,
};
use matchlat::lattice::FiniteLattice;
use matchlat::verify::{core_checks, run_suite, Suite, VerificationReport};
use matchlat::ztransform::face_poset_outerplane;
use matchlat::{Caps, Error, PlaneBipartiteGraph, Result, ZDigraph};

/// Perfect-matching lattices of plane bipartite graphs.
#[derive(Parser)]
#[command(name = "matchlat", version)]
struct Cli {
    /// Maximum number of vertices of an input or generated graph.
    #[arg(long, global = true)]
    cap_vertices: Option<usize>,
    /// Maximum number of perfect matchings enumerated.
    #[arg(long, global = true)]
    cap_matchings: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: L(r1,...,rm), P(m,n), T(m), tree:a>b,..., tree-opt:..., link:A+B.
    Gen { spec: String },
    /// Analyze a graph file.
    Analyze { file: PathBuf, target: Target },
    /// Run a verification suite.
    Verify {
        suite: String,
        /// Run the core checks on this graph instead of the built-in cases.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Matchings,
    Zdig,
    Lattice,
    Decompose,
    Faceposet,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn caps(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(v) = cli.cap_vertices {
        caps.max_vertices = v;
    }
    if let Some(m) = cli.cap_matchings {
        caps.max_matchings = m;
    }
    caps
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn unsupported(format: Format, what: &str) -> Error {
    let name = match format {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Text => "text",
    };
    Error::InvalidInput(format!("{name} output is not available for {what}"))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<u8> {
    let caps = caps(cli);
    match &cli.command {
        Command::Gen { spec } => {
            let g = spec.parse::<GraphSpec>()?.build(&caps)?;
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => graph_to_json(&g) + "\n",
                Format::Dot => graph_to_dot(&g),
                f => return Err(unsupported(f, "gen")),
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Analyze { file, target } => {
            let g = load(file, &caps)?;
            let text = analyze(&g, *target, cli.format.unwrap_or(Format::Json), &caps)?;
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Verify { suite, graph } => {
            let suite: Suite = suite.parse()?;
            let report = match graph {
                Some(path) => {
                    if suite != Suite::Core {
                        return Err(Error::InvalidInput(
                            "--graph only applies to the core suite".into(),
                        ));
                    }
                    let g = load(path, &caps)?;
                    let mut report = VerificationReport::new("core");
                    core_checks(&mut report, &path.display().to_string(), &g, &caps)?;
                    report
                }
                None => run_suite(suite, &caps)?,
            };
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
                f => return Err(unsupported(f, "verify")),
            };
            emit(cli, &text)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn load(path: &PathBuf, caps: &Caps) -> Result<PlaneBipartiteGraph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let g = graph_from_json(&text)?;
    g.check_caps(caps)?;
    Ok(g)
}

#[derive(Serialize)]
struct FactorJson {
    size: usize,
    join_irreducibles: Vec<String>,
}

#[derive(Serialize)]
struct DecompositionJson {
    size: usize,
    factors: Vec<FactorJson>,
    central_elements: Vec<String>,
}

fn matching_lattice(z: &ZDigraph, caps: &Caps) -> Result<FiniteLattice> {
    z.poset()?.lattice(caps)
}

fn analyze(g: &PlaneBipartiteGraph, target: Target, format: Format, caps: &Caps) -> Result<String> {
    let z = ZDigraph::build(g, caps)?;
    let out = match (target, format) {
        (Target::Matchings, Format::Json) => json(&MatchingsJson {
            count: z.len(),
            matchings: z.matchings().to_vec(),
        }),
        (Target::Matchings, Format::Text) => {
            let mut s = format!("{} perfect matchings\n", z.len());
            for (i, m) in z.matchings().iter().enumerate() {
                s += &format!("M{i}: {:?}\n", m.edges());
            }
            s
        }
        (Target::Zdig, Format::Json) => {
            z.poset()?;
            json(&ZDigraphJson::from_digraph(&z))
        }
        (Target::Zdig, Format::Dot) => {
            z.poset()?;
            zdigraph_to_dot(&z)
        }
        (Target::Zdig, Format::Text) => {
            z.poset()?;
            let mut s = format!("{} matchings, {} arcs\n", z.len(), z.arcs().len());
            for a in z.arcs() {
                s += &format!("M{} -> M{} via f{}\n", a.from, a.to, a.face);
            }
            s
        }
        (Target::Lattice, f) => {
            let l = matching_lattice(&z, caps)?;
            match f {
                Format::Json => json(&PosetJson::from_lattice(&l, true)),
                Format::Dot => hasse_to_dot(l.poset(), &l.rank_check()?),
                Format::Text => {
                    let rho = l.rank_check()?;
                    format!(
                        "{} elements, rank {}, distributive: {}, covers: {}\n",
                        l.len(),
                        rho[l.top()],
                        l.is_distributive(),
                        l.poset().covers().len()
                    )
                }
            }
        }
        (Target::Decompose, f) => {
            let l = matching_lattice(&z, caps)?;
            let d = l.irreducible_decomposition(caps)?;
            let report = DecompositionJson {
                size: l.len(),
                factors: d
                    .factors
                    .iter()
                    .map(|f| FactorJson {
                        size: f.lattice.lattice.len(),
                        join_irreducibles: f
                            .irreducibles
                            .iter()
                            .map(|&x| l.label(x).to_string())
                            .collect(),
                    })
                    .collect(),
                central_elements: d
                    .central_elements()
                    .iter()
                    .map(|&x| l.label(x).to_string())
                    .collect(),
            };
            match f {
                Format::Json => json(&report),
                Format::Text => {
                    let mut s = format!(
                        "{} elements, {} irreducible factors\n",
                        report.size,
                        report.factors.len()
                    );
                    for (i, f) in report.factors.iter().enumerate() {
                        s += &format!(
                            "factor {}: size {}, join-irreducibles {}\n",
                            i + 1,
                            f.size,
                            f.join_irreducibles.join(",")
                        );
                    }
                    s += &format!("central elements: {}\n", report.central_elements.join(","));
                    s
                }
                Format::Dot => return Err(unsupported(f, "decompose")),
            }
        }
        (Target::Faceposet, f) => {
            let fp = face_poset_outerplane(g)?;
            match f {
                Format::Json => json(&PosetJson::from_poset(&fp.poset)),
                Format::Dot => hasse_to_dot(&fp.poset, &fp.poset.heights()),
                Format::Text => {
                    let mut s = format!("{} faces\n", fp.poset.len());
                    for &(a, b) in fp.poset.covers() {
                        s += &format!("{} < {}\n", fp.poset.label(a), fp.poset.label(b));
                    }
                    s
                }
            }
        }
        (Target::Matchings, f) => return Err(unsupported(f, "matchings")),
    };
    Ok(out)
}
