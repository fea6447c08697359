//! Textual graph specifications:
//! `L(r1,...,rm)`, `P(m,n)`, `T(m)`, `tree:a>b,...`, `tree-opt:a>b,...`,
//! and `link:SPEC+SPEC+...`.

use std::fmt;
use std::str::FromStr;

use super::hexagonal::{truncated_parallelogram, validate_rows};
use super::link::link_components;
use super::tree::{tree_to_outerplane, OrientedTree};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::plane_graph::PlaneBipartiteGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Hexagonal(Vec<usize>),
    Tree {
        tree: OrientedTree,
        optimize: bool,
        source: String,
    },
    Link(Vec<GraphSpec>),
}

impl GraphSpec {
    pub fn build(&self, caps: &Caps) -> Result<PlaneBipartiteGraph> {
        let g = match self {
            GraphSpec::Hexagonal(rows) => truncated_parallelogram(rows, caps)?.graph,
            GraphSpec::Tree { tree, optimize, .. } => tree_to_outerplane(tree, *optimize)?.graph,
            GraphSpec::Link(parts) => {
                let graphs = parts
                    .iter()
                    .map(|p| p.build(caps))
                    .collect::<Result<Vec<_>>>()?;
                link_components(&graphs)?.graph
            }
        };
        g.check_caps(caps)?;
        Ok(g)
    }
}

fn numbers(inner: &str) -> Result<Vec<usize>> {
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a number: {t:?}")))
        })
        .collect()
}

fn call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("link:") {
            let parts = rest
                .split('+')
                .map(str::parse)
                .collect::<Result<Vec<GraphSpec>>>()?;
            return Ok(GraphSpec::Link(parts));
        }
        for (prefix, optimize) in [("tree-opt:", true), ("tree:", false)] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let tree = OrientedTree::parse(rest)?;
                return Ok(GraphSpec::Tree {
                    tree,
                    optimize,
                    source: rest.trim().to_string(),
                });
            }
        }
        let rows = if let Some(inner) = call(s, "L") {
            numbers(inner)?
        } else if let Some(inner) = call(s, "P") {
            match numbers(inner)?[..] {
                [m, n] => vec![n; m],
                _ => return Err(Error::Parse(format!("P takes two arguments: {s:?}"))),
            }
        } else if let Some(inner) = call(s, "T") {
            match numbers(inner)?[..] {
                [m] => (1..=m).rev().collect(),
                _ => return Err(Error::Parse(format!("T takes one argument: {s:?}"))),
            }
        } else {
            return Err(Error::Parse(format!("unrecognized graph spec {s:?}")));
        };
        validate_rows(&rows)?;
        Ok(GraphSpec::Hexagonal(rows))
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Hexagonal(rows) => {
                let parts: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
                write!(f, "L({})", parts.join(","))
            }
            GraphSpec::Tree {
                optimize, source, ..
            } => {
                write!(
                    f,
                    "{}:{source}",
                    if *optimize { "tree-opt" } else { "tree" }
                )
            }
            GraphSpec::Link(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "link:{}", parts.join("+"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families() {
        assert_eq!(
            "P(2,3)".parse::<GraphSpec>().unwrap(),
            GraphSpec::Hexagonal(vec![3, 3])
        );
        assert_eq!(
            "T(3)".parse::<GraphSpec>().unwrap(),
            GraphSpec::Hexagonal(vec![3, 2, 1])
        );
        assert_eq!(
            " L(3, 1) ".parse::<GraphSpec>().unwrap(),
            GraphSpec::Hexagonal(vec![3, 1])
        );
        let t: GraphSpec = "tree:1>2,1>3".parse().unwrap();
        assert_eq!(t.to_string(), "tree:1>2,1>3");
        let l: GraphSpec = "link:L(1)+P(2,1)".parse().unwrap();
        assert_eq!(l.to_string(), "link:L(1)+L(1,1)");
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!("Q(1)".parse::<GraphSpec>(), Err(Error::Parse(_))));
        assert!(matches!("P(2)".parse::<GraphSpec>(), Err(Error::Parse(_))));
        assert!(matches!(
            "L(1,2)".parse::<GraphSpec>(),
            Err(Error::InvalidRowLengths(_))
        ));
        assert!(matches!("L(a)".parse::<GraphSpec>(), Err(Error::Parse(_))));
        assert!(matches!(
            "tree:1>2,2>1".parse::<GraphSpec>(),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn builds() {
        let caps = Caps::default();
        let g = "P(2,2)".parse::<GraphSpec>().unwrap().build(&caps).unwrap();
        assert_eq!(g.vertex_count(), 16);
        let g = "tree:1>2,1>3"
            .parse::<GraphSpec>()
            .unwrap()
            .build(&caps)
            .unwrap();
        assert_eq!(g.inner_face_count(), 3);
    }
}
