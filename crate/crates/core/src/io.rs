//! JSON and DOT serialization.
//!
//! Graph JSON:
//! `{"vertices":[{"id":0,"color":"white"}], "edges":[[0,1]],
//!   "rotation":{"0":[edge ids clockwise]}, "outer_face":1}`.
//! Vertex ids are arbitrary integers; edges and rotations refer to them.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, FinitePoset};
use crate::matching::Matching;
use crate::plane_graph::{Color, DualDigraph, PlaneBipartiteGraph};
use crate::ztransform::ZDigraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: i64,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[i64; 2]>,
    pub rotation: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<usize>,
}

impl GraphJson {
    pub fn from_graph(g: &PlaneBipartiteGraph) -> Self {
        GraphJson {
            vertices: (0..g.vertex_count())
                .map(|v| VertexJson {
                    id: v as i64,
                    color: g.color(v),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| [u as i64, v as i64])
                .collect(),
            rotation: (0..g.vertex_count())
                .map(|v| (v.to_string(), g.rotation(v).to_vec()))
                .collect(),
            outer_face: Some(g.outer_face()),
        }
    }

    pub fn to_graph(&self) -> Result<PlaneBipartiteGraph> {
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id, i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex id {}", v.id)));
            }
        }
        let lookup = |id: i64| {
            index
                .get(&id)
                .copied()
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex id {id}")))
        };
        let edges = self
            .edges
            .iter()
            .map(|&[u, v]| Ok((lookup(u)?, lookup(v)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut rotation = vec![None; self.vertices.len()];
        for (key, rot) in &self.rotation {
            let id: i64 = key
                .parse()
                .map_err(|_| Error::Parse(format!("rotation key {key:?} is not a vertex id")))?;
            rotation[lookup(id)?] = Some(rot.clone());
        }
        let rotation = rotation
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                r.ok_or_else(|| {
                    Error::InvalidInput(format!("vertex {} has no rotation", self.vertices[i].id))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let colors = self.vertices.iter().map(|v| v.color).collect();
        PlaneBipartiteGraph::new(colors, edges, rotation, self.outer_face)
    }
}

pub fn graph_to_json(g: &PlaneBipartiteGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("graph JSON serializes")
}

pub fn graph_from_json(text: &str) -> Result<PlaneBipartiteGraph> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parsed.to_graph()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    /// `(lower, upper)` pairs.
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<usize>>>,
}

impl PosetJson {
    pub fn from_poset(p: &FinitePoset) -> Self {
        PosetJson {
            elements: p.labels().to_vec(),
            covers: p.covers().iter().map(|&(a, b)| [a, b]).collect(),
            rank: None,
            meet: None,
            join: None,
        }
    }

    pub fn from_lattice(l: &FiniteLattice, tables: bool) -> Self {
        let mut out = Self::from_poset(l.poset());
        out.rank = l.rank_check().ok();
        if tables {
            let n = l.len();
            out.meet = Some(
                (0..n)
                    .map(|a| (0..n).map(|b| l.meet(a, b)).collect())
                    .collect(),
            );
            out.join = Some(
                (0..n)
                    .map(|a| (0..n).map(|b| l.join(a, b)).collect())
                    .collect(),
            );
        }
        out
    }

    pub fn to_poset(&self) -> Result<FinitePoset> {
        FinitePoset::from_covers(
            self.elements.clone(),
            self.covers.iter().map(|&[a, b]| (a, b)).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingsJson {
    pub count: usize,
    pub matchings: Vec<Matching>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZArcJson {
    pub from: usize,
    pub to: usize,
    pub face: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZDigraphJson {
    pub matchings: Vec<Matching>,
    pub arcs: Vec<ZArcJson>,
}

impl ZDigraphJson {
    pub fn from_digraph(z: &ZDigraph) -> Self {
        ZDigraphJson {
            matchings: z.matchings().to_vec(),
            arcs: z
                .arcs()
                .iter()
                .map(|a| ZArcJson {
                    from: a.from,
                    to: a.to,
                    face: a.face,
                })
                .collect(),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected drawing of `g`; white vertices hollow, black filled.
pub fn graph_to_dot(g: &PlaneBipartiteGraph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, width=0.25, label=\"\"];\n");
    for v in 0..g.vertex_count() {
        let style = match g.color(v) {
            Color::White => "fillcolor=white",
            Color::Black => "fillcolor=black",
        };
        writeln!(
            out,
            "  v{v} [style=filled, {style}, xlabel={}];",
            quote(&v.to_string())
        )
        .unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "  v{u} -- v{v} [label={}];", quote(&format!("e{e}"))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Oriented dual with each arc labelled by the primal edge it crosses.
pub fn dual_to_dot(d: &DualDigraph, outer: usize) -> String {
    let mut out = String::from("digraph Dual {\n");
    for &f in &d.nodes {
        let shape = if f == outer { "doublecircle" } else { "circle" };
        writeln!(out, "  f{f} [shape={shape}];").unwrap();
    }
    for a in &d.arcs {
        writeln!(
            out,
            "  f{} -> f{} [label={}];",
            a.from,
            a.to,
            quote(&format!("e{}", a.edge))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// The Z-transformation digraph, arcs labelled by the twisted face.
pub fn zdigraph_to_dot(z: &ZDigraph) -> String {
    let mut out = String::from("digraph Z {\n  rankdir=TB;\n");
    for (i, m) in z.matchings().iter().enumerate() {
        writeln!(
            out,
            "  M{i} [tooltip={}];",
            quote(&format!("{:?}", m.edges()))
        )
        .unwrap();
    }
    for a in z.arcs() {
        writeln!(
            out,
            "  M{} -> M{} [label={}];",
            a.from,
            a.to,
            quote(&format!("f{}", a.face))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram, top element first, one rank per row.
pub fn hasse_to_dot(p: &FinitePoset, rank: &[usize]) -> String {
    let mut out = String::from("digraph Hasse {\n  rankdir=BT;\n  edge [arrowhead=none];\n");
    let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, &r) in rank.iter().enumerate() {
        levels.entry(r).or_default().push(x);
    }
    for (x, label) in p.labels().iter().enumerate() {
        writeln!(out, "  n{x} [label={}];", quote(label)).unwrap();
    }
    for xs in levels.values() {
        let names: Vec<String> = xs.iter().map(|x| format!("n{x}")).collect();
        writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
    }
    for &(a, b) in p.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
