//! Perfect matchings and alternating cycles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::plane_graph::{Dart, PlaneBipartiteGraph};

/// A perfect matching, stored as its sorted edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching(Vec<usize>);

impl Matching {
    /// Validates `edges` as a perfect matching of `g`.
    pub fn new(g: &PlaneBipartiteGraph, mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut covered = vec![false; g.vertex_count()];
        for &e in &edges {
            if e >= g.edge_count() {
                return Err(Error::NotAMatching(format!("unknown edge {e}")));
            }
            let (u, v) = g.edge(e);
            if covered[u] || covered[v] {
                return Err(Error::NotAMatching(format!("edge {e} shares an endpoint")));
            }
            covered[u] = true;
            covered[v] = true;
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::NotAMatching(format!("vertex {v} is unmatched")));
        }
        Ok(Matching(edges))
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    /// Sorted edge ids of `self ⊕ other`.
    pub fn symmetric_difference(&self, other: &Matching) -> Vec<usize> {
        let a: BTreeSet<usize> = self.0.iter().copied().collect();
        let b: BTreeSet<usize> = other.0.iter().copied().collect();
        a.symmetric_difference(&b).copied().collect()
    }

    /// `self ⊕ edges`; the caller guarantees the result is a matching.
    pub fn flip(&self, edges: impl IntoIterator<Item = usize>) -> Matching {
        let mut set: BTreeSet<usize> = self.0.iter().copied().collect();
        for e in edges {
            if !set.remove(&e) {
                set.insert(e);
            }
        }
        Matching(set.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Proper,
    Improper,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Proper => Orientation::Improper,
            Orientation::Improper => Orientation::Proper,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCycleReport {
    /// Clockwise traversal, starting at the smallest edge id.
    pub cycle: Vec<Dart>,
    pub orientation: Orientation,
    pub enclosed_faces: BTreeSet<usize>,
}

impl AlternatingCycleReport {
    pub fn edge_set(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycle.iter().map(|d| d.edge).collect();
        v.sort_unstable();
        v
    }
}

/// All perfect matchings in lexicographic order of their edge-id vectors.
pub fn enumerate_perfect_matchings(g: &PlaneBipartiteGraph, caps: &Caps) -> Result<Vec<Matching>> {
    caps::check("vertices", g.vertex_count(), caps.max_vertices)?;
    let raw = enumerate_raw(g.vertex_count(), g.edges(), caps.max_matchings)?;
    Ok(raw.into_iter().map(Matching).collect())
}

/// Perfect matchings of an abstract graph as sorted edge-index vectors,
/// sorted lexicographically. Branches on a vertex with the fewest free edges.
pub fn enumerate_raw(n: usize, edges: &[(usize, usize)], cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut incident = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    let mut out = Vec::new();
    if n % 2 == 1 {
        return Ok(out);
    }
    let mut state = Search {
        edges,
        incident: &incident,
        matched: vec![false; n],
        chosen: Vec::new(),
        cap,
    };
    state.run(&mut out)?;
    out.sort();
    Ok(out)
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    incident: &'a [Vec<usize>],
    matched: Vec<bool>,
    chosen: Vec<usize>,
    cap: usize,
}

impl Search<'_> {
    fn free_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident[v].iter().copied().filter(move |&e| {
            let (a, b) = self.edges[e];
            let w = if a == v { b } else { a };
            !self.matched[w]
        })
    }

    fn run(&mut self, out: &mut Vec<Vec<usize>>) -> Result<()> {
        let mut best: Option<(usize, usize)> = None;
        for v in (0..self.matched.len()).filter(|&v| !self.matched[v]) {
            let d = self.free_edges(v).count();
            if d == 0 {
                return Ok(());
            }
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((v, d));
            }
        }
        let Some((v, _)) = best else {
            let mut m = self.chosen.clone();
            m.sort_unstable();
            out.push(m);
            return caps::check("matchings", out.len(), self.cap);
        };
        let options: Vec<usize> = self.free_edges(v).collect();
        for e in options {
            let (a, b) = self.edges[e];
            self.matched[a] = true;
            self.matched[b] = true;
            self.chosen.push(e);
            self.run(out)?;
            self.chosen.pop();
            self.matched[a] = false;
            self.matched[b] = false;
        }
        Ok(())
    }
}

/// Orientation of an alternating dart sequence listed clockwise, or `None`
/// when the edges do not alternate in and out of `m`.
pub fn alternating_orientation(
    g: &PlaneBipartiteGraph,
    m: &Matching,
    darts: &[Dart],
) -> Option<Orientation> {
    if darts.len() < 2 || darts.len() % 2 == 1 {
        return None;
    }
    let first_in = m.contains(darts[0].edge);
    for (i, d) in darts.iter().enumerate() {
        if m.contains(d.edge) != (first_in == (i % 2 == 0)) {
            return None;
        }
    }
    let in_dart = if first_in { &darts[0] } else { &darts[1] };
    Some(if g.is_white_to_black(in_dart) {
        Orientation::Proper
    } else {
        Orientation::Improper
    })
}

/// Inner faces whose boundary is `m`-alternating, with their orientation.
pub fn classify_alternating_faces(
    g: &PlaneBipartiteGraph,
    m: &Matching,
) -> Result<Vec<(usize, Orientation)>> {
    Matching::new(g, m.edges().to_vec())?;
    Ok(g.inner_faces()
        .filter(|&f| g.face(f).is_simple_cycle())
        .filter_map(|f| alternating_orientation(g, m, &g.face(f).boundary).map(|o| (f, o)))
        .collect())
}

/// Decomposes `m1 ⊕ m2` into its cycles, each classified against `m1`.
pub fn symmetric_difference_cycles(
    g: &PlaneBipartiteGraph,
    m1: &Matching,
    m2: &Matching,
) -> Result<Vec<AlternatingCycleReport>> {
    Matching::new(g, m1.edges().to_vec())?;
    Matching::new(g, m2.edges().to_vec())?;
    let diff = m1.symmetric_difference(m2);
    let mut remaining: BTreeSet<usize> = diff.iter().copied().collect();
    let mut reports = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        // follow the component of `start`; every vertex has degree 2 in the difference
        let mut comp = vec![start];
        remaining.remove(&start);
        let (first, mut at) = g.edge(start);
        let mut last = start;
        while at != first {
            let next = *g
                .rotation(at)
                .iter()
                .find(|&&e| e != last && remaining.contains(&e))
                .expect("symmetric difference of perfect matchings is a union of cycles");
            remaining.remove(&next);
            comp.push(next);
            at = g.other_end(next, at);
            last = next;
        }
        reports.push(report(g, m1, &comp)?);
    }
    Ok(reports)
}

fn report(
    g: &PlaneBipartiteGraph,
    m: &Matching,
    cycle: &[usize],
) -> Result<AlternatingCycleReport> {
    let (darts, inside) = g.clockwise_cycle(cycle)?;
    let orientation = alternating_orientation(g, m, &darts)
        .ok_or_else(|| Error::NotAMatching("cycle does not alternate".into()))?;
    Ok(AlternatingCycleReport {
        cycle: darts,
        orientation,
        enclosed_faces: inside,
    })
}

/// Edges that lie in exactly one perfect matching.
pub fn forcing_edges(g: &PlaneBipartiteGraph, matchings: &[Matching]) -> Result<Vec<usize>> {
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let mut count = vec![0usize; g.edge_count()];
    for m in matchings {
        for &e in m.edges() {
            count[e] += 1;
        }
    }
    Ok((0..g.edge_count()).filter(|&e| count[e] == 1).collect())
}

/// Edges lying in no perfect matching.
pub fn forbidden_edges(g: &PlaneBipartiteGraph, matchings: &[Matching]) -> Vec<usize> {
    let mut allowed = vec![false; g.edge_count()];
    for m in matchings {
        for &e in m.edges() {
            allowed[e] = true;
        }
    }
    (0..g.edge_count()).filter(|&e| !allowed[e]).collect()
}

/// Every `m`-alternating cycle of `g`, via the matchings `m'` for which
/// `m ⊕ m'` is a single cycle. Ordered by edge set.
pub fn all_alternating_cycles(
    g: &PlaneBipartiteGraph,
    m: &Matching,
    matchings: &[Matching],
) -> Result<Vec<AlternatingCycleReport>> {
    let mut out = Vec::new();
    for other in matchings {
        if other == m {
            continue;
        }
        let diff = m.symmetric_difference(other);
        if g.cycle_vertex_order(&diff).is_ok() {
            out.push(report(g, m, &diff)?);
        }
    }
    out.sort_by_key(|r| r.edge_set());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::Color;

    fn hexagon() -> PlaneBipartiteGraph {
        let colors = (0..6)
            .map(|i| {
                if i % 2 == 0 {
                    Color::White
                } else {
                    Color::Black
                }
            })
            .collect();
        let edges = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let rotation = (0..6).map(|i| vec![(i + 5) % 6, i]).collect();
        PlaneBipartiteGraph::new(colors, edges, rotation, Some(1)).unwrap()
    }

    #[test]
    fn hexagon_matchings_and_orientations() {
        let g = hexagon();
        let ms = enumerate_perfect_matchings(&g, &Caps::default()).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].edges(), &[0, 2, 4]);
        assert_eq!(ms[1].edges(), &[1, 3, 5]);
        // inner walk runs 0 -> 1 with vertex 0 white, so even edges go white to black
        assert_eq!(
            classify_alternating_faces(&g, &ms[0]).unwrap(),
            vec![(0, Orientation::Proper)]
        );
        assert_eq!(
            classify_alternating_faces(&g, &ms[1]).unwrap(),
            vec![(0, Orientation::Improper)]
        );
    }

    #[test]
    fn hexagon_edges_are_all_forcing() {
        let g = hexagon();
        let ms = enumerate_perfect_matchings(&g, &Caps::default()).unwrap();
        assert_eq!(forcing_edges(&g, &ms).unwrap(), (0..6).collect::<Vec<_>>());
        assert_eq!(forcing_edges(&g, &[]), Err(Error::NoPerfectMatching));
    }

    #[test]
    fn symmetric_difference_of_hexagon_matchings() {
        let g = hexagon();
        let ms = enumerate_perfect_matchings(&g, &Caps::default()).unwrap();
        assert!(symmetric_difference_cycles(&g, &ms[0], &ms[0])
            .unwrap()
            .is_empty());
        let r = symmetric_difference_cycles(&g, &ms[0], &ms[1]).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].enclosed_faces, BTreeSet::from([0]));
        assert_eq!(r[0].orientation, Orientation::Proper);
        let back = symmetric_difference_cycles(&g, &ms[1], &ms[0]).unwrap();
        assert_eq!(back[0].orientation, Orientation::Improper);
        for m in &ms {
            assert_eq!(all_alternating_cycles(&g, m, &ms).unwrap().len(), 1);
        }
    }

    #[test]
    fn rejects_non_matchings() {
        let g = hexagon();
        assert!(matches!(
            Matching::new(&g, vec![0, 1, 3]),
            Err(Error::NotAMatching(_))
        ));
        assert!(matches!(
            Matching::new(&g, vec![0, 2]),
            Err(Error::NotAMatching(_))
        ));
    }

    #[test]
    fn odd_vertex_count_has_no_matching() {
        assert!(enumerate_raw(3, &[(0, 1), (1, 2)], 10).unwrap().is_empty());
    }

    #[test]
    fn cap_is_an_error() {
        // 4-cycle has two perfect matchings
        let err = enumerate_raw(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], 1).unwrap_err();
        assert!(matches!(err, Error::SizeCapExceeded { .. }));
    }
}
