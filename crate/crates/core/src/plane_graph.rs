//! Plane bipartite graphs given by a rotation system.
//!
//! Every vertex lists its incident edges in clockwise order as drawn. Faces
//! are traced so that the face always lies on the right of each traversal:
//! after arriving at `v` along `e`, the walk leaves along the edge preceding
//! `e` in the clockwise rotation at `v`. Inner faces therefore come out
//! clockwise and the outer face counter-clockwise.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// One traversal of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub edge: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: usize,
    pub boundary: Vec<Dart>,
    pub is_outer: bool,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|d| d.edge)
    }

    /// True when the walk visits no vertex twice.
    pub fn is_simple_cycle(&self) -> bool {
        if self.boundary.len() < 4 {
            return false;
        }
        let mut seen = HashSet::new();
        self.boundary.iter().all(|d| seen.insert(d.from))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneBipartiteGraph {
    colors: Vec<Color>,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
    faces: Vec<FaceWalk>,
    outer: usize,
    dart_face: Vec<usize>,
}

impl PlaneBipartiteGraph {
    /// Validates the description and traces its faces.
    ///
    /// `outer_face` indexes the traced faces (faces are numbered in order of
    /// their smallest dart, dart `2e` running from `edges[e].0` to `edges[e].1`).
    /// Without it the unique longest face is taken as outer.
    pub fn new(
        colors: Vec<Color>,
        edges: Vec<(usize, usize)>,
        rotation: Vec<Vec<usize>>,
        outer_face: Option<usize>,
    ) -> Result<Self> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::InvalidInput("graph has no vertices".into()));
        }
        if rotation.len() != n {
            return Err(Error::InvalidInput(format!(
                "rotation lists {} vertices, graph has {}",
                rotation.len(),
                n
            )));
        }
        let mut seen_pairs = HashSet::new();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {e} has an unknown endpoint"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("edge {e} is a loop")));
            }
            if !seen_pairs.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
            incident[u].push(e);
            incident[v].push(e);
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut a = rot.clone();
            a.sort_unstable();
            let mut b = incident[v].clone();
            b.sort_unstable();
            if a != b {
                return Err(Error::InvalidInput(format!(
                    "rotation at vertex {v} must list exactly its incident edges"
                )));
            }
        }

        // connectivity and 2-colorability
        let mut side = vec![usize::MAX; n];
        side[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &e in &incident[u] {
                let w = other(edges[e], u);
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(Error::NotBipartite { vertex: w });
                }
            }
        }
        if let Some(v) = side.iter().position(|&s| s == usize::MAX) {
            return Err(Error::Disconnected { vertex: v });
        }
        if let Some(e) = edges.iter().position(|&(u, v)| colors[u] == colors[v]) {
            return Err(Error::ImproperColoring { edge: e });
        }

        let (mut faces, dart_face) = trace(&edges, &rotation);
        let characteristic = n as i64 - edges.len() as i64 + faces.len() as i64;
        if characteristic != 2 {
            return Err(Error::EulerViolation { characteristic });
        }

        let outer = match outer_face {
            Some(f) if f < faces.len() => f,
            Some(f) => {
                return Err(Error::InvalidInput(format!(
                    "outer face {f} out of range ({} faces)",
                    faces.len()
                )))
            }
            None => {
                let longest = faces.iter().map(FaceWalk::len).max().unwrap_or(0);
                let mut candidates = faces.iter().filter(|f| f.len() == longest);
                let first = candidates.next().map(|f| f.id).unwrap_or(0);
                if candidates.next().is_some() {
                    return Err(Error::InputRequired(
                        "several faces share the maximum length; specify outer_face".into(),
                    ));
                }
                first
            }
        };
        faces[outer].is_outer = true;

        Ok(PlaneBipartiteGraph {
            colors,
            edges,
            rotation,
            faces,
            outer,
            dart_face,
        })
    }

    /// Embeds a straight-line drawing (y axis up): rotations follow the
    /// clockwise angular order at each vertex, and the outer face is the one
    /// walked counter-clockwise, i.e. with the largest signed area.
    pub fn from_straight_line(
        colors: Vec<Color>,
        edges: Vec<(usize, usize)>,
        points: &[(i64, i64)],
    ) -> Result<Self> {
        if points.len() != colors.len() {
            return Err(Error::InvalidInput(format!(
                "{} points for {} vertices",
                points.len(),
                colors.len()
            )));
        }
        let mut rotation = vec![Vec::new(); colors.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= colors.len() || v >= colors.len() {
                return Err(Error::InvalidInput(format!(
                    "edge {e} has an unknown endpoint"
                )));
            }
            rotation[u].push(e);
            rotation[v].push(e);
        }
        for (v, rot) in rotation.iter_mut().enumerate() {
            let angle = |e: usize| {
                let w = other(edges[e], v);
                let (dx, dy) = (points[w].0 - points[v].0, points[w].1 - points[v].1);
                (dy as f64).atan2(dx as f64)
            };
            rot.sort_by(|&a, &b| angle(b).total_cmp(&angle(a)));
        }
        let (faces, _) = trace(&edges, &rotation);
        let area = |f: &FaceWalk| -> i64 {
            f.boundary
                .iter()
                .map(|d| points[d.from].0 * points[d.to].1 - points[d.to].0 * points[d.from].1)
                .sum()
        };
        let outer = faces
            .iter()
            .enumerate()
            .max_by_key(|(i, f)| (area(f), std::cmp::Reverse(*i)))
            .map(|(i, _)| i);
        Self::new(colors, edges, rotation, outer)
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn white_end(&self, e: usize) -> usize {
        let (u, v) = self.edges[e];
        if self.colors[u] == Color::White {
            u
        } else {
            v
        }
    }

    pub fn black_end(&self, e: usize) -> usize {
        other(self.edges[e], self.white_end(e))
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        other(self.edges[e], v)
    }

    /// Clockwise incident edges of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &FaceWalk {
        &self.faces[id]
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    pub fn inner_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&f| f != self.outer)
    }

    pub fn inner_face_count(&self) -> usize {
        self.faces.len() - 1
    }

    /// Face lying to the right of the traversal of `edge` leaving `from`.
    pub fn face_right_of(&self, edge: usize, from: usize) -> usize {
        self.dart_face[dart_index(self.edges[edge], edge, from)]
    }

    /// True when the dart runs from its white end to its black end.
    pub fn is_white_to_black(&self, d: &Dart) -> bool {
        self.colors[d.from] == Color::White
    }

    pub fn check_caps(&self, caps: &Caps) -> Result<()> {
        caps::check("vertices", self.vertex_count(), caps.max_vertices)?;
        caps::check("inner faces", self.inner_face_count(), caps.max_inner_faces)
    }

    /// Oriented dual: arc `f -> g` across `e` iff the walk of `f` traverses
    /// `e` from black to white. Bridges (same face on both sides) give no arc.
    pub fn oriented_dual(&self, include_outer: bool) -> DualDigraph {
        let mut arcs = Vec::new();
        for e in 0..self.edges.len() {
            let b = self.black_end(e);
            let w = self.white_end(e);
            let from = self.face_right_of(e, b);
            let to = self.face_right_of(e, w);
            if from == to {
                continue;
            }
            if !include_outer && (from == self.outer || to == self.outer) {
                continue;
            }
            arcs.push(DualArc { from, to, edge: e });
        }
        let nodes = (0..self.faces.len())
            .filter(|&f| include_outer || f != self.outer)
            .collect();
        DualDigraph {
            nodes,
            arcs,
            includes_outer: include_outer,
        }
    }

    /// Inner faces enclosed by the cycle with edge set `cycle`.
    pub fn faces_inside_cycle(&self, cycle: &[usize]) -> Result<BTreeSet<usize>> {
        self.cycle_vertex_order(cycle)?;
        let in_cycle: HashSet<usize> = cycle.iter().copied().collect();
        let mut dsu = Dsu::new(self.faces.len());
        for e in 0..self.edges.len() {
            if in_cycle.contains(&e) {
                continue;
            }
            let (u, v) = self.edges[e];
            dsu.union(self.face_right_of(e, u), self.face_right_of(e, v));
        }
        let root = dsu.find(self.outer);
        Ok(self
            .inner_faces()
            .filter(|&f| dsu.find(f) != root)
            .collect())
    }

    /// The cycle traversed clockwise (interior on the right), starting with
    /// its smallest edge, together with the enclosed inner faces.
    pub fn clockwise_cycle(&self, cycle: &[usize]) -> Result<(Vec<Dart>, BTreeSet<usize>)> {
        let inside = self.faces_inside_cycle(cycle)?;
        let start = *cycle.iter().min().expect("validated cycle is non-empty");
        let (u, v) = self.edges[start];
        let from = if inside.contains(&self.face_right_of(start, u)) {
            u
        } else {
            v
        };
        let in_cycle: HashSet<usize> = cycle.iter().copied().collect();
        let mut darts = Vec::with_capacity(cycle.len());
        let mut edge = start;
        let mut at = from;
        loop {
            let to = self.other_end(edge, at);
            darts.push(Dart { edge, from: at, to });
            if darts.len() == cycle.len() {
                break;
            }
            let next = self.rotation[to]
                .iter()
                .copied()
                .find(|&f| f != edge && in_cycle.contains(&f))
                .expect("validated cycle has degree two everywhere");
            edge = next;
            at = to;
        }
        Ok((darts, inside))
    }

    /// Vertices of a cycle in traversal order; validates that `cycle` is one.
    pub(crate) fn cycle_vertex_order(&self, cycle: &[usize]) -> Result<Vec<usize>> {
        if cycle.len() < 2 {
            return Err(Error::NotACycle("fewer than two edges".into()));
        }
        let mut deg = vec![0usize; self.vertex_count()];
        let mut uniq = HashSet::new();
        for &e in cycle {
            if e >= self.edges.len() {
                return Err(Error::NotACycle(format!("unknown edge {e}")));
            }
            if !uniq.insert(e) {
                return Err(Error::NotACycle(format!("edge {e} repeated")));
            }
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        if let Some(v) = deg.iter().position(|&d| d != 0 && d != 2) {
            return Err(Error::NotACycle(format!(
                "vertex {v} has degree {} in the edge set",
                deg[v]
            )));
        }
        // connectedness of the edge set
        let mut order = Vec::new();
        let mut used = HashSet::new();
        let (first, _) = self.edges[cycle[0]];
        let mut at = first;
        let mut edge = cycle[0];
        loop {
            order.push(at);
            used.insert(edge);
            let to = self.other_end(edge, at);
            if to == first {
                break;
            }
            edge = *cycle
                .iter()
                .find(|&&f| !used.contains(&f) && (self.edges[f].0 == to || self.edges[f].1 == to))
                .expect("degree-two vertex has a second edge");
            at = to;
        }
        if used.len() != cycle.len() {
            return Err(Error::NotACycle(
                "edge set is a union of several cycles".into(),
            ));
        }
        Ok(order)
    }

    /// Checks membership in the class of 2-connected outerplane bipartite graphs.
    pub fn check_outerplane_2connected(&self) -> Result<()> {
        let outer = &self.faces[self.outer];
        if !outer.is_simple_cycle() {
            return Err(Error::NotOuterplane(
                "outer boundary is not a simple cycle".into(),
            ));
        }
        if outer.len() != self.vertex_count() {
            return Err(Error::NotOuterplane(format!(
                "outer boundary has {} of {} vertices",
                outer.len(),
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Forbidden edges, elementary components and (weak) elementarity.
    pub fn elementary_structure(&self, caps: &Caps) -> Result<ElementaryStructure> {
        self.check_caps(caps)?;
        let all = matching::enumerate_perfect_matchings(self, caps)?;
        if all.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let forbidden_edges = matching::forbidden_edges(self, &all);
        let mut allowed = vec![true; self.edge_count()];
        for &e in &forbidden_edges {
            allowed[e] = false;
        }

        let mut dsu = Dsu::new(self.vertex_count());
        for e in (0..self.edge_count()).filter(|&e| allowed[e]) {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.vertex_count()];
        for v in 0..self.vertex_count() {
            let r = dsu.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        let elementary_components: Vec<Vec<usize>> =
            groups.into_iter().filter(|g| g.len() > 2).collect();
        let is_elementary = forbidden_edges.is_empty();

        caps::check(
            "matchings for the weak-elementarity oracle",
            all.len(),
            caps.max_oracle_matchings,
        )?;
        let mut cycles: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                let diff = a.symmetric_difference(b);
                if self.cycle_vertex_order(&diff).is_ok() {
                    cycles.insert(diff);
                }
            }
        }
        let mut is_weakly_elementary = true;
        for c in &cycles {
            let inside = self.faces_inside_cycle(c)?;
            let mut sub_edges: BTreeSet<usize> = c.iter().copied().collect();
            for &f in &inside {
                sub_edges.extend(self.faces[f].edges());
            }
            if !self.edge_subgraph_is_elementary(&sub_edges, caps)? {
                is_weakly_elementary = false;
                break;
            }
        }

        Ok(ElementaryStructure {
            forbidden_edges,
            elementary_components,
            is_elementary,
            is_weakly_elementary,
        })
    }

    fn edge_subgraph_is_elementary(
        &self,
        sub_edges: &BTreeSet<usize>,
        caps: &Caps,
    ) -> Result<bool> {
        let mut relabel = std::collections::BTreeMap::new();
        for &e in sub_edges {
            let (u, v) = self.edges[e];
            let k = relabel.len();
            relabel.entry(u).or_insert(k);
            let k = relabel.len();
            relabel.entry(v).or_insert(k);
        }
        let local: Vec<(usize, usize)> = sub_edges
            .iter()
            .map(|&e| (relabel[&self.edges[e].0], relabel[&self.edges[e].1]))
            .collect();
        let ms = matching::enumerate_raw(relabel.len(), &local, caps.max_matchings)?;
        let mut covered = vec![false; local.len()];
        for m in &ms {
            for &e in m {
                covered[e] = true;
            }
        }
        Ok(!ms.is_empty() && covered.iter().all(|&c| c))
    }

    /// Enumerates the directed cycles of the oriented dual through the outer
    /// face node and maps each one to its primal edge cut.
    pub fn find_e_cuts(&self) -> ECutSearch {
        let dual = self.oriented_dual(true);
        let mut out_arcs: Vec<Vec<&DualArc>> = vec![Vec::new(); self.faces.len()];
        for a in &dual.arcs {
            out_arcs[a.from].push(a);
        }
        let mut cycles = Vec::new();
        let mut on_path = vec![false; self.faces.len()];
        let mut faces = vec![self.outer];
        let mut edges = Vec::new();
        on_path[self.outer] = true;
        dual_cycles(
            self.outer,
            self.outer,
            &out_arcs,
            &mut on_path,
            &mut faces,
            &mut edges,
            &mut cycles,
        );

        let mut cuts = Vec::new();
        for (dual_cycle, cut) in cycles {
            if let Some(c) = self.cut_banks(&cut, dual_cycle) {
                cuts.push(c);
            }
        }
        ECutSearch {
            cuts,
            in_class_g: self.check_outerplane_2connected().is_ok(),
        }
    }

    fn cut_banks(&self, cut: &[usize], dual_cycle: Vec<usize>) -> Option<ECut> {
        let removed: HashSet<usize> = cut.iter().copied().collect();
        let mut dsu = Dsu::new(self.vertex_count());
        for e in (0..self.edge_count()).filter(|e| !removed.contains(e)) {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        let white_root = dsu.find(self.white_end(cut[0]));
        let black_root = dsu.find(self.black_end(cut[0]));
        if white_root == black_root {
            return None;
        }
        let roots: HashSet<usize> = (0..self.vertex_count()).map(|v| dsu.find(v)).collect();
        if roots.len() != 2 {
            return None;
        }
        for &e in cut {
            if dsu.find(self.white_end(e)) != white_root
                || dsu.find(self.black_end(e)) != black_root
            {
                return None;
            }
        }
        let white_bank = (0..self.vertex_count())
            .filter(|&v| dsu.find(v) == white_root)
            .collect();
        let black_bank = (0..self.vertex_count())
            .filter(|&v| dsu.find(v) == black_root)
            .collect();
        let mut edges = cut.to_vec();
        edges.sort_unstable();
        Some(ECut {
            edges,
            white_bank,
            black_bank,
            dual_cycle,
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn dual_cycles(
    start: usize,
    at: usize,
    out_arcs: &[Vec<&DualArc>],
    on_path: &mut [bool],
    faces: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    found: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    for a in &out_arcs[at] {
        if a.to == start {
            edges.push(a.edge);
            found.push((faces.clone(), edges.clone()));
            edges.pop();
        } else if !on_path[a.to] {
            on_path[a.to] = true;
            faces.push(a.to);
            edges.push(a.edge);
            dual_cycles(start, a.to, out_arcs, on_path, faces, edges, found);
            edges.pop();
            faces.pop();
            on_path[a.to] = false;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualArc {
    pub from: usize,
    pub to: usize,
    pub edge: usize,
}

/// Oriented (inner) dual; nodes are face ids of the primal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualDigraph {
    pub nodes: Vec<usize>,
    pub arcs: Vec<DualArc>,
    pub includes_outer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ECut {
    pub edges: Vec<usize>,
    pub white_bank: Vec<usize>,
    pub black_bank: Vec<usize>,
    /// Faces of the directed dual cycle, starting at the outer face.
    pub dual_cycle: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ECutSearch {
    pub cuts: Vec<ECut>,
    /// False when the graph is outside the 2-connected outerplane class, where
    /// the cut/matching correspondence is not guaranteed.
    pub in_class_g: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryStructure {
    pub forbidden_edges: Vec<usize>,
    /// Vertex sets of the components other than K2 after deleting forbidden edges.
    pub elementary_components: Vec<Vec<usize>>,
    pub is_elementary: bool,
    pub is_weakly_elementary: bool,
}

fn other((a, b): (usize, usize), v: usize) -> usize {
    if a == v {
        b
    } else {
        a
    }
}

fn dart_index((a, _): (usize, usize), edge: usize, from: usize) -> usize {
    if a == from {
        2 * edge
    } else {
        2 * edge + 1
    }
}

/// Face tracing over darts; returns the faces and the face of every dart.
pub fn trace(edges: &[(usize, usize)], rotation: &[Vec<usize>]) -> (Vec<FaceWalk>, Vec<usize>) {
    if edges.is_empty() {
        return (
            vec![FaceWalk {
                id: 0,
                boundary: Vec::new(),
                is_outer: false,
            }],
            Vec::new(),
        );
    }
    let pos: Vec<std::collections::HashMap<usize, usize>> = rotation
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &e)| (e, i)).collect())
        .collect();
    let mut dart_face = vec![usize::MAX; 2 * edges.len()];
    let mut faces = Vec::new();
    for start in 0..2 * edges.len() {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut boundary = Vec::new();
        let mut d = start;
        while dart_face[d] == usize::MAX {
            dart_face[d] = id;
            let edge = d / 2;
            let (a, b) = edges[edge];
            let (from, to) = if d % 2 == 0 { (a, b) } else { (b, a) };
            boundary.push(Dart { edge, from, to });
            let rot = &rotation[to];
            let k = pos[to][&edge];
            let next = rot[(k + rot.len() - 1) % rot.len()];
            d = dart_index(edges[next], next, to);
        }
        faces.push(FaceWalk {
            id,
            boundary,
            is_outer: false,
        });
    }
    (faces, dart_face)
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hexagon 0..5 with vertex 0 white; outer face is the reverse walk.
    pub(crate) fn hexagon() -> PlaneBipartiteGraph {
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

    /// Two squares sharing edge 1-4: 0-1-2 on top, 5-4-3 below, drawn left to right.
    fn ladder() -> PlaneBipartiteGraph {
        // vertices: 0 (0,1) 1 (1,1) 2 (2,1) 3 (2,0) 4 (1,0) 5 (0,0)
        let colors = vec![
            Color::White,
            Color::Black,
            Color::White,
            Color::Black,
            Color::White,
            Color::Black,
        ];
        let edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)];
        // clockwise with y up: E, S, W, N order starting anywhere
        let rotation = vec![
            vec![0, 5],    // 0: east(0), south(5)
            vec![1, 6, 0], // 1: east, south, west
            vec![2, 1],    // 2: south, west
            vec![3, 2],    // 3: west, north
            vec![4, 6, 3], // 4: west, north, east
            vec![5, 4],    // 5: north, east
        ];
        PlaneBipartiteGraph::new(colors, edges, rotation, None).unwrap()
    }

    #[test]
    fn hexagon_has_two_faces() {
        let g = hexagon();
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 6));
        assert_eq!(g.outer_face(), 1);
        assert_eq!(g.inner_faces().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn single_edge_has_one_face() {
        let g = PlaneBipartiteGraph::new(
            vec![Color::White, Color::Black],
            vec![(0, 1)],
            vec![vec![0], vec![0]],
            None,
        )
        .unwrap();
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.outer_face(), 0);
        assert_eq!(g.inner_face_count(), 0);
    }

    #[test]
    fn improper_coloring_is_rejected() {
        use Color::*;
        let colors = vec![White, White, Black, White, Black, Black];
        let edges = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let rotation = (0..6).map(|i| vec![(i + 5) % 6, i]).collect();
        let err = PlaneBipartiteGraph::new(colors, edges, rotation, Some(1)).unwrap_err();
        assert!(matches!(err, Error::ImproperColoring { .. }));
    }

    #[test]
    fn odd_cycle_and_disconnected_and_duplicates() {
        use Color::*;
        let tri = PlaneBipartiteGraph::new(
            vec![White, Black, White],
            vec![(0, 1), (1, 2), (2, 0)],
            vec![vec![2, 0], vec![0, 1], vec![1, 2]],
            Some(0),
        );
        assert!(matches!(tri, Err(Error::NotBipartite { .. })));
        let split = PlaneBipartiteGraph::new(
            vec![White, Black, White, Black],
            vec![(0, 1), (2, 3)],
            vec![vec![0], vec![0], vec![1], vec![1]],
            None,
        );
        assert!(matches!(split, Err(Error::Disconnected { vertex: 2 })));
        let dup = PlaneBipartiteGraph::new(
            vec![White, Black],
            vec![(0, 1), (1, 0)],
            vec![vec![0, 1], vec![0, 1]],
            None,
        );
        assert!(matches!(dup, Err(Error::DuplicateEdge { .. })));
    }

    #[test]
    fn nonplanar_rotation_violates_euler() {
        // K_{3,3} cannot be embedded in the plane.
        use Color::*;
        let colors = vec![White, White, White, Black, Black, Black];
        let mut edges = Vec::new();
        for w in 0..3 {
            for b in 3..6 {
                edges.push((w, b));
            }
        }
        let mut rotation = vec![Vec::new(); 6];
        for (e, &(u, v)) in edges.iter().enumerate() {
            rotation[u].push(e);
            rotation[v].push(e);
        }
        let err = PlaneBipartiteGraph::new(colors, edges, rotation, None).unwrap_err();
        assert!(matches!(err, Error::EulerViolation { .. }));
    }

    #[test]
    fn ladder_faces_and_inner_orientation() {
        let g = ladder();
        let mut lens: Vec<usize> = g.faces().iter().map(FaceWalk::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![4, 4, 6]);
        assert_eq!(g.face(g.outer_face()).len(), 6);
        // left square traversed clockwise: 0 -> 1 -> 4 -> 5
        let left = g.face_right_of(0, 0);
        let walk: Vec<usize> = g.face(left).boundary.iter().map(|d| d.from).collect();
        let k = walk.iter().position(|&v| v == 0).unwrap();
        let rotated: Vec<usize> = walk[k..].iter().chain(&walk[..k]).copied().collect();
        assert_eq!(rotated, vec![0, 1, 4, 5]);
    }

    #[test]
    fn every_edge_used_twice_in_opposite_directions() {
        let g = ladder();
        let mut darts = HashSet::new();
        for f in g.faces() {
            for d in &f.boundary {
                assert!(darts.insert((d.edge, d.from)));
            }
        }
        assert_eq!(darts.len(), 2 * g.edge_count());
    }

    #[test]
    fn ladder_inner_dual_is_one_arc() {
        let g = ladder();
        let dual = g.oriented_dual(false);
        assert_eq!(dual.arcs.len(), 1);
        assert_eq!(dual.arcs[0].edge, 6);
        // shared edge 1-4: vertex 4 white. Left square walks 1 -> 4 (black to
        // white), so the arc leaves the left square.
        assert_eq!(dual.arcs[0].from, g.face_right_of(0, 0));
        let full = g.oriented_dual(true);
        assert_eq!(full.arcs.len(), 7);
    }

    #[test]
    fn hexagon_dual_arcs_alternate() {
        let g = hexagon();
        let dual = g.oriented_dual(true);
        assert_eq!(dual.arcs.len(), 6);
        for a in &dual.arcs {
            // inner walk runs 0 -> 1 -> ... with even vertices white
            let leaves_inner = a.from == 0;
            assert_eq!(leaves_inner, a.edge % 2 == 1, "edge {}", a.edge);
        }
    }

    #[test]
    fn faces_inside_cycles() {
        let g = ladder();
        let boundary: Vec<usize> = (0..6).collect();
        assert_eq!(g.faces_inside_cycle(&boundary).unwrap().len(), 2);
        let left = g.face_right_of(0, 0);
        let left_edges: Vec<usize> = g.face(left).edges().collect();
        assert_eq!(
            g.faces_inside_cycle(&left_edges).unwrap(),
            BTreeSet::from([left])
        );
        assert!(matches!(
            g.faces_inside_cycle(&[0, 1]),
            Err(Error::NotACycle(_))
        ));
    }

    #[test]
    fn clockwise_cycle_has_interior_on_right() {
        let g = ladder();
        let boundary: Vec<usize> = (0..6).collect();
        let (darts, inside) = g.clockwise_cycle(&boundary).unwrap();
        assert_eq!(inside.len(), 2);
        assert_eq!(
            darts[0],
            Dart {
                edge: 0,
                from: 0,
                to: 1
            }
        );
        for d in &darts {
            assert!(inside.contains(&g.face_right_of(d.edge, d.from)));
        }
    }

    #[test]
    fn hexagon_e_cuts() {
        // any two edges of different parity separate a bank whose cut edges all
        // meet white vertices of one side: 3 x 3 directed 2-cycles in the dual
        let g = hexagon();
        let search = g.find_e_cuts();
        assert_eq!(search.cuts.len(), 9);
        assert!(search.in_class_g);
        for c in &search.cuts {
            assert_eq!(c.edges.len(), 2);
            assert_ne!(c.edges[0] % 2, c.edges[1] % 2);
        }
    }

    #[test]
    fn k2_has_no_e_cuts_and_is_elementary() {
        let g = PlaneBipartiteGraph::new(
            vec![Color::White, Color::Black],
            vec![(0, 1)],
            vec![vec![0], vec![0]],
            None,
        )
        .unwrap();
        assert!(g.find_e_cuts().cuts.is_empty());
        let s = g.elementary_structure(&Caps::default()).unwrap();
        assert!(s.is_elementary && s.is_weakly_elementary);
        assert!(s.elementary_components.is_empty());
    }

    #[test]
    fn ladder_is_elementary() {
        let s = ladder().elementary_structure(&Caps::default()).unwrap();
        assert!(s.is_elementary);
        assert!(s.is_weakly_elementary);
        assert_eq!(s.elementary_components, vec![(0..6).collect::<Vec<_>>()]);
    }
}
