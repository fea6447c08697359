//! Outerplane bipartite graphs whose directed inner dual is a given
//! oriented tree.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::digraph_isomorphism;
use crate::plane_graph::{Color, PlaneBipartiteGraph};

/// An orientation of a tree on nodes `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedTree {
    labels: Vec<String>,
    arcs: Vec<(usize, usize)>,
}

impl OrientedTree {
    pub fn new(labels: Vec<String>, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotATree("no nodes".into()));
        }
        if arcs.len() + 1 != n {
            return Err(Error::NotATree(format!("{} arcs on {n} nodes", arcs.len())));
        }
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            if a >= n || b >= n || a == b {
                return Err(Error::NotATree(format!("bad arc ({a}, {b})")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::NotATree(format!("repeated pair ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = reached.iter().position(|r| !r) {
            return Err(Error::NotATree(format!(
                "node {} is not connected",
                labels[v]
            )));
        }
        Ok(OrientedTree { labels, arcs })
    }

    /// Nodes labelled `0..n`.
    pub fn unlabelled(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), arcs)
    }

    /// Parses `a>b,c<d,...` over arbitrary node labels; a single label
    /// gives the one-node tree. Nodes are numbered by first appearance.
    pub fn parse(s: &str) -> Result<Self> {
        fn id(name: &str, labels: &mut Vec<String>) -> Result<usize> {
            let name = name.trim();
            if name.is_empty() {
                return Err(Error::Parse("empty node name".into()));
            }
            Ok(labels.iter().position(|l| l == name).unwrap_or_else(|| {
                labels.push(name.to_string());
                labels.len() - 1
            }))
        }
        let mut labels: Vec<String> = Vec::new();
        let mut arcs = Vec::new();
        for item in s.split(',') {
            if let Some((a, b)) = item.split_once('>') {
                let (a, b) = (id(a, &mut labels)?, id(b, &mut labels)?);
                arcs.push((a, b));
            } else if let Some((a, b)) = item.split_once('<') {
                let (a, b) = (id(a, &mut labels)?, id(b, &mut labels)?);
                arcs.push((b, a));
            } else {
                id(item, &mut labels)?;
            }
        }
        Self::new(labels, arcs)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len())
            .map(|v| self.in_degree(v) + self.out_degree(v))
            .max()
            .unwrap_or(0)
    }
}

/// One representative edge list of every unlabelled tree on `n` nodes.
/// Each representative numbers its nodes so that parents precede children.
pub fn tree_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    let mut shapes = Vec::new();
    let mut parent = vec![0usize; n];
    fn grow(
        k: usize,
        parent: &mut Vec<usize>,
        seen: &mut BTreeSet<String>,
        shapes: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let n = parent.len();
        if k == n {
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (parent[v], v)).collect();
            if seen.insert(canonical_form(n, &edges)) {
                shapes.push(edges);
            }
            return;
        }
        for p in 0..k {
            parent[k] = p;
            grow(k + 1, parent, seen, shapes);
        }
    }
    grow(1, &mut parent, &mut seen, &mut shapes);
    shapes
}

/// Canonical string of an unlabelled tree: the smallest rooted encoding
/// over its centres.
fn canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    fn encode(v: usize, from: usize, adj: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != from)
            .map(|&w| encode(w, v, adj))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    // peel leaves to find the centre(s)
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(c, usize::MAX, &adj))
        .min()
        .unwrap_or_default()
}

/// All `2^(n-1)` orientations of an unlabelled tree shape.
pub fn orientations(n: usize, edges: &[(usize, usize)]) -> Vec<OrientedTree> {
    (0..1usize << edges.len())
        .map(|mask| {
            let arcs = edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            OrientedTree::unlabelled(n, arcs).expect("orienting a tree gives a tree")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplaneRealization {
    pub graph: PlaneBipartiteGraph,
    /// Inner face realizing each tree node.
    pub face_of_node: Vec<usize>,
}

/// Glues one even cycle per tree node along shared edges. A shared edge is
/// walked black to white by the face of the arc's tail. Faces have length
/// `2·max(Δ, 2)`, or `2·max(in, out, 2)` per node when `optimize` is set.
pub fn tree_to_outerplane(tree: &OrientedTree, optimize: bool) -> Result<OuterplaneRealization> {
    let n = tree.len();
    let half = |v: usize| {
        if optimize {
            tree.in_degree(v).max(tree.out_degree(v)).max(2)
        } else {
            tree.max_degree().max(2)
        }
    };

    // outer boundary in clockwise order; every face walk is a clockwise
    // sequence of consecutive steps (x, y)
    let k0 = half(0);
    let mut colors: Vec<Color> = (0..2 * k0)
        .map(|i| {
            if i % 2 == 0 {
                Color::White
            } else {
                Color::Black
            }
        })
        .collect();
    let mut boundary: Vec<usize> = (0..2 * k0).collect();
    let mut walks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    walks[0] = (0..2 * k0).map(|i| (i, (i + 1) % (2 * k0))).collect();
    let mut used: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut edges: BTreeSet<(usize, usize)> = walks[0]
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();

    let mut adj = vec![Vec::new(); n];
    for &(a, b) in tree.arcs() {
        adj[a].push((b, true));
        adj[b].push((a, false));
    }
    let mut placed = vec![false; n];
    placed[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(c, outgoing) in &adj[v] {
            if placed[c] {
                continue;
            }
            // an arc leaving v needs a black-to-white step of v's walk
            let want = if outgoing { Color::Black } else { Color::White };
            let slot = (0..walks[v].len())
                .find(|&s| !used[v].contains(&s) && colors[walks[v][s].0] == want)
                .ok_or_else(|| {
                    Error::EmbeddingConflict(format!(
                        "face of node {} has no free slot",
                        tree.labels()[v]
                    ))
                })?;
            used[v].insert(slot);
            let (x, y) = walks[v][slot];
            let pos = boundary
                .iter()
                .position(|&b| b == x)
                .expect("face vertices lie on the boundary");
            if boundary[(pos + 1) % boundary.len()] != y {
                return Err(Error::EmbeddingConflict(format!(
                    "edge {x}-{y} is no longer on the outer boundary"
                )));
            }
            let k = half(c);
            let fresh: Vec<usize> = (0..2 * k - 2).map(|i| colors.len() + i).collect();
            for i in 0..fresh.len() {
                colors.push(if i % 2 == 0 {
                    colors[x].other()
                } else {
                    colors[x]
                });
            }
            boundary.splice(pos + 1..pos + 1, fresh.iter().copied());
            let mut cycle = vec![x];
            cycle.extend(&fresh);
            cycle.push(y);
            let mut walk: Vec<(usize, usize)> = cycle.windows(2).map(|w| (w[0], w[1])).collect();
            walk.push((y, x));
            edges.extend(walk.iter().map(|&(a, b)| (a.min(b), a.max(b))));
            used[c].insert(walk.len() - 1);
            walks[c] = walk;
            placed[c] = true;
            queue.push_back(c);
        }
    }

    // vertices on the concave arc y = -x^2 in boundary order: clockwise
    let mut points = vec![(0, 0); colors.len()];
    for (p, &v) in boundary.iter().enumerate() {
        points[v] = (p as i64, -(p as i64) * (p as i64));
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let edge_id: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let graph = PlaneBipartiteGraph::from_straight_line(colors, edges, &points)?;
    let face_of_node: Vec<usize> = walks
        .iter()
        .map(|w| {
            let (x, y) = w[0];
            graph.face_right_of(edge_id[&(x.min(y), x.max(y))], x)
        })
        .collect();

    for (v, w) in walks.iter().enumerate() {
        if graph.face(face_of_node[v]).len() != w.len() {
            return Err(Error::EmbeddingConflict(format!(
                "face of node {} has the wrong length",
                tree.labels()[v]
            )));
        }
    }
    let node_of_face: HashMap<usize, usize> = face_of_node
        .iter()
        .enumerate()
        .map(|(v, &f)| (f, v))
        .collect();
    let mut dual: Vec<(usize, usize)> = graph
        .oriented_dual(false)
        .arcs
        .iter()
        .map(|a| (node_of_face[&a.from], node_of_face[&a.to]))
        .collect();
    dual.sort_unstable();
    let mut expected = tree.arcs().to_vec();
    expected.sort_unstable();
    if dual != expected || digraph_isomorphism(n, &dual, n, tree.arcs()).is_none() {
        return Err(Error::IsoFailure(
            "directed inner dual differs from the tree".into(),
        ));
    }
    Ok(OuterplaneRealization {
        graph,
        face_of_node,
    })
}
