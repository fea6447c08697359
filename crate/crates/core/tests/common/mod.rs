//! Brute-force oracles. Each recomputes a quantity from its definition,
//! reading only the graph's edges, colors and face walks.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use matchlat::lattice::FinitePoset;
use matchlat::{Color, PlaneBipartiteGraph};

/// Perfect matchings by recursion on the lowest uncovered vertex; each
/// returned as a sorted edge list, the list itself sorted.
pub fn naive_matchings(g: &PlaneBipartiteGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut incident = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    fn go(
        g: &PlaneBipartiteGraph,
        incident: &[Vec<usize>],
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            let mut m = chosen.clone();
            m.sort_unstable();
            out.push(m);
            return;
        };
        for &e in &incident[v] {
            let (a, b) = g.edges()[e];
            let w = if a == v { b } else { a };
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            chosen.push(e);
            go(g, incident, covered, chosen, out);
            chosen.pop();
            covered[v] = false;
            covered[w] = false;
        }
    }
    let mut out = Vec::new();
    go(g, &incident, &mut vec![false; n], &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let a: BTreeSet<usize> = a.iter().copied().collect();
    let b: BTreeSet<usize> = b.iter().copied().collect();
    a.symmetric_difference(&b).copied().collect()
}

/// Face twists between matchings, straight from the definition: `i -> j`
/// across `f` when the two differ exactly on the boundary of inner face
/// `f` and the edges of `i` run white to black along its clockwise walk.
pub fn naive_z_arcs(g: &PlaneBipartiteGraph, ms: &[Vec<usize>]) -> BTreeSet<(usize, usize, usize)> {
    let boundaries: Vec<(usize, Vec<usize>)> = g
        .inner_faces()
        .map(|f| {
            let mut es: Vec<usize> = g.face(f).boundary.iter().map(|d| d.edge).collect();
            es.sort_unstable();
            (f, es)
        })
        .collect();
    let mut arcs = BTreeSet::new();
    for i in 0..ms.len() {
        for j in 0..ms.len() {
            let diff = sym_diff(&ms[i], &ms[j]);
            for (f, es) in &boundaries {
                if *es != diff {
                    continue;
                }
                let proper = g
                    .face(*f)
                    .boundary
                    .iter()
                    .filter(|d| ms[i].contains(&d.edge))
                    .all(|d| g.color(d.from) == Color::White);
                if proper {
                    arcs.insert((i, j, *f));
                }
            }
        }
    }
    arcs
}

/// Reachability closure of a digraph by BFS from every node.
pub fn reachability(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in arcs {
        succ[a].push(b);
    }
    (0..n)
        .map(|s| {
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in &succ[v] {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
            seen
        })
        .collect()
}

/// True when no node reaches itself through a nonempty path.
pub fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let reach = reachability(n, arcs);
    arcs.iter().all(|&(a, b)| !reach[b][a])
}

/// Arcs `a -> b` with no longer path from `a` to `b`.
pub fn transitive_reduction(n: usize, arcs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let reach = reachability(n, arcs);
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !reach[a][b] {
                continue;
            }
            let via = (0..n).any(|c| c != a && c != b && reach[a][c] && reach[c][b]);
            if !via {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Inner faces enclosed by an edge set: faces reachable from the outer face
/// in the dual without crossing the set are outside, the rest inside.
pub fn faces_inside(g: &PlaneBipartiteGraph, cycle: &[usize]) -> BTreeSet<usize> {
    let nf = g.faces().len();
    let mut adj = vec![Vec::new(); nf];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if cycle.contains(&e) {
            continue;
        }
        let (a, b) = (g.face_right_of(e, u), g.face_right_of(e, v));
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut outside = vec![false; nf];
    outside[g.outer_face()] = true;
    let mut q = VecDeque::from([g.outer_face()]);
    while let Some(f) = q.pop_front() {
        for &h in &adj[f] {
            if !outside[h] {
                outside[h] = true;
                q.push_back(h);
            }
        }
    }
    (0..nf).filter(|&f| !outside[f]).collect()
}

/// Edge sets of the connected components of an edge set.
pub fn components(g: &PlaneBipartiteGraph, edges: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = edges.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let (a, b) = g.edges()[comp[i]];
            let touching: Vec<usize> = left
                .iter()
                .copied()
                .filter(|&e| {
                    let (c, d) = g.edges()[e];
                    c == a || c == b || d == a || d == b
                })
                .collect();
            for e in touching {
                left.remove(&e);
                comp.push(e);
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Number of cycles of `a ⊕ b` enclosing each inner face.
pub fn naive_delta(g: &PlaneBipartiteGraph, a: &[usize], b: &[usize]) -> BTreeMap<usize, i64> {
    let mut out: BTreeMap<usize, i64> = g.inner_faces().map(|f| (f, 0)).collect();
    for c in components(g, &sym_diff(a, b)) {
        for f in faces_inside(g, &c) {
            *out.get_mut(&f).expect("inner face") += 1;
        }
    }
    out
}

/// Face multiplicities of every directed path from `from` to `to`, stopping
/// after `cap` paths. The flag reports whether the enumeration was complete.
pub fn path_face_counts(
    arcs: &[(usize, usize, usize)],
    from: usize,
    to: usize,
    cap: usize,
) -> (Vec<BTreeMap<usize, i64>>, bool) {
    fn go(
        arcs: &[(usize, usize, usize)],
        at: usize,
        to: usize,
        cap: usize,
        counts: &mut BTreeMap<usize, i64>,
        out: &mut Vec<BTreeMap<usize, i64>>,
    ) -> bool {
        if at == to {
            out.push(
                counts
                    .iter()
                    .filter(|(_, &c)| c != 0)
                    .map(|(&f, &c)| (f, c))
                    .collect(),
            );
            return out.len() < cap;
        }
        for &(a, b, f) in arcs {
            if a != at {
                continue;
            }
            *counts.entry(f).or_insert(0) += 1;
            let more = go(arcs, b, to, cap, counts, out);
            *counts.get_mut(&f).unwrap() -= 1;
            if !more {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    let complete = go(arcs, from, to, cap, &mut BTreeMap::new(), &mut out);
    (out, complete)
}

/// Down-closed subsets of a poset on at most 20 elements, as bitmasks.
pub fn brute_ideals(n: usize, le: impl Fn(usize, usize) -> bool) -> Vec<u32> {
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|x| s >> x & 1 == 0 || (0..n).all(|y| !le(y, x) || s >> y & 1 == 1))
        })
        .collect()
}

pub fn brute_ideals_of(p: &FinitePoset) -> Vec<u32> {
    brute_ideals(p.len(), |a, b| p.le(a, b))
}

/// Meet and join tables from an order relation alone.
pub struct OrderLattice {
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

pub fn order_lattice(n: usize, le: impl Fn(usize, usize) -> bool) -> Option<OrderLattice> {
    let bound = |a: usize, b: usize, upper: bool| -> Option<usize> {
        let ok = |c: usize| {
            if upper {
                le(a, c) && le(b, c)
            } else {
                le(c, a) && le(c, b)
            }
        };
        let cands: Vec<usize> = (0..n).filter(|&c| ok(c)).collect();
        cands.iter().copied().find(|&c| {
            cands
                .iter()
                .all(|&d| if upper { le(c, d) } else { le(d, c) })
        })
    };
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            meet[a][b] = bound(a, b, false)?;
            join[a][b] = bound(a, b, true)?;
        }
    }
    let bottom = (0..n).find(|&x| (0..n).all(|y| le(x, y)))?;
    let top = (0..n).find(|&x| (0..n).all(|y| le(y, x)))?;
    Some(OrderLattice {
        meet,
        join,
        bottom,
        top,
    })
}

impl OrderLattice {
    pub fn len(&self) -> usize {
        self.meet.len()
    }

    /// Triple-loop check of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.meet[a][self.join[b][c]] == self.join[self.meet[a][b]][self.meet[a][c]]
                })
            })
        })
    }

    /// Every `(x, y)` with `x ∧ y = 0̂` and `x ∨ y = 1̂`.
    pub fn complementary_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.meet[x][y] == self.bottom && self.join[x][y] == self.top)
            .collect()
    }
}

/// Digraph isomorphism by trying every permutation; fine up to 8 nodes.
pub fn brute_digraph_iso(n: usize, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let target: BTreeSet<(usize, usize)> = b.iter().copied().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    fn next(perm: &mut [usize]) -> bool {
        let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return false;
        };
        let j = (i..perm.len())
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
        true
    }
    loop {
        if a.iter().all(|&(x, y)| target.contains(&(perm[x], perm[y]))) {
            return true;
        }
        if !next(&mut perm) {
            return false;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}
