//! Isomorphism of small digraphs by colour refinement and backtracking.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use super::poset::FinitePoset;

struct Adjacency {
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
}

impl Adjacency {
    fn new(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut out = vec![FixedBitSet::with_capacity(n); n];
        let mut inn = vec![FixedBitSet::with_capacity(n); n];
        for &(a, b) in arcs {
            out[a].insert(b);
            inn[b].insert(a);
        }
        Adjacency { out, inn }
    }

    fn arc(&self, a: usize, b: usize) -> bool {
        self.out[a].contains(b)
    }
}

/// Jointly refines vertex colours of both graphs so the colours are comparable.
fn refine(a: &Adjacency, b: &Adjacency) -> (Vec<usize>, Vec<usize>) {
    let n = a.out.len();
    let mut ca: Vec<usize> = (0..n)
        .map(|v| a.out[v].count_ones(..) * (n + 1) + a.inn[v].count_ones(..))
        .collect();
    let mut cb: Vec<usize> = (0..n)
        .map(|v| b.out[v].count_ones(..) * (n + 1) + b.inn[v].count_ones(..))
        .collect();
    let mut classes = 0;
    loop {
        let sig = |adj: &Adjacency, col: &[usize], v: usize| {
            let mut outs: Vec<usize> = adj.out[v].ones().map(|w| col[w]).collect();
            let mut ins: Vec<usize> = adj.inn[v].ones().map(|w| col[w]).collect();
            outs.sort_unstable();
            ins.sort_unstable();
            (col[v], outs, ins)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(b, &cb, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            let k = ids.len();
            ids.entry(s.clone()).or_insert(k);
        }
        // canonical numbering independent of insertion order
        let ranked: BTreeMap<_, usize> = ids
            .keys()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        ca = sa.iter().map(|s| ranked[s]).collect();
        cb = sb.iter().map(|s| ranked[s]).collect();
        if ranked.len() == classes {
            return (ca, cb);
        }
        classes = ranked.len();
    }
}

/// Finds `phi` with `(u, v)` an arc of `a` iff `(phi[u], phi[v])` is an arc of `b`.
pub fn digraph_isomorphism(
    n: usize,
    arcs_a: &[(usize, usize)],
    m: usize,
    arcs_b: &[(usize, usize)],
) -> Option<Vec<usize>> {
    if n != m || arcs_a.len() != arcs_b.len() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let a = Adjacency::new(n, arcs_a);
    let b = Adjacency::new(n, arcs_b);
    let (ca, cb) = refine(&a, &b);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return None;
    }
    let mut class_size = BTreeMap::new();
    for &c in &ca {
        *class_size.entry(c).or_insert(0usize) += 1;
    }

    // placement order: stay connected to already placed vertices where possible
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order
                    .iter()
                    .filter(|&&u| a.arc(u, v) || a.arc(v, u))
                    .count();
                (
                    links,
                    std::cmp::Reverse(class_size[&ca[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(0, &order, &a, &b, &ca, &cb, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    k: usize,
    order: &[usize],
    a: &Adjacency,
    b: &Adjacency,
    ca: &[usize],
    cb: &[usize],
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..cb.len() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..k].iter().all(|&u| {
            let x = phi[u];
            a.arc(u, v) == b.arc(x, w) && a.arc(v, u) == b.arc(w, x)
        });
        if !consistent {
            continue;
        }
        phi[v] = w;
        used[w] = true;
        if extend(k + 1, order, a, b, ca, cb, phi, used) {
            return true;
        }
        used[w] = false;
        phi[v] = usize::MAX;
    }
    false
}

/// Order isomorphism between two posets (via their Hasse diagrams).
pub fn poset_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    digraph_isomorphism(p.len(), p.covers(), q.len(), q.covers())
}
