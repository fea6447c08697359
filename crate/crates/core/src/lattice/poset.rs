use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite poset stored as its cover relation plus the reflexive order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<FixedBitSet>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Builds a poset from `(lower, upper)` cover pairs. The pairs must form
    /// an acyclic, irredundant relation.
    pub fn from_covers(labels: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut sorted = covers.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != covers.len() {
            return Err(Error::InvalidPoset("duplicate cover pair".into()));
        }
        let p = Self::from_arcs(labels, covers)?;
        if p.covers.len() != sorted.len() {
            let redundant = sorted
                .iter()
                .find(|c| p.covers.binary_search(c).is_err())
                .copied();
            return Err(Error::InvalidPoset(format!(
                "cover {:?} is implied by transitivity",
                redundant.unwrap()
            )));
        }
        debug_assert!(p.covers.iter().all(|&(a, b)| a < n && b < n));
        Ok(p)
    }

    /// Builds the poset generated by the `(lower, upper)` arcs; redundant arcs
    /// are dropped by transitive reduction.
    pub fn from_arcs(labels: Vec<String>, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("arc ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("loop at {a}")));
            }
            succ[a].push(b);
        }
        let order = topological_order(&succ)
            .ok_or_else(|| Error::InvalidPoset("relation has a directed cycle".into()))?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(v);
            for &w in &succ[v] {
                set.union_with(&up[w]);
            }
            up[v] = set;
        }
        Ok(Self::from_closure(labels, up))
    }

    /// Builds the poset whose order is `le`; the relation must be a partial order.
    pub fn from_leq(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, set) in up.iter_mut().enumerate() {
            set.extend((0..n).filter(|&b| le(a, b)));
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::InvalidPoset(format!("not reflexive at {a}")));
            }
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(Error::InvalidPoset(format!(
                        "{a} and {b} violate antisymmetry"
                    )));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::InvalidPoset(format!(
                        "transitivity fails above {a} <= {b}"
                    )));
                }
            }
        }
        Ok(Self::from_closure(labels, up))
    }

    fn from_closure(labels: Vec<String>, up: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        let mut covers = Vec::new();
        for a in 0..n {
            // minimal elements of the strict up-set are the upper covers
            let mut above_above = FixedBitSet::with_capacity(n);
            for c in up[a].ones().filter(|&c| c != a) {
                let mut strict = up[c].clone();
                strict.set(c, false);
                above_above.union_with(&strict);
            }
            for b in up[a].ones() {
                if b != a && !above_above.contains(b) {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        FinitePoset {
            labels,
            covers,
            up,
            lower,
            upper,
        }
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

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Sorted `(lower, upper)` cover pairs.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// `{b : a <= b}`.
    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lower[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.upper[x].is_empty())
            .collect()
    }

    /// Linear extension taking the smallest available index first.
    pub fn linear_extension(&self) -> Vec<usize> {
        topological_order(&self.upper).expect("poset covers are acyclic")
    }

    /// Length of the longest chain ending at each element (minimal elements get 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.len()];
        for x in self.linear_extension() {
            h[x] = self.lower[x].iter().map(|&y| h[y] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Induced subposet on `elements` (kept in the given order).
    pub fn subposet(&self, elements: &[usize]) -> FinitePoset {
        let labels = elements.iter().map(|&x| self.labels[x].clone()).collect();
        FinitePoset::from_leq(labels, |a, b| self.le(elements[a], elements[b]))
            .expect("restriction of a partial order is a partial order")
    }

    pub fn dual(&self) -> FinitePoset {
        let arcs = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        FinitePoset::from_arcs(self.labels.clone(), arcs).expect("dual of a poset is a poset")
    }

    /// Connected components of the comparability graph, each sorted, ordered
    /// by smallest element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in self.lower[x].iter().chain(&self.upper[x]) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// True when `set` (over element indices) is down-closed.
    pub fn is_order_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones()
            .all(|x| self.lower[x].iter().all(|&y| set.contains(y)))
    }

    /// The `n`-element chain labelled `1..=n`.
    pub fn chain(n: usize) -> FinitePoset {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let covers = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_covers(labels, covers).expect("chain covers are valid")
    }

    /// The product of chains `m × n`; element `(i, j)` (1-based) sits at `(i-1)*n + (j-1)`.
    pub fn grid(m: usize, n: usize) -> FinitePoset {
        let idx = |i: usize, j: usize| i * n + j;
        let mut labels = Vec::new();
        let mut covers = Vec::new();
        for i in 0..m {
            for j in 0..n {
                labels.push(format!("({},{})", i + 1, j + 1));
                if i + 1 < m {
                    covers.push((idx(i, j), idx(i + 1, j)));
                }
                if j + 1 < n {
                    covers.push((idx(i, j), idx(i, j + 1)));
                }
            }
        }
        FinitePoset::from_covers(labels, covers).expect("grid covers are valid")
    }

    /// Disjoint union; elements of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &FinitePoset) -> FinitePoset {
        let k = self.len();
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        let covers = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(a, b)| (a + k, b + k)))
            .collect();
        FinitePoset::from_covers(labels, covers).expect("disjoint union of posets")
    }
}

/// Kahn's algorithm, smallest index first; `None` on a cycle.
pub(crate) fn topological_order(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &w in s {
            indeg[w] += 1;
        }
    }
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| indeg[v] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(std::cmp::Reverse(v)) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(std::cmp::Reverse(w));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Some vertex lying on a directed cycle, if the digraph has one.
pub(crate) fn node_on_cycle(succ: &[Vec<usize>]) -> Option<usize> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    let mut pred = vec![Vec::new(); n];
    for (v, s) in succ.iter().enumerate() {
        for &w in s {
            indeg[w] += 1;
            pred[w].push(v);
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = vec![false; n];
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    // every survivor has a surviving predecessor; walking back must repeat
    let mut v = (0..n).find(|&v| !removed[v])?;
    let mut seen = vec![false; n];
    while !seen[v] {
        seen[v] = true;
        v = *pred[v]
            .iter()
            .find(|&&u| !removed[u])
            .expect("survivor has a surviving predecessor");
    }
    Some(v)
}
