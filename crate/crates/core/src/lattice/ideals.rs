use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::finite::FiniteLattice;
use super::poset::FinitePoset;
use crate::caps::{self, Caps};
use crate::error::Result;

/// `J(P)`: the down-sets of `P` ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLattice {
    pub lattice: FiniteLattice,
    /// Ideal of each lattice element, as a bitset over the elements of `P`.
    pub ideals: Vec<FixedBitSet>,
    index: HashMap<FixedBitSet, usize>,
}

impl IdealLattice {
    pub fn index_of(&self, ideal: &FixedBitSet) -> Option<usize> {
        self.index.get(ideal).copied()
    }
}

/// Enumerates every order ideal of `p` along a fixed linear extension:
/// an element may join the ideal only once all of its lower covers have.
pub fn enumerate_ideals(p: &FinitePoset, cap: usize) -> Result<Vec<FixedBitSet>> {
    let order = p.linear_extension();
    let mut out = Vec::new();
    let mut current = FixedBitSet::with_capacity(p.len());
    walk(p, &order, 0, &mut current, &mut out, cap)?;
    out.sort_by(|a, b| {
        a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| {
            a.ones()
                .collect::<Vec<_>>()
                .cmp(&b.ones().collect::<Vec<_>>())
        })
    });
    Ok(out)
}

fn walk(
    p: &FinitePoset,
    order: &[usize],
    k: usize,
    current: &mut FixedBitSet,
    out: &mut Vec<FixedBitSet>,
    cap: usize,
) -> Result<()> {
    if k == order.len() {
        out.push(current.clone());
        return caps::check("order ideals", out.len(), cap);
    }
    let x = order[k];
    walk(p, order, k + 1, current, out, cap)?;
    if p.lower_covers(x).iter().all(|&y| current.contains(y)) {
        current.insert(x);
        walk(p, order, k + 1, current, out, cap)?;
        current.set(x, false);
    }
    Ok(())
}

/// Builds `J(p)` with meet = intersection and join = union.
pub fn order_ideal_lattice(p: &FinitePoset, caps: &Caps) -> Result<IdealLattice> {
    let ideals = enumerate_ideals(p, caps.max_lattice_elements)?;
    let n = ideals.len();
    let index: HashMap<FixedBitSet, usize> = ideals
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let labels = ideals
        .iter()
        .map(|s| {
            format!(
                "{{{}}}",
                s.ones().map(|x| p.label(x)).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    let mut covers = Vec::new();
    for (i, s) in ideals.iter().enumerate() {
        for x in (0..p.len()).filter(|&x| !s.contains(x)) {
            if p.lower_covers(x).iter().all(|&y| s.contains(y)) {
                let mut t = s.clone();
                t.insert(x);
                covers.push((i, index[&t]));
            }
        }
    }
    let poset = FinitePoset::from_covers(labels, covers)?;
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let mut m = ideals[a].clone();
            m.intersect_with(&ideals[b]);
            let mut j = ideals[a].clone();
            j.union_with(&ideals[b]);
            let (m, j) = (index[&m] as u32, index[&j] as u32);
            meet[a * n + b] = m;
            meet[b * n + a] = m;
            join[a * n + b] = j;
            join[b * n + a] = j;
        }
    }
    let lattice = FiniteLattice::from_tables(poset, meet, join);
    Ok(IdealLattice {
        lattice,
        ideals,
        index,
    })
}
