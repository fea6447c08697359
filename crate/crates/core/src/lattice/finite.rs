use fixedbitset::FixedBitSet;

use super::iso::poset_isomorphism;
use super::poset::FinitePoset;
use crate::caps::{self, Caps};
use crate::error::{Error, Result};

/// A finite lattice with materialized meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Fills meet/join tables from the order; fails with a witness pair when
    /// some glb or lub is missing.
    pub fn from_poset(poset: FinitePoset, caps: &Caps) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::InvalidPoset(
                "a lattice needs at least one element".into(),
            ));
        }
        caps::check("lattice elements", n, caps.max_lattice_elements)?;
        let down: Vec<FixedBitSet> = (0..n)
            .map(|b| {
                let mut s = FixedBitSet::with_capacity(n);
                s.extend((0..n).filter(|&a| poset.le(a, b)));
                s
            })
            .collect();
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let mut ub = poset.up_set(x).clone();
                ub.intersect_with(poset.up_set(y));
                let lub = ub.ones().find(|&u| ub.is_subset(poset.up_set(u))).ok_or(
                    Error::NotALattice {
                        x,
                        y,
                        missing: "least upper bound",
                    },
                )?;
                let mut lb = down[x].clone();
                lb.intersect_with(&down[y]);
                let glb =
                    lb.ones()
                        .find(|&l| lb.is_subset(&down[l]))
                        .ok_or(Error::NotALattice {
                            x,
                            y,
                            missing: "greatest lower bound",
                        })?;
                join[x * n + y] = lub as u32;
                join[y * n + x] = lub as u32;
                meet[x * n + y] = glb as u32;
                meet[y * n + x] = glb as u32;
            }
        }
        Ok(Self::from_tables(poset, meet, join))
    }

    pub(crate) fn from_tables(poset: FinitePoset, meet: Vec<u32>, join: Vec<u32>) -> Self {
        let n = poset.len();
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x] as usize);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x] as usize);
        FiniteLattice {
            poset,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.poset.le(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// First triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Rank function; verifies gradedness and `ρ(x)+ρ(y) = ρ(x∧y)+ρ(x∨y)`.
    pub fn rank_check(&self) -> Result<Vec<usize>> {
        let rho = self.poset.heights();
        for &(a, b) in self.poset.covers() {
            if rho[b] != rho[a] + 1 {
                return Err(Error::NotGraded { lower: a, upper: b });
            }
        }
        let n = self.len();
        for x in 0..n {
            for y in x + 1..n {
                if rho[x] + rho[y] != rho[self.meet(x, y)] + rho[self.join(x, y)] {
                    return Err(Error::NotGraded { lower: x, upper: y });
                }
            }
        }
        Ok(rho)
    }

    /// Length of the longest chain.
    pub fn rank(&self) -> usize {
        self.poset.heights()[self.top]
    }

    pub fn are_complements(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == self.bottom && self.join(x, y) == self.top
    }

    /// The complement of each element, if it has one. A second complement is
    /// an error: it cannot happen in a distributive lattice.
    pub fn complements(&self) -> Result<Vec<Option<usize>>> {
        let n = self.len();
        let mut out = vec![None; n];
        for (x, slot) in out.iter_mut().enumerate() {
            for y in (0..n).filter(|&y| self.are_complements(x, y)) {
                if let Some(a) = *slot {
                    return Err(Error::DuplicateComplement { x, a, b: y });
                }
                *slot = Some(y);
            }
        }
        Ok(out)
    }

    /// A saturated chain `from = c0 ⋖ c1 ⋖ ... ⋖ ck = to`.
    pub fn saturated_chain(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        if !self.le(from, to) {
            return Err(Error::Precondition(format!("{from} is not below {to}")));
        }
        let mut chain = vec![to];
        let mut at = to;
        while at != from {
            at = *self
                .poset
                .lower_covers(at)
                .iter()
                .find(|&&c| self.le(from, c))
                .expect("an element strictly above `from` has a lower cover above `from`");
            chain.push(at);
        }
        chain.reverse();
        Ok(chain)
    }

    /// Sublattice `{x_i ∨ y_j}` spanned by saturated chains from the bottom to
    /// a complementary pair `x`, `y`; certified isomorphic to `(r+1) × (k-r+1)`.
    pub fn grid_sublattice(
        &self,
        x: usize,
        y: usize,
        chain_x: &[usize],
        chain_y: &[usize],
    ) -> Result<GridSublattice> {
        if !self.are_complements(x, y) {
            return Err(Error::NotComplementary { x, y });
        }
        let rho = self.rank_check()?;
        if rho[x] == 0 || rho[y] == 0 {
            return Err(Error::Precondition(
                "both elements of the pair need rank at least 1".into(),
            ));
        }
        for (chain, end) in [(chain_x, x), (chain_y, y)] {
            if chain.first() != Some(&self.bottom) || chain.last() != Some(&end) {
                return Err(Error::ChainNotSaturated { position: 0 });
            }
            for (i, w) in chain.windows(2).enumerate() {
                if !self.poset.lower_covers(w[1]).contains(&w[0]) {
                    return Err(Error::ChainNotSaturated { position: i + 1 });
                }
            }
        }
        let rows = chain_x.len();
        let cols = chain_y.len();
        let elements: Vec<Vec<usize>> = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| self.join(chain_x[i], chain_y[j]))
                    .collect()
            })
            .collect();
        let mut seen = FixedBitSet::with_capacity(self.len());
        for &a in elements.iter().flatten() {
            if seen.put(a) {
                return Err(Error::Precondition(format!(
                    "element {a} repeats in the grid"
                )));
            }
        }
        for i in 0..rows {
            for j in 0..cols {
                for k in 0..rows {
                    for l in 0..cols {
                        let (a, b) = (elements[i][j], elements[k][l]);
                        if self.join(a, b) != elements[i.max(k)][j.max(l)]
                            || self.meet(a, b) != elements[i.min(k)][j.min(l)]
                        {
                            return Err(Error::IsoFailure(format!(
                                "grid not closed at ({i},{j}), ({k},{l})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(GridSublattice { elements })
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> JoinIrreducibles {
        let elements: Vec<usize> = (0..self.len())
            .filter(|&x| self.poset.lower_covers(x).len() == 1)
            .collect();
        let poset = self.poset.subposet(&elements);
        JoinIrreducibles { poset, elements }
    }

    /// Componentwise product; `(a, b)` sits at `a * other.len() + b`.
    pub fn direct_product(&self, other: &FiniteLattice, caps: &Caps) -> Result<FiniteLattice> {
        let (n1, n2) = (self.len(), other.len());
        caps::check("lattice elements", n1 * n2, caps.max_lattice_elements)?;
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut labels = Vec::with_capacity(n1 * n2);
        for a in 0..n1 {
            for b in 0..n2 {
                labels.push(format!("({},{})", self.label(a), other.label(b)));
            }
        }
        let mut covers = Vec::new();
        for &(a, c) in self.poset.covers() {
            for b in 0..n2 {
                covers.push((idx(a, b), idx(c, b)));
            }
        }
        for &(b, d) in other.poset.covers() {
            for a in 0..n1 {
                covers.push((idx(a, b), idx(a, d)));
            }
        }
        let poset = FinitePoset::from_covers(labels, covers)?;
        let n = n1 * n2;
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n1 {
            for b in 0..n2 {
                for c in 0..n1 {
                    for d in 0..n2 {
                        let (p, q) = (idx(a, b), idx(c, d));
                        meet[p * n + q] = idx(self.meet(a, c), other.meet(b, d)) as u32;
                        join[p * n + q] = idx(self.join(a, c), other.join(b, d)) as u32;
                    }
                }
            }
        }
        Ok(FiniteLattice::from_tables(poset, meet, join))
    }

    /// Isomorphism onto `other` for distributive lattices, found through
    /// their posets of join-irreducibles. Returns the element map.
    pub fn isomorphism(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let ja = self.join_irreducibles();
        let jb = other.join_irreducibles();
        let phi = poset_isomorphism(&ja.poset, &jb.poset)?;
        let mut map = vec![0; self.len()];
        for (x, slot) in map.iter_mut().enumerate() {
            *slot = ja
                .poset
                .labels()
                .iter()
                .enumerate()
                .filter(|&(i, _)| self.le(ja.elements[i], x))
                .map(|(i, _)| jb.elements[phi[i]])
                .fold(other.bottom, |acc, y| other.join(acc, y));
        }
        let mut hit = FixedBitSet::with_capacity(other.len());
        for &y in &map {
            if hit.put(y) {
                return None;
            }
        }
        let preserves = self
            .poset
            .covers()
            .iter()
            .all(|&(a, b)| other.poset.lower_covers(map[b]).contains(&map[a]));
        (preserves && self.poset.covers().len() == other.poset.covers().len()).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.isomorphism(other).is_some()
    }
}

/// `elements[i][j] = x_i ∨ y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSublattice {
    pub elements: Vec<Vec<usize>>,
}

impl GridSublattice {
    pub fn shape(&self) -> (usize, usize) {
        (
            self.elements.len(),
            self.elements.first().map_or(0, Vec::len),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinIrreducibles {
    pub poset: FinitePoset,
    /// Lattice index of each poset element.
    pub elements: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn lattice(p: FinitePoset) -> FiniteLattice {
        FiniteLattice::from_poset(p, &Caps::default()).unwrap()
    }

    fn diamond_m3() -> FiniteLattice {
        let labels = (0..5).map(|i| i.to_string()).collect();
        lattice(
            FinitePoset::from_covers(labels, vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
                .unwrap(),
        )
    }

    #[test]
    fn two_chain_is_boolean() {
        let l = lattice(FinitePoset::chain(2));
        assert_eq!((l.bottom(), l.top()), (0, 1));
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        assert!(l.is_distributive());
    }

    #[test]
    fn missing_upper_bound_is_reported() {
        let labels = (0..3).map(|i| i.to_string()).collect();
        let p = FinitePoset::from_covers(labels, vec![(0, 1), (0, 2)]).unwrap();
        let err = FiniteLattice::from_poset(p, &Caps::default()).unwrap_err();
        assert_eq!(
            err,
            Error::NotALattice {
                x: 1,
                y: 2,
                missing: "least upper bound"
            }
        );
    }

    #[test]
    fn m3_is_not_distributive() {
        let l = diamond_m3();
        assert!(l.distributivity_witness().is_some());
        assert!(matches!(
            l.complements(),
            Err(Error::DuplicateComplement { .. })
        ));
    }

    #[test]
    fn ranks() {
        let chain = lattice(FinitePoset::chain(5));
        assert_eq!(chain.rank_check().unwrap(), vec![0, 1, 2, 3, 4]);
        let g = lattice(FinitePoset::grid(2, 3));
        let rho = g.rank_check().unwrap();
        assert_eq!(*rho.iter().max().unwrap(), 3);
        assert_eq!(g.rank(), 3);
    }

    #[test]
    fn grid_2x3_complements() {
        let g = lattice(FinitePoset::grid(2, 3));
        let comp = g.complements().unwrap();
        // (2,1) at index 3, (1,3) at index 2
        assert_eq!(comp[3], Some(2));
        assert_eq!(comp[2], Some(3));
        assert_eq!(comp[0], Some(5));
        assert_eq!(comp[1], None);
        let rho = g.rank_check().unwrap();
        assert_eq!(rho[2] + rho[3], g.rank());
    }

    #[test]
    fn chain_interior_has_no_complement() {
        let comp = lattice(FinitePoset::chain(4)).complements().unwrap();
        assert_eq!(comp, vec![Some(3), None, None, Some(0)]);
    }

    #[test]
    fn grid_sublattice_recovers_2x3() {
        let g = lattice(FinitePoset::grid(2, 3));
        let cx = g.saturated_chain(0, 3).unwrap();
        let cy = g.saturated_chain(0, 2).unwrap();
        let grid = g.grid_sublattice(3, 2, &cx, &cy).unwrap();
        assert_eq!(grid.shape(), (2, 3));
        let mut all: Vec<usize> = grid.elements.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn grid_sublattice_preconditions() {
        let g = lattice(FinitePoset::grid(2, 3));
        let top_chain = g.saturated_chain(0, 5).unwrap();
        let err = g.grid_sublattice(0, 5, &[0], &top_chain).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        assert!(matches!(
            g.grid_sublattice(1, 2, &[0, 1], &[0, 1, 2]),
            Err(Error::NotComplementary { .. })
        ));
        assert!(matches!(
            g.grid_sublattice(3, 2, &[0, 3], &[0, 2]),
            Err(Error::ChainNotSaturated { .. })
        ));
    }

    #[test]
    fn product_with_trivial_is_identity() {
        let g = lattice(FinitePoset::grid(2, 2));
        let one = lattice(FinitePoset::chain(1));
        let p = g.direct_product(&one, &Caps::default()).unwrap();
        assert!(p.is_isomorphic(&g));
    }

    #[test]
    fn product_of_chains_is_grid() {
        let two = lattice(FinitePoset::chain(2));
        let three = lattice(FinitePoset::chain(3));
        let p = two.direct_product(&three, &Caps::default()).unwrap();
        assert!(p.is_isomorphic(&lattice(FinitePoset::grid(2, 3))));
        let q = three.direct_product(&two, &Caps::default()).unwrap();
        assert!(p.is_isomorphic(&q));
        assert!(!lattice(FinitePoset::chain(4)).is_isomorphic(&lattice(FinitePoset::grid(2, 2))));
    }

    #[test]
    fn join_irreducibles_of_chain() {
        let ji = lattice(FinitePoset::chain(4)).join_irreducibles();
        assert_eq!(ji.elements, vec![1, 2, 3]);
        assert!(poset_isomorphism(&ji.poset, &FinitePoset::chain(3)).is_some());
    }
}
