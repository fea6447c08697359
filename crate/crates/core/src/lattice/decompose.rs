//! Direct-product decomposition of finite distributive lattices.
//!
//! Factors are read off the connected components of the poset of
//! join-irreducibles: if `L ≅ J(P)` and `P = P_1 ⊔ ... ⊔ P_k` then
//! `L ≅ J(P_1) × ... × J(P_k)`, and each `J(P_i)` is irreducible.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::finite::FiniteLattice;
use super::ideals::{order_ideal_lattice, IdealLattice};
use crate::caps::Caps;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub lattice: IdealLattice,
    /// Lattice indices of the join-irreducibles in this component.
    pub irreducibles: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
    /// Coordinates of every element of the decomposed lattice.
    pub product_iso: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn factor_sizes(&self) -> Vec<usize> {
        self.factors
            .iter()
            .map(|f| f.lattice.lattice.len())
            .collect()
    }
}

impl FiniteLattice {
    /// Irreducible decomposition, certified against the lattice order.
    /// The one-element lattice has no factors.
    pub fn irreducible_decomposition(&self, caps: &Caps) -> Result<Decomposition> {
        let ji = self.join_irreducibles();
        let mut factors = Vec::new();
        for comp in ji.poset.components() {
            let sub = ji.poset.subposet(&comp);
            let lattice = order_ideal_lattice(&sub, caps)?;
            let irreducibles = comp.iter().map(|&i| ji.elements[i]).collect();
            factors.push(Factor {
                lattice,
                irreducibles,
            });
        }
        factors.sort_by_key(|f: &Factor| (f.lattice.lattice.len(), f.irreducibles[0]));

        let mut product_iso = Vec::with_capacity(self.len());
        for x in 0..self.len() {
            let mut coords = Vec::with_capacity(factors.len());
            for f in &factors {
                let mut ideal = FixedBitSet::with_capacity(f.irreducibles.len());
                ideal.extend(
                    f.irreducibles
                        .iter()
                        .enumerate()
                        .filter(|&(_, &j)| self.le(j, x))
                        .map(|(i, _)| i),
                );
                let idx = f.lattice.index_of(&ideal).ok_or_else(|| {
                    Error::ProductMismatch(format!("element {x} projects to a non-ideal"))
                })?;
                coords.push(idx);
            }
            product_iso.push(coords);
        }

        let expected: usize = factors.iter().map(|f| f.lattice.lattice.len()).product();
        if expected != self.len() {
            return Err(Error::ProductMismatch(format!(
                "factor sizes multiply to {expected}, lattice has {}",
                self.len()
            )));
        }
        let mut seen = HashMap::new();
        for (x, c) in product_iso.iter().enumerate() {
            if let Some(y) = seen.insert(c.clone(), x) {
                return Err(Error::ProductMismatch(format!(
                    "elements {y} and {x} share coordinates"
                )));
            }
        }
        for x in 0..self.len() {
            for y in 0..self.len() {
                let componentwise = factors
                    .iter()
                    .enumerate()
                    .all(|(c, f)| f.lattice.lattice.le(product_iso[x][c], product_iso[y][c]));
                if componentwise != self.le(x, y) {
                    return Err(Error::ProductMismatch(format!(
                        "order differs at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(Decomposition {
            factors,
            product_iso,
        })
    }

    /// Central elements of the irreducible decomposition: top in one factor,
    /// bottom in the others. Empty unless there are at least two factors.
    pub fn central_elements(&self, caps: &Caps) -> Result<Vec<usize>> {
        let d = self.irreducible_decomposition(caps)?;
        Ok(d.central_elements())
    }

    pub fn is_irreducible(&self, caps: &Caps) -> Result<bool> {
        Ok(self.irreducible_decomposition(caps)?.factors.len() <= 1)
    }

    /// Atoms of the Boolean algebra of complemented elements. In a
    /// distributive lattice these are the central elements; computed from
    /// complements alone so it can cross-check the Birkhoff route.
    pub fn complemented_atoms(&self) -> Result<Vec<usize>> {
        let comp = self.complements()?;
        let complemented: Vec<usize> = (0..self.len()).filter(|&x| comp[x].is_some()).collect();
        let atoms: Vec<usize> = complemented
            .iter()
            .copied()
            .filter(|&x| x != self.bottom())
            .filter(|&x| {
                !complemented
                    .iter()
                    .any(|&y| y != self.bottom() && y != x && self.le(y, x))
            })
            .collect();
        if atoms.len() == 1 {
            // a single atom is the top itself
            return Ok(Vec::new());
        }
        Ok(atoms)
    }
}

impl Decomposition {
    pub fn central_elements(&self) -> Vec<usize> {
        if self.factors.len() < 2 {
            return Vec::new();
        }
        let lookup: HashMap<&Vec<usize>, usize> = self
            .product_iso
            .iter()
            .enumerate()
            .map(|(x, c)| (c, x))
            .collect();
        (0..self.factors.len())
            .map(|i| {
                let coords: Vec<usize> = self
                    .factors
                    .iter()
                    .enumerate()
                    .map(|(c, f)| {
                        if c == i {
                            f.lattice.lattice.top()
                        } else {
                            f.lattice.lattice.bottom()
                        }
                    })
                    .collect();
                lookup[&coords]
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FinitePoset;

    fn lattice(p: FinitePoset) -> FiniteLattice {
        FiniteLattice::from_poset(p, &Caps::default()).unwrap()
    }

    #[test]
    fn grid_2x3_splits_into_chains() {
        let l = lattice(FinitePoset::grid(2, 3));
        let d = l.irreducible_decomposition(&Caps::default()).unwrap();
        assert_eq!(d.factor_sizes(), vec![2, 3]);
        let mut central = d.central_elements();
        central.sort_unstable();
        // (1,3) and (2,1)
        assert_eq!(central, vec![2, 3]);
        let mut atoms = l.complemented_atoms().unwrap();
        atoms.sort_unstable();
        assert_eq!(atoms, central);
    }

    #[test]
    fn chains_and_trivial_lattice_are_irreducible() {
        let caps = Caps::default();
        for n in 1..=5 {
            let l = lattice(FinitePoset::chain(n));
            assert!(l.central_elements(&caps).unwrap().is_empty());
            assert!(l.complemented_atoms().unwrap().is_empty());
        }
        let one = lattice(FinitePoset::chain(1));
        assert!(one
            .irreducible_decomposition(&caps)
            .unwrap()
            .factors
            .is_empty());
    }

    #[test]
    fn ideal_lattice_of_connected_poset_is_irreducible() {
        let caps = Caps::default();
        let j = order_ideal_lattice(&FinitePoset::grid(2, 2), &caps).unwrap();
        assert!(j.lattice.is_irreducible(&caps).unwrap());
        assert!(j.lattice.central_elements(&caps).unwrap().is_empty());
    }

    #[test]
    fn ideals_of_disjoint_union_are_a_product() {
        let caps = Caps::default();
        let p1 = FinitePoset::grid(2, 2);
        let p2 = FinitePoset::chain(2);
        let j1 = order_ideal_lattice(&p1, &caps).unwrap().lattice;
        let j2 = order_ideal_lattice(&p2, &caps).unwrap().lattice;
        let ju = order_ideal_lattice(&p1.disjoint_union(&p2), &caps)
            .unwrap()
            .lattice;
        let prod = j1.direct_product(&j2, &caps).unwrap();
        assert!(prod.is_isomorphic(&ju));
        assert_eq!(
            ju.irreducible_decomposition(&caps).unwrap().factor_sizes(),
            vec![3, 6]
        );
    }
}
