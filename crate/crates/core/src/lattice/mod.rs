//! Finite posets and lattices: distributivity, ranks, complements, Birkhoff
//! duality, product decomposition and isomorphism.

mod decompose;
mod finite;
mod ideals;
mod iso;
mod poset;

pub use decompose::{Decomposition, Factor};
pub use finite::{FiniteLattice, GridSublattice, JoinIrreducibles};
pub use ideals::{enumerate_ideals, order_ideal_lattice, IdealLattice};
pub use iso::{digraph_isomorphism, poset_isomorphism};
pub use poset::FinitePoset;
pub(crate) use poset::{node_on_cycle, topological_order};
