//! Witness families: truncated parallelograms, outerplane realizations of
//! oriented trees, and linked components.

pub mod hexagonal;
pub mod link;
pub mod spec;
pub mod tree;

pub use hexagonal::{
    hexagon_poset, matching_geometry, parallelogram, prolate_triangle, row_profiles,
    truncated_parallelogram, verify_iso_parallelogram, EdgeDirection, HexSystem,
    ParallelogramCertificate, SubparallelogramView,
};
pub use link::{link_components, LinkedGraph};
pub use spec::GraphSpec;
pub use tree::{
    orientations, tree_shapes, tree_to_outerplane, OrientedTree, OuterplaneRealization,
};
