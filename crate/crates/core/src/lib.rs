//! Perfect matchings of plane bipartite graphs and the distributive lattices
//! they form under face twists.

pub mod caps;
pub mod error;
pub mod generators;
pub mod io;
pub mod lattice;
pub mod matching;
pub mod plane_graph;
pub mod verify;
pub mod ztransform;

#[cfg(test)]
mod fixtures;

pub use caps::Caps;
pub use error::{Error, Result};
pub use matching::{Matching, Orientation};
pub use plane_graph::{Color, Dart, FaceWalk, PlaneBipartiteGraph};
pub use ztransform::{MatchingPoset, ZArc, ZDigraph};
