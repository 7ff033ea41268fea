//! Degree sequences that exclude cycles.
//!
//! A degree sequence `D1` precedes `D2` when some realization of `D2`
//! contains some realization of `D1` as an induced subgraph; `D` excludes a
//! graph `H` when `D(H)` does not precede `D`. This crate decides that
//! preorder by exhaustive search on small graphs, classifies sequences
//! excluding `C_n`, `C_4`, `M_2` and their combinations by their split /
//! Tyshkevich-composition structure, and replays the underlying structure
//! theorems over every graph and graphical sequence up to a vertex bound.

pub mod canon;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod preorder;
pub mod realize;
mod report;
pub mod sequence;
pub mod split;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, GraphFamily};
pub use sequence::DegreeSequence;
pub use vertex_set::VertexSet;

/// Largest supported vertex count; one adjacency row fits a `u32`.
pub const MAX_VERTICES: usize = 32;
