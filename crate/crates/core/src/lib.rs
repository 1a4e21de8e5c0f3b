//! Computational tools for generalized Turán problems: counting copies of a
//! pattern, Zykov symmetrization, edit distance to complete multipartite
//! graphs, and exhaustive extremal search on small vertex counts.

pub mod counting;
pub mod error;
pub mod extremal;
pub mod graph;
mod kernel;
pub mod partition;
pub mod random;
pub mod symmetrization;

pub use error::{Error, Result};
pub use graph::{Graph, GraphFamily, PartComposition};
