//! Exact toughness, vertex connectivity and structural checks for small
//! simple graphs.
//!
//! Graphs are dense-indexed and immutable. Exhaustive routines work on
//! graphs with at most 64 vertices; the practical limit is much lower.

mod bits;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod rational;
pub mod structure;
pub mod toughness;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
pub use rational::Rational;
