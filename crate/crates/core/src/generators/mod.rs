//! Graph families, the half-tough tree construction, and small-graph
//! enumeration up to isomorphism.

mod canon;
mod enumerate;
mod trees;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use canon::{canonical_form, canonical_graph, CanonicalForm, CANON_MAX_N};
pub use enumerate::{enumerate_connected, enumerate_trees, ENUMERATE_MAX_N};
pub use trees::{build_half_tough, TreeSpec};

fn out_of_range(what: &str, n: usize) -> Error {
    Error::OutOfRange(format!("{what} is undefined for n = {n}"))
}

/// `C_n` with edges `i ~ i+1 (mod n)`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("cycle", n));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `n` vertices.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(out_of_range("path", n));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(out_of_range("complete graph", n));
    }
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{1,k}` with centre `0`.
pub fn make_star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(out_of_range("star", k));
    }
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// Triangle `0,1,2` with pendant vertices `3,4,5` on `0,1,2`.
pub fn make_net() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("fixed graph")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn make_petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("fixed graph")
}
