use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::canon::{canonical_form, canonical_graph, CanonicalForm};

/// Largest order for in-process enumeration of connected graphs.
pub const ENUMERATE_MAX_N: usize = 8;

/// Largest tree order for [`enumerate_trees`].
const TREES_MAX_N: usize = 14;

fn dedupe(candidates: impl Iterator<Item = Graph>) -> Result<Vec<Graph>> {
    let mut seen: BTreeMap<(usize, CanonicalForm), Graph> = BTreeMap::new();
    for g in candidates {
        let key = (g.m(), canonical_form(&g)?);
        if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(key) {
            slot.insert(canonical_graph(&g)?);
        }
    }
    Ok(seen.into_values().collect())
}

fn with_new_vertex(g: &Graph, neighbours: u64) -> Graph {
    let n = g.n();
    let new_edges = (0..n).filter(|&v| neighbours >> v & 1 == 1).map(|v| (v, n));
    Graph::from_edges(n + 1, g.edges().map(|e| (e.u, e.v)).chain(new_edges)).expect("valid extension")
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, ordered by edge count and then canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// all classes arise by attaching a new vertex to a connected graph on
/// `n - 1` vertices.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATE_MAX_N {
        return Err(Error::OutOfRange(format!(
            "enumeration supports 1 <= n <= {ENUMERATE_MAX_N}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let full = (1u64 << k) - 1;
        level = dedupe(
            level
                .iter()
                .flat_map(|g| (1..=full).map(move |nb| with_new_vertex(g, nb))),
        )?;
    }
    Ok(level)
}

/// Non-isomorphic trees on `n` vertices, optionally with bounded degree.
pub fn enumerate_trees(n: usize, max_degree: Option<usize>) -> Result<Vec<Graph>> {
    if n == 0 || n > TREES_MAX_N {
        return Err(Error::OutOfRange(format!(
            "tree enumeration supports 1 <= n <= {TREES_MAX_N}, got {n}"
        )));
    }
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        level = dedupe(level.iter().flat_map(|t| {
            (0..t.n())
                .filter(|&v| t.degree(v) < cap)
                .map(move |v| with_new_vertex(t, 1u64 << v))
                .collect::<Vec<_>>()
        }))?;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts_match_hand_enumeration() {
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        let three = enumerate_connected(3).unwrap();
        assert_eq!(three.len(), 2);
        assert_eq!(three.iter().map(Graph::m).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
        assert_eq!(enumerate_connected(5).unwrap().len(), 21);
        assert_eq!(enumerate_connected(6).unwrap().len(), 112);
    }

    #[test]
    fn outputs_are_connected_and_distinct() {
        let gs = enumerate_connected(6).unwrap();
        assert!(gs.iter().all(Graph::is_connected));
        let mut forms: Vec<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), gs.len());
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n, None).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        // of the 6 trees on 6 vertices, K_{1,5} and the spider with legs 2,1,1,1 exceed degree 3
        let sub = enumerate_trees(6, Some(3)).unwrap();
        assert_eq!(sub.len(), 4);
        assert!(sub.iter().all(|t| (0..6).all(|v| t.degree(v) <= 3)));
    }

    #[test]
    fn rejects_unsupported_orders() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
    }
}
