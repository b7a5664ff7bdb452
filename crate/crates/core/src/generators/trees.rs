use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree with its half-tough construction conditions, always recomputed
/// from the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSpec {
    pub tree: Graph,
    pub is_tree: bool,
    pub max_degree_ok: bool,
    /// Vertices of degree 1 and 3 together form an independent set.
    pub ends_independent: bool,
}

impl TreeSpec {
    pub fn new(tree: Graph) -> Self {
        let n = tree.n();
        let is_tree = n >= 1 && tree.m() == n - 1 && tree.is_connected();
        let max_degree_ok = (0..n).all(|v| tree.degree(v) <= 3);
        let end = |v: usize| matches!(tree.degree(v), 1 | 3);
        let ends_independent = tree.edges().all(|e| !(end(e.u) && end(e.v)));
        TreeSpec {
            tree,
            is_tree,
            max_degree_ok,
            ends_independent,
        }
    }

    pub fn violation(&self) -> Option<&'static str> {
        if !self.is_tree {
            Some("graph is not a tree")
        } else if !self.max_degree_ok {
            Some("maximum degree exceeds 3")
        } else if !self.ends_independent {
            Some("vertices of degree 1 and 3 are not independent")
        } else {
            None
        }
    }
}

/// Deletes every degree-3 vertex of the tree and joins its three neighbours
/// by a triangle. Surviving vertices keep their relative order.
pub fn build_half_tough(spec: &TreeSpec) -> Result<Graph> {
    if let Some(why) = spec.violation() {
        return Err(Error::InvalidTree(why.to_string()));
    }
    let t = &spec.tree;
    let deleted: Vec<bool> = (0..t.n()).map(|v| t.degree(v) == 3).collect();
    let mut index = vec![usize::MAX; t.n()];
    let mut next = 0;
    for v in 0..t.n() {
        if !deleted[v] {
            index[v] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for e in t.edges() {
        if !deleted[e.u] && !deleted[e.v] {
            edges.push((index[e.u], index[e.v]));
        }
    }
    for x in (0..t.n()).filter(|&x| deleted[x]) {
        let nb = t.neighbors(x);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                edges.push((index[a], index[b]));
            }
        }
    }
    Graph::from_edges(next, edges)
}
