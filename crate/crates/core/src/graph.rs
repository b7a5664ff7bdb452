//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is kept twice: as sorted neighbor lists, and for `n <= 64` as
//! one `u64` bitset row per vertex. The exhaustive solvers work on the rows.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

/// Largest order for which bitset rows are kept.
pub const BITSET_MAX: usize = 64;

/// An undirected edge with endpoints stored as `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A set of vertices kept as a strictly increasing list.
///
/// The derived ordering is lexicographic on the sorted lists, which is the
/// tie-break order used for witnesses throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(bits::iter(mask).collect())
    }

    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.0.iter().any(|&v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Components of `G - S`. Removed vertices carry `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub count: usize,
    pub label: Vec<Option<usize>>,
}

impl ComponentPartition {
    /// Vertex sets of the components, in label order.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = vec![Vec::new(); self.count];
        for (v, l) in self.label.iter().enumerate() {
            if let Some(c) = l {
                out[*c].push(v);
            }
        }
        out.into_iter().map(VertexSet).collect()
    }

    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.label.get(v).copied().flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub degrees: Vec<usize>,
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
            rows: if n <= BITSET_MAX { vec![0; n] } else { Vec::new() },
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let rows = if n <= BITSET_MAX {
            adj.iter()
                .map(|l| l.iter().fold(0u64, |r, &v| r | (1u64 << v)))
                .collect()
        } else {
            Vec::new()
        };
        Graph { n, m, adj, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in increasing `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, l)| {
            l.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    /// Bitset rows, available when `n <= 64`.
    pub fn rows(&self) -> Option<&[u64]> {
        if self.n <= BITSET_MAX {
            Some(&self.rows)
        } else {
            None
        }
    }

    /// Bitset rows for exhaustive algorithms; fails for graphs above `max`
    /// vertices (capped at 64).
    pub fn rows_upto(&self, max: usize) -> Result<&[u64]> {
        let max = max.min(BITSET_MAX);
        if self.n > max {
            return Err(Error::TooLarge { n: self.n, max });
        }
        Ok(&self.rows)
    }

    /// Mask with one bit per vertex. Only meaningful for `n <= 64`.
    pub fn full_mask(&self) -> u64 {
        bits::full(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.n <= 1 || self.m == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || components_after_removal_unchecked(self, &[]).count == 1
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(Error::EdgeNotFound(e))
        }
    }

    /// `G - e`.
    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        let mut adj = self.adj.clone();
        adj[e.u].retain(|&x| x != e.v);
        adj[e.v].retain(|&x| x != e.u);
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        Graph::from_edges(self.n, self.edges().map(|e| (perm[e.u], perm[e.v])))
            .expect("permutation of a valid graph is valid")
    }

    /// Subgraph induced by `keep`, vertices renumbered in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph is valid")
    }

    /// Open neighborhood of a vertex set, `N(A) \ A`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .flat_map(|v| self.adj[v].iter().copied())
            .filter(|&x| !set.contains(x))
            .collect()
    }
}

/// Connected components of `G - s`, labelled in order of their smallest vertex.
pub fn components_after_removal(g: &Graph, s: &VertexSet) -> Result<ComponentPartition> {
    for v in s.iter() {
        g.check_vertex(v)?;
    }
    Ok(components_after_removal_unchecked(g, s.as_slice()))
}

pub(crate) fn components_after_removal_unchecked(g: &Graph, s: &[usize]) -> ComponentPartition {
    let mut removed = vec![false; g.n];
    for &v in s {
        removed[v] = true;
    }
    let mut label: Vec<Option<usize>> = vec![None; g.n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..g.n {
        if removed[start] || label[start].is_some() {
            continue;
        }
        label[start] = Some(count);
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for &y in &g.adj[x] {
                if !removed[y] && label[y].is_none() {
                    label[y] = Some(count);
                    queue.push_back(y);
                }
            }
        }
        count += 1;
    }
    ComponentPartition { count, label }
}

/// Minimum degree and the degree sequence.
pub fn degree_profile(g: &Graph) -> Result<DegreeProfile> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let min = *degrees.iter().min().expect("n >= 1");
    Ok(DegreeProfile { min, degrees })
}

/// Whether deleting `e` increases the number of components.
pub fn is_bridge(g: &Graph, e: Edge) -> Result<bool> {
    g.check_edge(e)?;
    let mut seen = vec![false; g.n()];
    let mut stack = vec![e.u];
    seen[e.u] = true;
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if (x == e.u && y == e.v) || (x == e.v && y == e.u) {
                continue;
            }
            if y == e.v {
                return Ok(false);
            }
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        // cycle 0-1-2-3-0
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn claw() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn net() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn components_of_opposite_pair_in_c4() {
        let p = components_after_removal(&c4(), &VertexSet::from([0, 2])).unwrap();
        assert_eq!(p.count, 2);
        assert_eq!(p.components(), vec![VertexSet::from([1]), VertexSet::from([3])]);
        assert_eq!(p.label[0], None);
    }

    #[test]
    fn components_of_empty_removal() {
        assert_eq!(components_after_removal(&c4(), &VertexSet::new()).unwrap().count, 1);
        assert_eq!(components_after_removal(&claw(), &VertexSet::from([0])).unwrap().count, 3);
    }

    #[test]
    fn components_reject_out_of_range() {
        let err = components_after_removal(&c4(), &VertexSet::from([7])).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 7, n: 4 });
    }

    #[test]
    fn degree_profiles() {
        let p = degree_profile(&c4()).unwrap();
        assert_eq!((p.min, p.degrees), (2, vec![2, 2, 2, 2]));
        let p = degree_profile(&claw()).unwrap();
        assert_eq!((p.min, p.degrees), (1, vec![3, 1, 1, 1]));
        assert_eq!(degree_profile(&net()).unwrap().min, 1);
        assert_eq!(degree_profile(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn bridges() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_bridge(&p3, Edge::new(0, 1)).unwrap());
        assert!(is_bridge(&p3, Edge::new(2, 1)).unwrap());
        assert!(!is_bridge(&c4(), Edge::new(0, 1)).unwrap());
        assert!(is_bridge(&net(), Edge::new(0, 3)).unwrap());
        assert!(!is_bridge(&net(), Edge::new(0, 1)).unwrap());
        assert_eq!(
            is_bridge(&c4(), Edge::new(0, 2)),
            Err(Error::EdgeNotFound(Edge::new(0, 2)))
        );
    }

    #[test]
    fn construction_rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::Loop(1)));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn edge_deletion_and_queries() {
        let g = c4();
        assert_eq!(g.m(), 4);
        let h = g.without_edge(Edge::new(1, 0)).unwrap();
        assert_eq!(h.m(), 3);
        assert!(!h.has_edge(0, 1));
        assert!(h.is_connected());
        assert!(!g.is_complete());
        assert!(Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap().is_complete());
        assert_eq!(g.neighborhood(&VertexSet::from([0])), VertexSet::from([1, 3]));
    }
}
