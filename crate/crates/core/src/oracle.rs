//! Slow reference implementations used to cross-check the fast paths.
//!
//! Everything here enumerates all vertex subsets and counts components with a
//! plain stack search over neighbour lists, sharing no code with the solver,
//! flow or bitset routines. Intended for `n <= 12` or so.

use crate::graph::{Edge, Graph, VertexSet};
use crate::rational::Rational;

/// Components of `G - removed`.
pub fn count_components(g: &Graph, removed: &[bool]) -> usize {
    let mut seen = removed.to_vec();
    let mut count = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

fn members(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn removed_flags(n: usize, mask: u32) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

/// Every disconnecting set with its component count.
pub fn disconnecting_sets(g: &Graph) -> Vec<(VertexSet, usize)> {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    (0u32..1 << n)
        .filter_map(|mask| {
            let w = count_components(g, &removed_flags(n, mask));
            (w >= 2).then(|| (VertexSet::from(members(n, mask)), w))
        })
        .collect()
}

/// Toughness and its lex-least witness; `None` for complete graphs.
pub fn toughness(g: &Graph) -> Option<(Rational, VertexSet)> {
    let mut best: Option<(Rational, VertexSet)> = None;
    for (s, w) in disconnecting_sets(g) {
        let r = Rational::new(s.len() as i64, w as i64);
        let better = match &best {
            None => true,
            Some((b, bs)) => r < *b || (r == *b && s < *bs),
        };
        if better {
            best = Some((r, s));
        }
    }
    best
}

pub fn is_t_tough(g: &Graph, t: &Rational) -> bool {
    toughness(g).map_or(true, |(tau, _)| tau >= *t)
}

/// `tau(G) = t` and deleting any edge drops toughness below `t`.
pub fn is_minimally_t_tough(g: &Graph, t: &Rational) -> bool {
    if toughness(g).map(|(tau, _)| tau) != Some(*t) {
        return false;
    }
    g.edges()
        .all(|e| toughness(&g.without_edge(e).unwrap()).map_or(false, |(tau, _)| tau < *t))
}

/// Vertex connectivity with `kappa(K_n) = n - 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    disconnecting_sets(g)
        .into_iter()
        .map(|(s, _)| s.len())
        .min()
        .unwrap_or(g.n().saturating_sub(1))
}

/// Disconnecting sets of size exactly `k`, in lexicographic order.
pub fn cuts_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = disconnecting_sets(g)
        .into_iter()
        .filter(|(s, _)| s.len() == k)
        .map(|(s, _)| s)
        .collect();
    out.sort();
    out
}

/// Smallest fragments over all minimum cuts, as `(atom, cut)` pairs sorted.
pub fn atoms(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    let kappa = vertex_connectivity(g);
    let n = g.n();
    let mut frags = Vec::new();
    for cut in cuts_of_size(g, kappa) {
        let removed: Vec<bool> = (0..n).map(|v| cut.contains(v)).collect();
        for start in (0..n).filter(|&v| !removed[v]) {
            // component of start
            let mut seen = removed.clone();
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = vec![start];
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            if comp[0] == start {
                frags.push((VertexSet::from(comp), cut.clone()));
            }
        }
    }
    let Some(smallest) = frags.iter().map(|(a, _)| a.len()).min() else {
        return Vec::new();
    };
    frags.retain(|(a, _)| a.len() == smallest);
    frags.sort();
    frags.dedup();
    frags
}

/// The empty set if `e` is a bridge; otherwise the smallest `|S|`, then
/// lex-least `S`, avoiding both endpoints with `w(G - S) * t <= |S|` and
/// `w((G - e) - S) * t > |S|`.
pub fn edge_certificate(g: &Graph, e: Edge, t: &Rational) -> Option<VertexSet> {
    let n = g.n();
    let h = g.without_edge(e).ok()?;
    let none = vec![false; n];
    if count_components(&h, &none) > count_components(g, &none) {
        return Some(VertexSet::new());
    }
    let mut best: Option<VertexSet> = None;
    for mask in 0u32..1 << n {
        if mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1 {
            continue;
        }
        let flags = removed_flags(n, mask);
        let s = VertexSet::from(members(n, mask));
        let k = Rational::from_integer(s.len() as i64);
        let w_g = Rational::from_integer(count_components(g, &flags) as i64);
        let w_h = Rational::from_integer(count_components(&h, &flags) as i64);
        if w_g * t <= k && w_h * t > k {
            let better = match &best {
                None => true,
                Some(b) => (s.len(), &s) < (b.len(), b),
            };
            if better {
                best = Some(s);
            }
        }
    }
    best
}
