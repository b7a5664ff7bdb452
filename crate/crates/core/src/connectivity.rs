//! Vertex connectivity, minimum cuts, fragments and atoms.
//!
//! `kappa` comes from unit-capacity max-flow on the split graph (each vertex
//! `v` becomes `v_in -> v_out` with capacity 1). Cut enumeration is
//! exhaustive over vertex subsets and meant for small graphs.
//!
//! An atom is read as a smallest fragment: a component `A` of `G - T` for
//! some minimum cut `T`, of least cardinality over all minimum cuts. Its
//! boundary `N(A)` is then exactly `T`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order for the subset-enumerating operations.
pub const ENUMERATION_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    pub cut: VertexSet,
    pub side_component_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ConnectivityWitness {
    Cut(CutWitness),
    /// `K_n`, where `kappa = n - 1` by convention.
    Complete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub kappa: usize,
    pub witness: ConnectivityWitness,
}

impl Connectivity {
    pub fn cut(&self) -> Option<&VertexSet> {
        match &self.witness {
            ConnectivityWitness::Cut(c) => Some(&c.cut),
            ConnectivityWitness::Complete => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AtomRecord {
    pub atom: VertexSet,
    pub boundary: VertexSet,
    pub kappa: usize,
}

struct FlowNet {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

const NONE: usize = usize::MAX;
const INF: i32 = i32::MAX / 2;

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![NONE; nodes],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        for (x, y, c) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(c);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// BFS augmenting paths; stops once the flow reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut pred = vec![NONE; self.head.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = NONE);
            let mut queue = VecDeque::from([s]);
            let mut seen = vec![false; self.head.len()];
            seen[s] = true;
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                let mut a = self.head[x];
                while a != NONE {
                    let y = self.to[a];
                    if self.cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = a;
                        queue.push_back(y);
                    }
                    a = self.next[a];
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while y != s {
                let a = pred[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let mut a = self.head[x];
            while a != NONE {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
                a = self.next[a];
            }
        }
        seen
    }
}

/// Minimum `s`-`t` vertex separator for non-adjacent `s`, `t`, if its size
/// is below `limit`.
fn pair_separator(g: &Graph, s: usize, t: usize, limit: usize) -> Option<VertexSet> {
    let n = g.n();
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { INF } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for e in g.edges() {
        net.add(2 * e.u + 1, 2 * e.v, INF);
        net.add(2 * e.v + 1, 2 * e.u, INF);
    }
    let flow = net.max_flow(2 * s + 1, 2 * t, limit);
    if flow >= limit {
        return None;
    }
    let seen = net.reachable(2 * s + 1);
    let cut: VertexSet = (0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect();
    debug_assert_eq!(cut.len(), flow);
    Some(cut)
}

/// `kappa(G)` with a minimum cut, or the `Complete` marker for `K_n`.
///
/// Disconnected graphs give `kappa = 0` with the empty cut.
pub fn vertex_connectivity(g: &Graph) -> Result<Connectivity> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(Connectivity {
            kappa: n - 1,
            witness: ConnectivityWitness::Complete,
        });
    }
    if !g.is_connected() {
        let count = crate::graph::components_after_removal(g, &VertexSet::new())?.count;
        return Ok(Connectivity {
            kappa: 0,
            witness: ConnectivityWitness::Cut(CutWitness {
                cut: VertexSet::new(),
                side_component_count: count,
            }),
        });
    }
    // Some vertex among the first kappa + 1 lies outside a minimum cut, so
    // pairing each of them with every later non-neighbour finds kappa.
    let mut best: Option<VertexSet> = None;
    let mut i = 0;
    while i < n && i <= best.as_ref().map_or(n, VertexSet::len) {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let limit = best.as_ref().map_or(n, VertexSet::len);
            if let Some(cut) = pair_separator(g, i, j, limit) {
                best = Some(cut);
            }
        }
        i += 1;
    }
    let cut = best.expect("noncomplete graphs have a non-adjacent pair");
    let side_component_count = crate::graph::components_after_removal(g, &cut)?.count;
    Ok(Connectivity {
        kappa: cut.len(),
        witness: ConnectivityWitness::Cut(CutWitness {
            cut,
            side_component_count,
        }),
    })
}

fn enumeration_rows(g: &Graph) -> Result<&[u64]> {
    g.rows_upto(ENUMERATION_MAX_N)
}

/// Visits every `k`-set containing `v` whose removal disconnects `G`, in
/// lexicographic order, until `f` returns `false`.
fn for_each_cut_containing(g: &Graph, v: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> Result<()> {
    let rows = enumeration_rows(g)?;
    g.check_vertex(v)?;
    if k == 0 {
        return Err(Error::InvalidCutSize);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let n = g.n();
    // removing n - 1 or more vertices leaves at most one vertex
    if k + 1 >= n {
        return Ok(());
    }
    // no set below kappa disconnects a connected graph
    if g.is_connected() && k < vertex_connectivity(g)?.kappa {
        return Ok(());
    }
    let full = g.full_mask();
    let pool = full & !(1u64 << v);
    bits::for_each_subset(pool, k - 1, |rest| {
        let s = rest | (1u64 << v);
        if bits::count_components(rows, full & !s) >= 2 {
            f(s)
        } else {
            true
        }
    });
    Ok(())
}

/// All `S` with `|S| = k`, `v` in `S` and `w(G - S) >= 2`, sorted
/// lexicographically. Exponential in `n`.
pub fn min_cuts_containing(g: &Graph, v: usize, k: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for_each_cut_containing(g, v, k, |s| {
        out.push(VertexSet::from_mask(s));
        true
    })?;
    Ok(out)
}

/// The lexicographically first cut of size `k` through `v`, if any.
pub fn first_cut_containing(g: &Graph, v: usize, k: usize) -> Result<Option<VertexSet>> {
    let mut out = None;
    for_each_cut_containing(g, v, k, |s| {
        out = Some(VertexSet::from_mask(s));
        false
    })?;
    Ok(out)
}

/// Every minimum vertex cut, sorted lexicographically.
pub fn minimum_cuts(g: &Graph) -> Result<Vec<VertexSet>> {
    let rows = enumeration_rows(g)?;
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let kappa = vertex_connectivity(g)?.kappa;
    let full = g.full_mask();
    let mut out = Vec::new();
    bits::for_each_subset(full, kappa, |s| {
        if bits::count_components(rows, full & !s) >= 2 {
            out.push(VertexSet::from_mask(s));
        }
        true
    });
    Ok(out)
}

/// All atoms with their boundaries, sorted by atom.
pub fn atoms(g: &Graph) -> Result<Vec<AtomRecord>> {
    let rows = enumeration_rows(g)?;
    let cuts = minimum_cuts(g)?;
    let kappa = cuts.first().map_or(0, VertexSet::len);
    let full = g.full_mask();
    let mut fragments: Vec<(u64, u64)> = Vec::new();
    for t in &cuts {
        let tm = t.to_mask();
        for c in bits::component_masks(rows, full & !tm) {
            fragments.push((c, tm));
        }
    }
    let least = fragments
        .iter()
        .map(|(c, _)| c.count_ones())
        .min()
        .expect("a minimum cut leaves at least two fragments");
    let mut out: Vec<AtomRecord> = fragments
        .into_iter()
        .filter(|(c, _)| c.count_ones() == least)
        .map(|(c, tm)| AtomRecord {
            atom: VertexSet::from_mask(c),
            boundary: VertexSet::from_mask(tm),
            kappa,
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Outcome of checking that atoms meeting a minimum cut lie inside it and
/// have at most `kappa / 2` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaderVerdict {
    pub holds: bool,
    pub atoms_checked: usize,
    pub cuts_checked: usize,
    /// First `(atom, cut)` pair violating the property.
    pub violation: Option<(VertexSet, VertexSet)>,
}

/// Checks every atom against every minimum cut. Complete graphs hold
/// vacuously.
pub fn check_mader_atom_property(g: &Graph) -> Result<MaderVerdict> {
    if g.n() == 0 || g.is_complete() {
        return Ok(MaderVerdict {
            holds: true,
            atoms_checked: 0,
            cuts_checked: 0,
            violation: None,
        });
    }
    let atoms = atoms(g)?;
    let cuts = minimum_cuts(g)?;
    for a in &atoms {
        for t in &cuts {
            if a.atom.intersects(t) && !(a.atom.is_subset(t) && 2 * a.atom.len() <= a.kappa) {
                return Ok(MaderVerdict {
                    holds: false,
                    atoms_checked: atoms.len(),
                    cuts_checked: cuts.len(),
                    violation: Some((a.atom.clone(), t.clone())),
                });
            }
        }
    }
    Ok(MaderVerdict {
        holds: true,
        atoms_checked: atoms.len(),
        cuts_checked: cuts.len(),
        violation: None,
    })
}
