use crate::error::Result;
use crate::generators::{build_half_tough, TreeSpec};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::rational::rat;
use crate::toughness::check_minimality;

use super::claw::find_claw;
use super::verdict::{ClauseId, ClauseVerdict, Evidence};

/// All triangles `(a, b, c)` with `a < b < c`.
fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Inverts the tree construction: each triangle becomes a new vertex
/// `n, n + 1, ...` joined to its corners. Returns the tree only if it meets
/// the construction conditions and rebuilds `g` exactly.
///
/// In a constructed graph every triangle comes from one deleted vertex and
/// distinct triangles share no edge, so the inversion is forced.
pub fn recover_tree(g: &Graph) -> Option<TreeSpec> {
    let tris = triangles(g);
    let mut triangle_edges = std::collections::BTreeSet::new();
    for [a, b, c] in &tris {
        for e in [(*a, *b), (*a, *c), (*b, *c)] {
            if !triangle_edges.insert(e) {
                return None;
            }
        }
    }
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .map(|e| (e.u, e.v))
        .filter(|e| !triangle_edges.contains(e))
        .collect();
    for (i, tri) in tris.iter().enumerate() {
        edges.extend(tri.iter().map(|&x| (x, n + i)));
    }
    let tree = Graph::from_edges(n + tris.len(), edges).ok()?;
    let spec = TreeSpec::new(tree);
    match build_half_tough(&spec) {
        Ok(rebuilt) if rebuilt == *g => Some(spec),
        _ => None,
    }
}

/// Minimally 1/2-tough claw-free graphs arise from the tree construction.
pub fn check_half_tough_characterization(g: &Graph) -> Result<ClauseVerdict> {
    let id = ClauseId::HalfToughCharacterization;
    if g.n() == 0 || !g.is_connected() {
        return Ok(ClauseVerdict::vacuous(id, "graph is not connected"));
    }
    if let Some(claw) = find_claw(g) {
        return Ok(ClauseVerdict::vacuous(id, "graph has a claw").value("claw_center", claw.center));
    }
    if check_minimality(g, &rat(1, 2))?.is_some() {
        return Ok(ClauseVerdict::vacuous(id, "graph is not minimally 1/2-tough"));
    }
    let mut ev = Evidence::default().value("triangles", triangles(g).len());
    let recovered = recover_tree(g);
    if let Some(spec) = &recovered {
        ev.add_value("tree", write_graph6(&spec.tree)?);
    }
    Ok(ClauseVerdict::decided(id, recovered.is_some(), ev))
}
