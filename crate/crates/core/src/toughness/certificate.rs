//! Edge certificates `S(e)` for minimally t-tough graphs.
//!
//! For an edge `e = uv` either `e` is a bridge of `G` (then `S(e)` is empty),
//! or `S(e)` is a smallest set with
//!
//! ```text
//! w(G - S) <= |S| / t,   w((G - e) - S) > |S| / t,   e a bridge of G - S.
//! ```
//!
//! Ties on `|S|` go to the lexicographically least set.

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{components_after_removal, is_bridge, Edge, Graph, VertexSet};
use crate::rational::{format_rational, Rational};

use super::SOLVER_MAX_N;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCertificate {
    pub edge: Edge,
    #[serde(serialize_with = "ser_rational")]
    pub t: Rational,
    /// `S(e)`.
    pub s: VertexSet,
    /// `k(e) = |S(e)|`.
    pub k: usize,
    /// `w(G - S(e))`.
    pub components: usize,
    /// Component of `G - S(e)` containing `e`.
    pub c_of_e: VertexSet,
    /// Union of the other components of `G - S(e)`.
    pub d_of_e: VertexSet,
    /// Component of `(G - e) - S(e)` containing `u`.
    pub c_u: VertexSet,
    /// Component of `(G - e) - S(e)` containing `v`.
    pub c_v: VertexSet,
    /// `e` is a bridge of `G` and `S(e)` is empty.
    pub bridge_case: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// `N_{S(e)}(C(e))`, `N_{S(e)}(D(e))`, `S_1` and the neighbourhoods in
/// `S(e)` of every component of `D(e)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionStats {
    pub n_s_c: VertexSet,
    pub n_s_d: VertexSet,
    pub s1: VertexSet,
    /// Components of `G - S(e) - C(e)` with their neighbourhoods in `S(e)`.
    pub d_components: Vec<(VertexSet, VertexSet)>,
}

impl DecompositionStats {
    pub fn n_s_c_len(&self) -> usize {
        self.n_s_c.len()
    }
}

fn rows_without_edge(rows: &[u64], e: Edge) -> Vec<u64> {
    let mut r = rows.to_vec();
    r[e.u] &= !(1u64 << e.v);
    r[e.v] &= !(1u64 << e.u);
    r
}

fn build(g: &Graph, e: Edge, t: &Rational, s: u64, bridge_case: bool) -> EdgeCertificate {
    let rows = g.rows().expect("checked by caller");
    let rows_e = rows_without_edge(rows, e);
    let alive = g.full_mask() & !s;
    let c = bits::reach(rows, alive, e.u);
    let c_u = bits::reach(&rows_e, alive, e.u);
    let c_v = bits::reach(&rows_e, alive, e.v);
    EdgeCertificate {
        edge: e,
        t: *t,
        s: VertexSet::from_mask(s),
        k: s.count_ones() as usize,
        components: bits::count_components(rows, alive),
        c_of_e: VertexSet::from_mask(c),
        d_of_e: VertexSet::from_mask(alive & !c),
        c_u: VertexSet::from_mask(c_u),
        c_v: VertexSet::from_mask(c_v),
        bridge_case,
    }
}

fn satisfies(rows: &[u64], rows_e: &[u64], full: u64, s: u64, t: &Rational) -> bool {
    let k = s.count_ones() as i128;
    let (p, q) = (*t.numer() as i128, *t.denom() as i128);
    let alive = full & !s;
    let w = bits::count_components(rows, alive) as i128;
    // w <= k / t  <=>  w * p <= k * q
    if w * p > k * q {
        return false;
    }
    let we = bits::count_components(rows_e, alive) as i128;
    we * p > k * q && we == w + 1
}

/// Every minimum-cardinality `S(e)` in lexicographic order (one empty set
/// in the bridge case).
pub fn all_edge_certificates(g: &Graph, e: Edge, t: &Rational) -> Result<Vec<EdgeCertificate>> {
    super::require_positive(t)?;
    let rows = g.rows_upto(SOLVER_MAX_N)?;
    g.check_edge(e)?;
    if is_bridge(g, e)? {
        return Ok(vec![build(g, e, t, 0, true)]);
    }
    let rows_e = rows_without_edge(rows, e);
    let full = g.full_mask();
    let pool = full & !(1u64 << e.u) & !(1u64 << e.v);
    for k in 1..=pool.count_ones() as usize {
        let mut found = Vec::new();
        bits::for_each_subset(pool, k, |s| {
            if satisfies(rows, &rows_e, full, s, t) {
                found.push(s);
            }
            true
        });
        if !found.is_empty() {
            return Ok(found.into_iter().map(|s| build(g, e, t, s, false)).collect());
        }
    }
    Err(Error::NoCertificate {
        edge: e,
        t: format_rational(t),
    })
}

/// The certificate for `e` with the least `k(e)`, ties broken
/// lexicographically.
pub fn edge_certificate(g: &Graph, e: Edge, t: &Rational) -> Result<EdgeCertificate> {
    super::require_positive(t)?;
    let rows = g.rows_upto(SOLVER_MAX_N)?;
    g.check_edge(e)?;
    if is_bridge(g, e)? {
        return Ok(build(g, e, t, 0, true));
    }
    let rows_e = rows_without_edge(rows, e);
    let full = g.full_mask();
    let pool = full & !(1u64 << e.u) & !(1u64 << e.v);
    for k in 1..=pool.count_ones() as usize {
        let mut hit = None;
        bits::for_each_subset(pool, k, |s| {
            if satisfies(rows, &rows_e, full, s, t) {
                hit = Some(s);
                false
            } else {
                true
            }
        });
        if let Some(s) = hit {
            return Ok(build(g, e, t, s, false));
        }
    }
    Err(Error::NoCertificate {
        edge: e,
        t: format_rational(t),
    })
}

/// Re-checks a certificate from scratch with list-based component counts.
/// Minimality of `|S(e)|` is not re-checked.
pub fn verify_certificate(g: &Graph, cert: &EdgeCertificate) -> std::result::Result<(), String> {
    let e = cert.edge;
    let t = cert.t;
    g.check_edge(e).map_err(|x| x.to_string())?;
    let ge = g.without_edge(e).map_err(|x| x.to_string())?;
    let s = &cert.s;
    if s.contains(e.u) || s.contains(e.v) {
        return Err(format!("S(e) contains an endpoint of {e}"));
    }
    if cert.k != s.len() {
        return Err(format!("k(e) = {} but |S(e)| = {}", cert.k, s.len()));
    }
    let p = components_after_removal(g, s).map_err(|x| x.to_string())?;
    let pe = components_after_removal(&ge, s).map_err(|x| x.to_string())?;
    if cert.components != p.count {
        return Err(format!("stored w(G-S) = {} but recount gives {}", cert.components, p.count));
    }
    if pe.count != p.count + 1 {
        return Err(format!("{e} is not a bridge of G - S(e)"));
    }
    if cert.bridge_case {
        if !s.is_empty() {
            return Err("bridge case with non-empty S(e)".into());
        }
        if !is_bridge(g, e).map_err(|x| x.to_string())? {
            return Err(format!("{e} flagged as a bridge of G but is not"));
        }
    } else {
        let k = Rational::from_integer(s.len() as i64);
        let w = Rational::from_integer(p.count as i64);
        let we = Rational::from_integer(pe.count as i64);
        if w * t > k {
            return Err(format!("w(G-S) = {} exceeds |S|/t", p.count));
        }
        if we * t <= k {
            return Err(format!("w((G-e)-S) = {} does not exceed |S|/t", pe.count));
        }
    }
    let comps = p.components();
    let ce = p.component_of(e.u).ok_or("u removed")?;
    if p.component_of(e.v) != Some(ce) {
        return Err("u and v lie in different components of G - S(e)".into());
    }
    if cert.c_of_e != comps[ce] {
        return Err(format!("C(e) should be {}", comps[ce]));
    }
    let d: VertexSet = comps
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != ce)
        .flat_map(|(_, c)| c.iter())
        .collect();
    if cert.d_of_e != d {
        return Err(format!("D(e) should be {d}"));
    }
    let ecomps = pe.components();
    let cu = &ecomps[pe.component_of(e.u).ok_or("u removed")?];
    let cv = &ecomps[pe.component_of(e.v).ok_or("v removed")?];
    if cert.c_u != *cu || cert.c_v != *cv {
        return Err(format!("C_u, C_v should be {cu}, {cv}"));
    }
    Ok(())
}

/// Neighbourhood of `x` inside `s`.
fn n_in(g: &Graph, s: &VertexSet, x: &VertexSet) -> VertexSet {
    s.iter()
        .filter(|&w| g.neighbors(w).iter().any(|&y| x.contains(y)))
        .collect()
}

pub fn certificate_decomposition_stats(g: &Graph, cert: &EdgeCertificate) -> Result<DecompositionStats> {
    if cert.d_of_e.is_empty() {
        return Err(Error::DecompositionUndefined);
    }
    let s = &cert.s;
    let n_s_c = n_in(g, s, &cert.c_of_e);
    let n_s_d = n_in(g, s, &cert.d_of_e);
    let s1 = n_s_c.iter().filter(|&w| !n_s_d.contains(w)).collect();
    let mut removed: Vec<usize> = s.iter().collect();
    removed.extend(cert.c_of_e.iter());
    let p = components_after_removal(g, &VertexSet::from(removed))?;
    let d_components = p
        .components()
        .into_iter()
        .map(|c| {
            let nb = n_in(g, s, &c);
            (c, nb)
        })
        .collect();
    Ok(DecompositionStats {
        n_s_c,
        n_s_d,
        s1,
        d_components,
    })
}
