//! Exact toughness, t-tough tests, minimality and edge certificates.
//!
//! Conventions: complete graphs (including `K_1`) have infinite toughness;
//! disconnected graphs have toughness `0` with the empty witness.

mod certificate;
mod minimal;
mod solver;

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{format_rational, Rational};

pub use certificate::{
    all_edge_certificates, certificate_decomposition_stats, edge_certificate, verify_certificate,
    DecompositionStats, EdgeCertificate,
};
pub use minimal::{check_minimality, is_minimally_t_tough, MinimalityFailure, MinimalityVerdict};
pub use solver::SolverOptions;

use solver::{Mode, Ratio, Search};

/// Largest order accepted by the exhaustive solver.
pub const SOLVER_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToughnessValue {
    Infinite,
    Finite { value: Rational, witness: VertexSet },
}

impl ToughnessValue {
    pub fn value(&self) -> Option<Rational> {
        match self {
            ToughnessValue::Infinite => None,
            ToughnessValue::Finite { value, .. } => Some(*value),
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            ToughnessValue::Infinite => None,
            ToughnessValue::Finite { witness, .. } => Some(witness),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ToughnessValue::Infinite)
    }

    /// `self >= t`, with infinity above every rational.
    pub fn at_least(&self, t: &Rational) -> bool {
        self.value().is_none_or(|v| v >= *t)
    }

    pub fn equals(&self, t: &Rational) -> bool {
        self.value() == Some(*t)
    }
}

impl fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToughnessValue::Infinite => write!(f, "inf"),
            ToughnessValue::Finite { value, .. } => write!(f, "{}", format_rational(value)),
        }
    }
}

pub fn toughness(g: &Graph) -> Result<ToughnessValue> {
    toughness_with(g, SolverOptions::default())
}

pub fn toughness_with(g: &Graph, opts: SolverOptions) -> Result<ToughnessValue> {
    let rows = g.rows_upto(SOLVER_MAX_N)?;
    if g.is_complete() {
        return Ok(ToughnessValue::Infinite);
    }
    if !g.is_connected() {
        return Ok(ToughnessValue::Finite {
            value: Rational::from_integer(0),
            witness: VertexSet::new(),
        });
    }
    let (bound, fallback) = neighborhood_bound(g);
    let mut search = Search::new(rows, opts, Mode::Minimize, bound);
    search.run();
    // a sound search always attains the bound; the fallback only matters
    // under fault injection
    let witness = search.witness.unwrap_or(fallback);
    Ok(ToughnessValue::Finite {
        value: Rational::new(search.best.num as i64, search.best.den as i64),
        witness: VertexSet::from_mask(witness),
    })
}

/// `tau(G) >= t`.
pub fn is_t_tough(g: &Graph, t: &Rational) -> Result<bool> {
    let rows = g.rows_upto(SOLVER_MAX_N)?;
    if *t <= Rational::from_integer(0) || g.is_complete() {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    Ok(cut_below(rows, t).is_none())
}

/// Some `S` with `w(G - S) >= 2` and `|S| / w(G - S) < t`, for connected
/// noncomplete graphs and `t > 0`.
fn cut_below(rows: &[u64], t: &Rational) -> Option<u64> {
    let bound = Ratio {
        num: *t.numer() as i128,
        den: *t.denom() as i128,
    };
    let mut search = Search::new(rows, SolverOptions::default(), Mode::Below, bound);
    search.run();
    search.witness
}

/// `min deg(v) / w(G - N(v))` over non-universal vertices: each such
/// neighbourhood is a cut. Returns the bound and the neighbourhood attaining it.
fn neighborhood_bound(g: &Graph) -> (Ratio, u64) {
    let rows = g.rows().expect("checked by caller");
    let full = g.full_mask();
    let mut best: Option<(Ratio, u64)> = None;
    for v in 0..g.n() {
        let nb = rows[v];
        if nb | (1u64 << v) == full {
            continue;
        }
        let comps = bits::count_components(rows, full & !nb);
        let r = Ratio {
            num: nb.count_ones() as i128,
            den: comps as i128,
        };
        if best.is_none_or(|(b, _)| r.num * b.den < b.num * r.den) {
            best = Some((r, nb));
        }
    }
    best.expect("noncomplete graphs have a non-universal vertex")
}

pub(crate) fn require_positive(t: &Rational) -> Result<()> {
    if *t > Rational::from_integer(0) {
        Ok(())
    } else {
        Err(Error::NonPositiveT(format_rational(t)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_cycle, make_path, make_petersen, make_star};
    use crate::rational::{int, rat};

    fn finite(g: &Graph) -> (Rational, VertexSet) {
        match toughness(g).unwrap() {
            ToughnessValue::Finite { value, witness } => (value, witness),
            ToughnessValue::Infinite => panic!("expected finite toughness"),
        }
    }

    #[test]
    fn complete_graphs_are_infinite() {
        assert!(toughness(&make_complete(5).unwrap()).unwrap().is_infinite());
        assert!(toughness(&Graph::empty(1)).unwrap().is_infinite());
    }

    #[test]
    fn c4_has_toughness_one() {
        let (v, w) = finite(&make_cycle(4).unwrap());
        assert_eq!(v, int(1));
        assert_eq!(w, VertexSet::from([0, 2]));
    }

    #[test]
    fn claw_has_toughness_one_third() {
        let (v, w) = finite(&make_star(3).unwrap());
        assert_eq!(v, rat(1, 3));
        assert_eq!(w, VertexSet::from([0]));
    }

    #[test]
    fn petersen_is_four_thirds() {
        let (v, w) = finite(&make_petersen());
        assert_eq!(v, rat(4, 3));
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(finite(&g), (int(0), VertexSet::new()));
        assert!(!is_t_tough(&g, &rat(1, 2)).unwrap());
    }

    #[test]
    fn t_tough_thresholds() {
        let c4 = make_cycle(4).unwrap();
        assert!(is_t_tough(&c4, &int(1)).unwrap());
        assert!(!is_t_tough(&c4, &rat(3, 2)).unwrap());
        assert!(is_t_tough(&make_complete(4).unwrap(), &int(100)).unwrap());
        let p3 = make_path(3).unwrap();
        assert!(is_t_tough(&p3, &rat(1, 2)).unwrap());
        assert!(!is_t_tough(&p3, &rat(2, 3)).unwrap());
    }

    #[test]
    fn unsound_bound_is_detectably_wrong() {
        let opts = SolverOptions {
            unsound_bound: true,
            ..SolverOptions::default()
        };
        let g = make_petersen();
        assert_eq!(toughness_with(&g, opts).unwrap().value(), Some(rat(3, 2)));
        // right value, wrong witness
        let c4 = make_cycle(4).unwrap();
        let broken = toughness_with(&c4, opts).unwrap();
        assert_eq!(broken.value(), Some(int(1)));
        assert_ne!(broken, toughness(&c4).unwrap());
    }

    #[test]
    fn too_large_is_rejected() {
        let g = make_path(70).unwrap();
        assert!(matches!(toughness(&g), Err(Error::TooLarge { .. })));
    }
}
