use serde::Serialize;

use crate::error::Result;
use crate::graph::{degree_profile, Graph};
use crate::rational::{ceil_div, format_rational, rat, Rational};

/// Minimum-degree bounds for a minimally t-tough claw-free graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBoundReport {
    #[serde(serialize_with = "ser_rational")]
    pub t: Rational,
    pub delta: usize,
    /// `ceil((10t - 5) / 3)` for `t >= 2`; 1, 2, 3 for `t` = 1/2, 1, 3/2;
    /// otherwise no proven bound.
    pub bound: Option<i64>,
    /// `delta <= bound`, when a bound exists.
    pub satisfied: Option<bool>,
    /// `ceil(2t)`.
    pub conjecture_bound: i64,
    /// Some vertex has degree exactly `ceil(2t)`.
    pub conjecture_satisfied: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// `ceil((10t - 5) / 3)`, for any `t`.
pub fn theorem_bound(t: &Rational) -> i64 {
    let (p, q) = (*t.numer() as i128, *t.denom() as i128);
    ceil_div(10 * p - 5 * q, 3 * q) as i64
}

/// `ceil(2t)`.
pub fn conjecture_bound(t: &Rational) -> i64 {
    let (p, q) = (*t.numer() as i128, *t.denom() as i128);
    ceil_div(2 * p, q) as i64
}

/// The proven bound applicable at `t`, if any.
pub fn proven_bound(t: &Rational) -> Option<i64> {
    if *t >= rat(2, 1) {
        Some(theorem_bound(t))
    } else if *t == rat(1, 2) {
        Some(1)
    } else if *t == rat(1, 1) {
        Some(2)
    } else if *t == rat(3, 2) {
        Some(3)
    } else {
        None
    }
}

/// Evaluates the bounds against `g`. Hypotheses are not checked here.
pub fn check_degree_bound(g: &Graph, t: &Rational) -> Result<DegreeBoundReport> {
    let profile = degree_profile(g)?;
    let bound = proven_bound(t);
    let conjecture_bound = conjecture_bound(t);
    Ok(DegreeBoundReport {
        t: *t,
        delta: profile.min,
        bound,
        satisfied: bound.map(|b| profile.min as i64 <= b),
        conjecture_bound,
        conjecture_satisfied: profile.degrees.iter().any(|&d| d as i64 == conjecture_bound),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::make_cycle;

    #[test]
    fn formula_values() {
        assert_eq!(theorem_bound(&rat(2, 1)), 5);
        assert_eq!(theorem_bound(&rat(3, 1)), 9);
        assert_eq!(theorem_bound(&rat(5, 2)), 7);
        assert_eq!(conjecture_bound(&rat(5, 4)), 3);
        assert_eq!(conjecture_bound(&rat(-1, 3)), 0);
        assert_eq!(proven_bound(&rat(3, 2)), Some(3));
        assert_eq!(proven_bound(&rat(4, 3)), None);
    }

    #[test]
    fn cycle_report() {
        let r = check_degree_bound(&make_cycle(4).unwrap(), &rat(1, 1)).unwrap();
        assert_eq!(r.delta, 2);
        assert_eq!(r.bound, Some(2));
        assert_eq!(r.satisfied, Some(true));
        assert_eq!(r.conjecture_bound, 2);
        assert!(r.conjecture_satisfied);
    }
}
