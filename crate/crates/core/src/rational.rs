//! Exact rationals. Toughness values and thresholds never touch floats.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(p)
}

/// Parses `"p/q"` or `"p"`. Decimal points and exponents are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |reason: &str| Error::InvalidRational {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let s = text.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let digits = |x: &str| {
        let body = x.strip_prefix('-').unwrap_or(x);
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(p) || !digits(q) {
        return Err(bad("expected integers of the form p/q"));
    }
    let p: i64 = p.parse().map_err(|_| bad("numerator out of range"))?;
    let q: i64 = q.parse().map_err(|_| bad("denominator out of range"))?;
    if q == 0 {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// `"p/q"` in lowest terms with a positive denominator, including `"2/1"`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact ceiling of `num / den` for `den != 0`.
pub fn ceil_div(num: i128, den: i128) -> i128 {
    assert!(den != 0, "zero denominator");
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    Integer::div_ceil(&num, &den)
}

pub fn ceil(r: &Rational) -> i64 {
    ceil_div(*r.numer() as i128, *r.denom() as i128) as i64
}

/// The integer `r` if `r` is integral.
pub fn as_integer(r: &Rational) -> Option<i64> {
    r.is_integer().then(|| r.to_integer())
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive() && !r.is_zero()
}
