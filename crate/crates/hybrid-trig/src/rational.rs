//! The exact coefficient domain: arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar. `BigRational` keeps the invariants we
/// need: numerator and denominator coprime, denominator positive.
pub type Rational = BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"` or `"n/d"` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::InvalidInput(format!("bad rational '{text}': {msg}"));
    let (num_s, den_s) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = num_s.trim().parse().map_err(|_| bad("numerator"))?;
    let den: BigInt = match den_s {
        Some(d) => d.trim().parse().map_err(|_| bad("denominator"))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"n"` / `"n/d"` rendering, inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for numeric evaluation; exact values may exceed f64 range.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of leading digits when numer/denom overflow
        let n = r.numer().abs().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        let sign = if r.numer().is_negative() { -1.0 } else { 1.0 };
        sign * n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-3", "3/4", "-3/4", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical inputs are reduced
        assert_eq!(format_rational(&parse_rational("6/8").unwrap()), "3/4");
        assert_eq!(format_rational(&parse_rational("3/-4").unwrap()), "-3/4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
