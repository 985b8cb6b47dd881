//! Exact rational scalars and their text form.
//!
//! All coefficients in this crate are arbitrary-precision rationals in
//! lowest terms with a positive denominator. Serialized form is `"p/q"`,
//! or just `"p"` when the denominator is 1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders in the exact `"p/q"` form, omitting `/q` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or a bare integer string.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().ok()?;
            let d: BigInt = den.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// Exact integer extraction; `None` when the denominator is not 1.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Absolute value, used by convergence-trend comparisons in tests.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&parse_rational("-4/2").unwrap()), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
        assert!(parse_rational("1.5").is_none());
    }
}
