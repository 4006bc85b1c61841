//! Exact scalar arithmetic.
//!
//! Every computation in this crate is over the rationals; no floating point
//! appears anywhere. Scalars are arbitrary-precision fractions kept in
//! lowest terms with a positive denominator, which is exactly the invariant
//! maintained by `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued scalar.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Shorthand for p/q. Panics on q == 0; intended for literals in code.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a scalar as `p` or `p/q` with q > 1.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q`. The denominator must be nonzero; the result is
/// normalized (reduced, positive denominator) by construction.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(AlgebraError::Parse("empty rational literal".into()));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| AlgebraError::Parse(format!("bad integer `{num_str}` in rational `{s}`")))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| AlgebraError::Parse(format!("bad integer `{den_str}` in rational `{s}`")))?;
    if denom.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(numer, denom))
}

/// True if x is a (possibly negative) integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Sign-sensitive absolute value, used only by display helpers.
pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "2/3", "-5/4", "10/6"] {
            let x = parse_rational(s).unwrap();
            let back = parse_rational(&format_rational(&x)).unwrap();
            assert_eq!(x, back);
        }
        // normalization: 10/6 reduces, -1/-2 flips sign to the numerator
        assert_eq!(format_rational(&parse_rational("10/6").unwrap()), "5/3");
        assert_eq!(format_rational(&parse_rational("-1/-2").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(parse_rational("1/0"), Err(AlgebraError::Parse(_))));
    }

    #[test]
    fn garbage_rejected() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/").is_err());
    }
}
