//! Small helpers around `BigRational`: construction, `"p/q"` strings for
//! reports, and an overflow-safe conversion to `f64`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Rational from an integer.
pub fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational `p/q`; panics on `q == 0` (caller bug, not input data).
pub fn rat(p: i64, q: i64) -> BigRational {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p"` or `"p/q"` (lowest terms not required on input).
pub fn parse_rat(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| Error::InvalidParameter(format!("bad rational {s:?}: {e}")))
}

/// Canonical report form: `"p"` for integers, `"p/q"` otherwise (lowest terms).
pub fn format_rat(r: &BigRational) -> String {
    r.to_string()
}

/// Convert to `f64` without overflowing through the numerator or denominator.
///
/// `BigRational::to_f64` goes through both parts separately and collapses to
/// `NaN` once either exceeds the `f64` range; exact characteristic-polynomial
/// coefficients routinely do. This version cancels magnitudes bit-wise first.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let num = r.numer();
    let den = r.denom();
    if let (Some(n), Some(d)) = (num.to_f64(), den.to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Shift both parts into a comfortable range, tracking the exponent.
    let nbits = num.bits() as i64;
    let dbits = den.bits() as i64;
    let shift_n = (nbits - 100).max(0);
    let shift_d = (dbits - 100).max(0);
    let n = (num.abs() >> shift_n as u64).to_f64().unwrap_or(f64::MAX);
    let d = (den.abs() >> shift_d as u64).to_f64().unwrap_or(f64::MAX);
    let mut v = n / d * 2f64.powi((shift_n - shift_d) as i32);
    if num.sign() == Sign::Minus {
        v = -v;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-3", "1/2", "-7/3", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("2/4").unwrap()), "1/2");
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn to_f64_handles_huge_parts() {
        let big = BigInt::from(10).pow(400);
        let r = BigRational::new(big.clone(), &big * BigInt::from(2));
        assert!((rat_to_f64(&r) - 0.5).abs() < 1e-12);
        let r = BigRational::new(BigInt::from(3) * &big, big);
        assert!((rat_to_f64(&r) - 3.0).abs() < 1e-12);
        assert_eq!(rat_to_f64(&BigRational::one()), 1.0);
    }
}
