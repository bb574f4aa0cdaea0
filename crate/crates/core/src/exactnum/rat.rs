//! Arbitrary-precision rationals.
//!
//! [`Rat`] is `num`'s `BigRational`, which already maintains the invariants
//! this crate needs: gcd(numerator, denominator) = 1, denominator >= 1, zero
//! stored as 0/1. This module adds construction, parsing and formatting
//! helpers plus a few small numeric utilities used across the crate.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

use super::Coeff;

pub type Rat = BigRational;

/// Rational p/q from machine integers. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "rat: zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from a machine integer.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parse "p", "p/q", or "-p/q". The stored value is reduced regardless of the
/// input form.
pub fn parse_rat(s: &str) -> Result<Rat> {
    BigRational::from_str(s.trim()).map_err(|e| Error::Parse {
        context: format!("rational {s:?}: {e}"),
    })
}

/// Canonical string form: "p" for integers, "p/q" otherwise.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// True if 2r is an integer.
pub fn is_half_integer(r: &Rat) -> bool {
    (r * rat_int(2)).is_integer()
}

/// Generalized binomial coefficient C(t, m) for rational t and m >= 0.
pub fn binom_rat(t: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    for j in 0..m {
        acc *= (t - rat_int(j as i64)) / rat_int((j + 1) as i64);
    }
    acc
}

/// Exact binomial C(n, k) for big-integer n.
pub fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

impl Coeff for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if Zero::is_zero(self) {
            return Some(Zero::zero());
        }
        let num = int_sqrt_exact(self.numer())?;
        let den = int_sqrt_exact(self.denom())?;
        Some(Rat::new(num, den))
    }
}

/// Exact integer square root, `None` if the input is not a perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-5", "7/8", "-7/8"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // unreduced input is stored reduced
        assert_eq!(format_rat(&parse_rat("6/4").unwrap()), "3/2");
    }

    #[test]
    fn half_integers() {
        assert!(is_half_integer(&rat(3, 2)));
        assert!(is_half_integer(&rat_int(-2)));
        assert!(!is_half_integer(&rat(1, 3)));
    }

    #[test]
    fn generalized_binomials() {
        // C(1/2, 2) = -1/8
        assert_eq!(binom_rat(&rat(1, 2), 2), rat(-1, 8));
        // C(-1/2, 3) = -5/16
        assert_eq!(binom_rat(&rat(-1, 2), 3), rat(-5, 16));
        assert_eq!(binom_rat(&rat_int(4), 2), rat_int(6));
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rat(9, 4).sqrt_exact(), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).sqrt_exact(), None);
        assert_eq!(rat(-1, 1).sqrt_exact(), None);
    }
}
