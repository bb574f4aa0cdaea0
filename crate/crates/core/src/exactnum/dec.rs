//! Fixed-scale decimal arithmetic.
//!
//! A [`Dec`] is mant * 10^(-scale) with a big-integer mantissa. All decimal
//! output of the crate (50-significant-digit renderings, numeric evaluation
//! of asymptotic expansions, the Gaussian density, constant fitting) goes
//! through this type, so results are bit-reproducible across platforms.
//!
//! The kernel provides truncating mul/div, integer-square-root based sqrt,
//! exp via argument reduction plus Taylor series, and pi via Machin's
//! formula. Transcendental results carry absolute error below one unit in
//! the last scale digit times a small constant; callers keep guard digits by
//! working a few digits above the precision they report.

use num::bigint::BigInt;
use num::{Integer, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::quad::QuadNum;
use super::rat::Rat;

/// Default working scale: 50 reported digits plus guard digits.
pub const DEFAULT_SCALE: u32 = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Dec {
    pub mant: BigInt,
    pub scale: u32,
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Round-to-nearest quotient a/b (ties away from zero).
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * BigInt::from(2) >= b.abs() {
        if a.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

impl Dec {
    pub fn zero(scale: u32) -> Self {
        Dec {
            mant: BigInt::zero(),
            scale,
        }
    }

    pub fn one(scale: u32) -> Self {
        Self::from_int(1, scale)
    }

    pub fn from_int(v: i64, scale: u32) -> Self {
        Dec {
            mant: BigInt::from(v) * pow10(scale),
            scale,
        }
    }

    pub fn from_bigint(v: &BigInt, scale: u32) -> Self {
        Dec {
            mant: v * pow10(scale),
            scale,
        }
    }

    /// Nearest representable value of a rational.
    pub fn from_rat(r: &Rat, scale: u32) -> Self {
        Dec {
            mant: div_round(&(r.numer() * pow10(scale)), r.denom()),
            scale,
        }
    }

    /// a + b*sqrt(5) to the given scale.
    pub fn from_quad(q: &QuadNum, scale: u32) -> Self {
        let a = Self::from_rat(&q.a, scale);
        if q.b.is_zero() {
            return a;
        }
        let b = Self::from_rat(&q.b, scale);
        let s5 = Self::from_int(5, scale).sqrt();
        a.add(&b.mul(&s5))
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn neg(&self) -> Self {
        Dec {
            mant: -&self.mant,
            scale: self.scale,
        }
    }

    pub fn abs(&self) -> Self {
        Dec {
            mant: self.mant.abs(),
            scale: self.scale,
        }
    }

    fn check_scale(&self, rhs: &Self) {
        assert_eq!(self.scale, rhs.scale, "mixed decimal scales");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_scale(rhs);
        Dec {
            mant: &self.mant + &rhs.mant,
            scale: self.scale,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_scale(rhs);
        Dec {
            mant: &self.mant - &rhs.mant,
            scale: self.scale,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_scale(rhs);
        Dec {
            mant: div_round(&(&self.mant * &rhs.mant), &pow10(self.scale)),
            scale: self.scale,
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.check_scale(rhs);
        assert!(!rhs.is_zero(), "decimal division by zero");
        Dec {
            mant: div_round(&(&self.mant * pow10(self.scale)), &rhs.mant),
            scale: self.scale,
        }
    }

    pub fn cmp_val(&self, rhs: &Self) -> Ordering {
        self.check_scale(rhs);
        self.mant.cmp(&rhs.mant)
    }

    pub fn le(&self, rhs: &Self) -> bool {
        self.cmp_val(rhs) != Ordering::Greater
    }

    /// Nonnegative square root via integer square root of mant * 10^scale.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "decimal sqrt of a negative value");
        Dec {
            mant: (&self.mant * pow10(self.scale)).sqrt(),
            scale: self.scale,
        }
    }

    /// Integer power with exponentiation by squaring.
    pub fn powi(&self, k: u64) -> Self {
        let mut acc = Dec::one(self.scale);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// e^self. Argument is reduced by halving until |x| <= 1/4, the Taylor
    /// series is summed to below the scale, and the result squared back up.
    pub fn exp(&self) -> Self {
        let guard = 12u32;
        let ws = self.scale + guard;
        let x = self.rescaled(ws);
        let quarter = Dec {
            mant: pow10(ws) / 4,
            scale: ws,
        };
        let mut halvings = 0u32;
        let mut y = x;
        let two = Dec::from_int(2, ws);
        while y.abs().cmp_val(&quarter) == Ordering::Greater {
            y = y.div(&two);
            halvings += 1;
            assert!(halvings < 64, "exp argument out of range");
        }
        // Taylor: sum y^k / k!
        let mut sum = Dec::one(ws);
        let mut term = Dec::one(ws);
        let mut k = 1i64;
        loop {
            term = term.mul(&y).div(&Dec::from_int(k, ws));
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
            k += 1;
            assert!(k < 10_000, "exp series failed to converge");
        }
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        sum.rescaled(self.scale)
    }

    /// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239).
    pub fn pi(scale: u32) -> Self {
        let guard = 10u32;
        let ws = scale + guard;
        let a = atan_inv(5, ws).mul(&Dec::from_int(16, ws));
        let b = atan_inv(239, ws).mul(&Dec::from_int(4, ws));
        a.sub(&b).rescaled(scale)
    }

    /// Change scale, rounding when reducing.
    pub fn rescaled(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Dec {
                mant: &self.mant * pow10(scale - self.scale),
                scale,
            },
            Ordering::Less => Dec {
                mant: div_round(&self.mant, &pow10(self.scale - scale)),
                scale,
            },
        }
    }

    pub fn to_f64(&self) -> f64 {
        Rat::new(self.mant.clone(), pow10(self.scale))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Fixed-point rendering with `digits` fractional digits.
    pub fn to_string_fixed(&self, digits: u32) -> String {
        let r = self.rescaled(digits);
        let neg = r.mant.is_negative();
        let m = r.mant.abs();
        let (int, frac) = m.div_rem(&pow10(digits));
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0width$}", width = digits as usize)
        }
    }

    /// Rendering with `sig` significant digits (used for 50-digit output).
    pub fn to_string_sig(&self, sig: u32) -> String {
        assert!(sig >= 1, "at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let digits_total = self.mant.abs().to_string().len() as u32;
        let frac = if digits_total > self.scale {
            // |value| >= 1: spend significance on the integer part first
            let int_digits = digits_total - self.scale;
            sig.saturating_sub(int_digits).min(self.scale)
        } else {
            // |value| < 1: skip the leading zeros, then sig digits
            let lead_zeros = self.scale - digits_total;
            (lead_zeros + sig).min(self.scale)
        };
        self.to_string_fixed(frac)
    }
}

fn atan_inv(x: i64, scale: u32) -> Dec {
    // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
    let mut term_denom = BigInt::from(x);
    let x2 = BigInt::from(x) * BigInt::from(x);
    let unit = pow10(scale);
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    loop {
        let term = &unit / (&term_denom * BigInt::from(2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        term_denom *= &x2;
        k += 1;
        assert!(k < 100_000, "atan series failed to converge");
    }
    Dec { mant: sum, scale }
}

impl fmt::Debug for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_fixed(self.scale.min(30)))
    }
}
