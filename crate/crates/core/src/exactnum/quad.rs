//! The real quadratic field Q(sqrt 5).
//!
//! [`QuadNum`] stores a + b*sqrt(5) with exact rational components. The type
//! is a field: division goes through the conjugate, so 1/(a + b*sqrt 5) =
//! (a - b*sqrt 5)/(a^2 - 5 b^2). Ordering is the real-number order, decided
//! exactly from the signs of the components and of the norm.

use crate::error::{Error, Result};
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::rat::{format_rat, rat_int, Rat};
use super::Coeff;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    /// Rational part.
    pub a: Rat,
    /// Coefficient of sqrt(5).
    pub b: Rat,
}

impl QuadNum {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadNum { a, b }
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadNum { a, b: Rat::zero() }
    }

    pub fn from_int(a: i64) -> Self {
        Self::from_rat(rat_int(a))
    }

    /// a + b*sqrt(5) from machine-integer ratios: (an/ad) + (bn/bd)*sqrt(5).
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QuadNum {
            a: super::rat::rat(an, ad),
            b: super::rat::rat(bn, bd),
        }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn sqrt5() -> Self {
        QuadNum {
            a: Rat::zero(),
            b: Rat::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Rational part if the value is rational.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Galois conjugate a - b*sqrt(5).
    pub fn conj(&self) -> Self {
        QuadNum {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm a^2 - 5 b^2 (rational).
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - rat_int(5) * &self.b * &self.b
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero {
                context: "QuadNum::inv",
            });
        }
        let n = self.norm();
        debug_assert!(!n.is_zero(), "nonzero element of a real field has nonzero norm");
        Ok(QuadNum {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    /// Sign of the real value: -1, 0, or 1.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (s, t) if s == t => s,
            // components of opposite sign: compare a^2 against 5 b^2
            (s, _) => {
                let cmp = (&self.a * &self.a).cmp(&(rat_int(5) * &self.b * &self.b));
                match cmp {
                    Ordering::Greater => s,
                    Ordering::Less => -s,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    /// |self| as a field element.
    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Integer power (negative allowed; errors on 0^-k).
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.powi(-k);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Exact square root within Q(sqrt 5), if one exists.
    ///
    /// Solves (x + y*sqrt 5)^2 = a + b*sqrt 5: for b = 0 the root is either
    /// rational or a pure sqrt(5)-multiple; otherwise x^2 is a root of
    /// 4 t^2 - 4 a t + 5 b^2 and must be a rational square.
    pub fn sqrt_in_field(&self) -> Option<Self> {
        if self.sign() < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.b.is_zero() {
            if let Some(x) = Coeff::sqrt_exact(&self.a) {
                return Some(QuadNum::new(x, Rat::zero()));
            }
            // sqrt(a) = y*sqrt(5) with y^2 = a/5
            if let Some(y) = Coeff::sqrt_exact(&(&self.a / rat_int(5))) {
                return Some(QuadNum::new(Rat::zero(), y));
            }
            return None;
        }
        let disc = Coeff::sqrt_exact(&(&self.a * &self.a - rat_int(5) * &self.b * &self.b))?;
        for s in [disc.clone(), -disc] {
            let x2 = (&self.a + &s) / rat_int(2);
            if let Some(x) = Coeff::sqrt_exact(&x2) {
                if !x.is_zero() {
                    let y = &self.b / (rat_int(2) * &x);
                    let cand = QuadNum::new(x, y);
                    if cand.sign() >= 0 && &(&cand * &cand) == self {
                        return Some(cand);
                    }
                    let cand = -cand;
                    if cand.sign() >= 0 && &(&cand * &cand) == self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }

    /// f64 approximation (test/diagnostic use; exact paths never round).
    pub fn to_f64(&self) -> f64 {
        use num::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other.clone()).sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a QuadNum> for &'a QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &'a QuadNum) -> QuadNum {
                QuadNum::$method(self.clone(), rhs.clone())
            }
        }
    };
}

impl Add for QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: QuadNum) -> QuadNum {
        QuadNum {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: QuadNum) -> QuadNum {
        QuadNum {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Mul for QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: QuadNum) -> QuadNum {
        // (a + b s)(c + d s) = ac + 5bd + (ad + bc) s   with s = sqrt 5
        QuadNum {
            a: &self.a * &rhs.a + rat_int(5) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for QuadNum {
    type Output = QuadNum;
    fn div(self, rhs: QuadNum) -> QuadNum {
        let inv = rhs.inv().expect("QuadNum division by zero");
        self * inv
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum {
            a: -self.a,
            b: -self.b,
        }
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rat(&self.a));
        }
        let bs = if self.b == Rat::one() {
            "sqrt(5)".to_string()
        } else if self.b == -Rat::one() {
            "-sqrt(5)".to_string()
        } else {
            format!("{}*sqrt(5)", format_rat(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{bs}")
        } else if self.b.is_positive() {
            write!(f, "{} + {bs}", format_rat(&self.a))
        } else {
            write!(f, "{} - {}", format_rat(&self.a), bs.trim_start_matches('-'))
        }
    }
}

// Debug delegates to Display; the algebraic form is the useful repr.
impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for QuadNum {
    fn zero() -> Self {
        QuadNum::zero()
    }
    fn is_zero(&self) -> bool {
        QuadNum::is_zero(self)
    }
}

impl One for QuadNum {
    fn one() -> Self {
        QuadNum::one()
    }
}

impl Coeff for QuadNum {
    fn from_rat(r: &Rat) -> Self {
        QuadNum::from_rat(r.clone())
    }
    fn sqrt_exact(&self) -> Option<Self> {
        self.sqrt_in_field()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat;

    #[test]
    fn product_of_conjugates() {
        // (1 + sqrt 5)(1 - sqrt 5) = -4
        let p = QuadNum::from_parts(1, 1, 1, 1);
        let q = p.conj();
        assert_eq!(p * q, QuadNum::from_int(-4));
    }

    #[test]
    fn golden_singularity_product() {
        // (3 - sqrt 5)/2 * (3 + sqrt 5)/2 = 1
        let zeta = QuadNum::from_parts(3, 2, -1, 2);
        let mu = QuadNum::from_parts(3, 2, 1, 2);
        assert_eq!(&zeta * &mu, QuadNum::one());
    }

    #[test]
    fn inverse_via_conjugate() {
        // 1/(2 + sqrt 5) = -2 + sqrt 5; verified by multiplying back
        let x = QuadNum::from_parts(2, 1, 1, 1);
        let inv = x.inv().unwrap();
        assert_eq!(inv, QuadNum::from_parts(-2, 1, 1, 1));
        assert_eq!(&x * &inv, QuadNum::one());
    }

    #[test]
    fn exact_sign_determination() {
        // 3 - sqrt 5 > 0, 2 - sqrt 5 < 0, sqrt 5 - 9/4 < 0 (since 5 < 81/16)
        assert_eq!(QuadNum::from_parts(3, 1, -1, 1).sign(), 1);
        assert_eq!(QuadNum::from_parts(2, 1, -1, 1).sign(), -1);
        assert_eq!(QuadNum::new(rat(-9, 4), rat(1, 1)).sign(), -1);
        assert_eq!(QuadNum::zero().sign(), 0);
    }

    #[test]
    fn ordering_matches_real_line() {
        let zeta = QuadNum::from_parts(3, 2, -1, 2); // ~0.382
        let half = QuadNum::from_rat(rat(1, 2));
        let mu = QuadNum::from_parts(3, 2, 1, 2); // ~2.618
        assert!(zeta < half);
        assert!(half < mu);
    }

    #[test]
    fn square_roots_in_field() {
        // sqrt(9/4) = 3/2
        assert_eq!(
            QuadNum::from_rat(rat(9, 4)).sqrt_in_field(),
            Some(QuadNum::from_rat(rat(3, 2)))
        );
        // sqrt(5) itself
        assert_eq!(
            QuadNum::from_int(5).sqrt_in_field(),
            Some(QuadNum::sqrt5())
        );
        // (7 + 3 sqrt 5)/2 = ((3 + sqrt 5)/2)^2 is a square
        let mu = QuadNum::from_parts(3, 2, 1, 2);
        let sq = &mu * &mu;
        assert_eq!(sq.sqrt_in_field(), Some(mu));
        // 5 sqrt(5) - 11 > 0 but has no square root in the field
        let q = QuadNum::from_parts(-11, 1, 5, 1);
        assert!(q.is_positive());
        assert_eq!(q.sqrt_in_field(), None);
        // negative numbers have none
        assert_eq!(QuadNum::from_int(-4).sqrt_in_field(), None);
    }

    #[test]
    fn integer_powers() {
        let mu = QuadNum::from_parts(3, 2, 1, 2);
        let zeta = QuadNum::from_parts(3, 2, -1, 2);
        assert_eq!(mu.powi(3).unwrap() * zeta.powi(3).unwrap(), QuadNum::one());
        assert_eq!(mu.powi(-2).unwrap(), zeta.powi(2).unwrap());
    }
}
