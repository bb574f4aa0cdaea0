//! Univariate rational functions num/den.
//!
//! Over the rationals, construction reduces by the polynomial gcd and
//! normalizes the denominator to primitive integer coefficients with positive
//! leading coefficient. Equality is decided by cross-multiplication, so it is
//! representation-independent even for unreduced generic coefficients.

use super::poly::Poly;
use super::rat::Rat;
use super::{Coeff, QuadNum};
use crate::error::{Error, Result};
use num::One;

#[derive(Clone)]
pub struct RatFun<F> {
    pub num: Poly<F>,
    pub den: Poly<F>,
}

impl<F: Coeff> RatFun<F> {
    /// num/den without reduction. Panics on a zero denominator.
    pub fn raw(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFun { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::raw(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::raw(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::raw(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero {
                context: "RatFun::div",
            });
        }
        Ok(Self::raw(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::raw(self.num.neg(), self.den.clone())
    }

    /// Quotient-rule derivative (num' den - num den') / den^2.
    pub fn derivative(&self) -> Self {
        Self::raw(
            self.num
                .derivative()
                .mul(&self.den)
                .sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    /// Representation-independent equality: num1 * den2 = num2 * den1.
    pub fn eq_cross(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }
}

impl RatFun<Rat> {
    /// Reduced, normalized form.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = self.num.gcd(&self.den);
        let (num, den) = if g.is_constant() {
            (self.num.clone(), self.den.clone())
        } else {
            (
                self.num.div_exact(&g).expect("gcd divides numerator"),
                self.den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        // normalize: denominator primitive with positive leading coefficient
        let (prim, unit) = den.primitive_parts();
        let den = Poly::new(prim.into_iter().map(Rat::from_integer).collect());
        let num = num.scale(&(Rat::one() / unit));
        RatFun { num, den }
    }

    /// Evaluate at a Q(sqrt 5) point; errors if the (reduced) denominator
    /// vanishes there.
    pub fn eval_quad(&self, x: &QuadNum) -> Result<QuadNum> {
        let r = self.reduced();
        let d = r.den.eval_quad(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero {
                context: "RatFun::eval_quad at a pole",
            });
        }
        Ok(r.num.eval_quad(x) / d)
    }

    /// Pole multiplicity at a point with rational minimal polynomial `mp`
    /// (degree 1 or 2): multiplicity in the reduced denominator.
    pub fn pole_multiplicity(&self, mp: &Poly<Rat>) -> usize {
        let r = self.reduced();
        r.den.multiplicity_of(mp)
    }
}

impl<F: Coeff> std::fmt::Debug for RatFun<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{rat, rat_int};

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn cross_multiplication_equality() {
        // (X-1)/(X^2-1) = 1/(X+1)
        let a = RatFun::raw(p(&[-1, 1]), p(&[-1, 0, 1]));
        let b = RatFun::raw(p(&[1]), p(&[1, 1]));
        assert!(a.eq_cross(&b));
        let c = RatFun::raw(p(&[1]), p(&[2, 1]));
        assert!(!a.eq_cross(&c));
    }

    #[test]
    fn reduction_normalizes_denominator() {
        // (2X - 2)/(4X^2 - 4) reduces to 1/(2X + 2), denominator primitive
        let a = RatFun::raw(p(&[-2, 2]), p(&[-4, 0, 4])).reduced();
        assert_eq!(a.den, p(&[1, 1]));
        assert_eq!(a.num, Poly::constant(rat(1, 2)));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dX [1/(1-X)] = 1/(1-X)^2
        let a = RatFun::raw(p(&[1]), p(&[1, -1]));
        let expect = RatFun::raw(p(&[1]), p(&[1, -1]).mul(&p(&[1, -1])));
        assert!(a.derivative().eq_cross(&expect));
    }

    #[test]
    fn arithmetic() {
        let a = RatFun::raw(p(&[1]), p(&[1, -1])); // 1/(1-X)
        let b = RatFun::raw(p(&[1]), p(&[1, 1])); // 1/(1+X)
        // sum = 2/(1-X^2)
        let expect = RatFun::raw(p(&[2]), p(&[1, 0, -1]));
        assert!(a.add(&b).eq_cross(&expect));
        // a * b = 1/(1-X^2)
        let expect = RatFun::raw(p(&[1]), p(&[1, 0, -1]));
        assert!(a.mul(&b).eq_cross(&expect));
        // a / b = (1+X)/(1-X)
        let expect = RatFun::raw(p(&[1, 1]), p(&[1, -1]));
        assert!(a.div(&b).unwrap().eq_cross(&expect));
    }

    #[test]
    fn pole_multiplicity_by_minimal_polynomial() {
        // 1/((X^2-3X+1)^2 (X-1)) has multiplicity 2 at the quadratic, 1 at X-1
        let q = p(&[1, -3, 1]);
        let den = q.mul(&q).mul(&p(&[-1, 1]));
        let f = RatFun::raw(p(&[1]), den);
        assert_eq!(f.pole_multiplicity(&q), 2);
        assert_eq!(f.pole_multiplicity(&p(&[-1, 1])), 1);
        assert_eq!(f.pole_multiplicity(&p(&[1, 1])), 0);
    }
}
