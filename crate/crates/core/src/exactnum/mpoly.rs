//! Sparse trivariate polynomials and rational functions.
//!
//! Variables, in exponent order: X is the size variable of the generating
//! function, Y marks hairpins, Z marks base pairs. Coefficients are exact
//! rationals. [`MRatFun3`] deliberately has no general multivariate gcd;
//! fractions are kept manageable by content normalization plus cancellation
//! of an explicit list of known factors (monomials, X - 1, and the radicand)
//! via exact trial division, which is all the Euler pipeline needs.

use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use super::poly::Poly;
use super::rat::{rat_int, Rat};
use super::ratfun::RatFun;

/// Variable selector for partial derivatives and specialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var3 {
    /// Series variable X.
    X,
    /// Hairpin mark Y.
    Y,
    /// Base-pair mark Z.
    Z,
}

/// Exponent triple (X, Y, Z).
pub type Exp3 = (u32, u32, u32);

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly3 {
    /// Sorted term map; zero coefficients are never stored.
    pub terms: BTreeMap<Exp3, Rat>,
}

impl MPoly3 {
    pub fn zero() -> Self {
        MPoly3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial((0, 0, 0), Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial((0, 0, 0), c)
    }

    pub fn monomial(e: Exp3, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly3 { terms }
    }

    pub fn var(v: Var3) -> Self {
        let e = match v {
            Var3::X => (1, 0, 0),
            Var3::Y => (0, 1, 0),
            Var3::Z => (0, 0, 1),
        };
        Self::monomial(e, Rat::one())
    }

    /// Build from integer terms (cx, ex, ey, ez).
    pub fn from_terms(terms: &[(i64, u32, u32, u32)]) -> Self {
        let mut out = Self::zero();
        for &(c, ex, ey, ez) in terms {
            out.add_term((ex, ey, ez), rat_int(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exp3, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(
                    (e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2),
                    c1.clone() * c2.clone(),
                );
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn partial_derivative(&self, v: Var3) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let (k, e2) = match v {
                Var3::X => (e.0, (e.0.wrapping_sub(1), e.1, e.2)),
                Var3::Y => (e.1, (e.0, e.1.wrapping_sub(1), e.2)),
                Var3::Z => (e.2, (e.0, e.1, e.2.wrapping_sub(1))),
            };
            if k > 0 {
                out.add_term(e2, c.clone() * rat_int(k as i64));
            }
        }
        out
    }

    /// Substitute 1 for the given variable.
    pub fn set_one(&self, v: Var3) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let e2 = match v {
                Var3::X => (0, e.1, e.2),
                Var3::Y => (e.0, 0, e.2),
                Var3::Z => (e.0, e.1, 0),
            };
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Collect on X into a univariate polynomial; requires Y, Z absent.
    pub fn to_univariate(&self) -> Poly<Rat> {
        let mut coeffs: Vec<Rat> = vec![];
        for (e, c) in &self.terms {
            assert!(e.1 == 0 && e.2 == 0, "to_univariate: marks still present");
            let k = e.0 as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rat::zero());
            }
            coeffs[k] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Lift a univariate polynomial in X.
    pub fn from_univariate(p: &Poly<Rat>) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs.iter().enumerate() {
            out.add_term((k as u32, 0, 0), c.clone());
        }
        out
    }

    /// Leading term in lexicographic exponent order.
    pub fn leading(&self) -> Option<(&Exp3, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Exp3 {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(e) => *e,
            None => return (0, 0, 0),
        };
        it.fold(first, |m, e| (m.0.min(e.0), m.1.min(e.1), m.2.min(e.2)))
    }

    /// Divide by the monomial X^e0 Y^e1 Z^e2 (must divide every term).
    pub fn div_monomial(&self, e: Exp3) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            assert!(t.0 >= e.0 && t.1 >= e.1 && t.2 >= e.2, "monomial does not divide");
            out.add_term((t.0 - e.0, t.1 - e.1, t.2 - e.2), c.clone());
        }
        out
    }

    /// Exact multivariate division by a single divisor; `None` if not exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dlead_e, dlead_c) = d.leading().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some((rlead_e, rlead_c)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            if rlead_e.0 < dlead_e.0 || rlead_e.1 < dlead_e.1 || rlead_e.2 < dlead_e.2 {
                return None;
            }
            let qe = (
                rlead_e.0 - dlead_e.0,
                rlead_e.1 - dlead_e.1,
                rlead_e.2 - dlead_e.2,
            );
            let qc = rlead_c / dlead_c.clone();
            let qterm = Self::monomial(qe, qc);
            rem = rem.sub(&qterm.mul(d));
            quo = quo.add(&qterm);
        }
        Some(quo)
    }

    /// Rational content (gcd of coefficients as a positive rational, carrying
    /// the sign of the leading coefficient).
    pub fn content(&self) -> Rat {
        use num::Integer;
        if self.is_zero() {
            return Rat::one();
        }
        let mut num = num::BigInt::zero();
        let mut den = num::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = Rat::new(num, den);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Total degree in X.
    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }
}

impl fmt::Debug for MPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if e.0 > 0 {
                write!(f, "*X^{}", e.0)?;
            }
            if e.1 > 0 {
                write!(f, "*Y^{}", e.1)?;
            }
            if e.2 > 0 {
                write!(f, "*Z^{}", e.2)?;
            }
        }
        Ok(())
    }
}

/// Trivariate rational function num/den, not gcd-reduced.
#[derive(Clone, Debug)]
pub struct MRatFun3 {
    pub num: MPoly3,
    pub den: MPoly3,
}

impl MRatFun3 {
    pub fn new(num: MPoly3, den: MPoly3) -> Self {
        assert!(!den.is_zero(), "trivariate rational function with zero denominator");
        MRatFun3 { num, den }
    }

    pub fn from_poly(p: MPoly3) -> Self {
        Self::new(p, MPoly3::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(MPoly3::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.num.neg(), self.den.clone())
    }

    /// Quotient-rule partial derivative.
    pub fn partial_derivative(&self, v: Var3) -> Self {
        Self::new(
            self.num
                .partial_derivative(v)
                .mul(&self.den)
                .sub(&self.num.mul(&self.den.partial_derivative(v))),
            self.den.mul(&self.den),
        )
    }

    /// Cross-multiplication equality (representation independent).
    pub fn eq_cross(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    /// Content normalization plus cancellation of shared known factors.
    ///
    /// Cancels common monomial content, then trial-divides numerator and
    /// denominator by each polynomial in `known_factors` while both divide.
    /// The denominator ends primitive with positive leading coefficient.
    pub fn reduced(&self, known_factors: &[&MPoly3]) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        // shared monomial factor
        let en = num.min_exponents();
        let ed = den.min_exponents();
        let common = (en.0.min(ed.0), en.1.min(ed.1), en.2.min(ed.2));
        if common != (0, 0, 0) {
            num = num.div_monomial(common);
            den = den.div_monomial(common);
        }
        for f in known_factors {
            if f.is_zero() || f.leading().map_or(true, |(e, _)| *e == (0, 0, 0)) {
                continue;
            }
            loop {
                match (num.div_exact(f), den.div_exact(f)) {
                    (Some(n2), Some(d2)) => {
                        num = n2;
                        den = d2;
                    }
                    _ => break,
                }
            }
        }
        // normalize: denominator primitive, positive leading coefficient
        let c = den.content();
        let inv = Rat::one() / c;
        den = den.scale(&inv);
        num = num.scale(&inv);
        Self::new(num, den)
    }

    /// Substitute Y = 1 and Z = 1, returning a univariate rational function
    /// in X (unreduced).
    pub fn specialize_marks(&self) -> RatFun<Rat> {
        let num = self.num.set_one(Var3::Y).set_one(Var3::Z).to_univariate();
        let den = self.den.set_one(Var3::Y).set_one(Var3::Z).to_univariate();
        assert!(!den.is_zero(), "denominator vanished under mark specialization");
        RatFun::raw(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat;

    #[test]
    fn mul_and_divide_round_trip() {
        let a = MPoly3::from_terms(&[(1, 1, 0, 0), (-1, 0, 0, 0)]); // X - 1
        let b = MPoly3::from_terms(&[(2, 2, 1, 0), (3, 0, 0, 1)]); // 2X^2 Y + 3Z
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        // non-divisor
        let c = MPoly3::from_terms(&[(1, 0, 1, 0), (1, 0, 0, 0)]);
        assert_eq!(prod.div_exact(&c), None);
    }

    #[test]
    fn partial_derivatives_commute() {
        let p = MPoly3::from_terms(&[(3, 2, 2, 1), (-1, 1, 0, 3), (5, 0, 1, 1)]);
        let q = MPoly3::from_terms(&[(1, 1, 1, 1), (2, 0, 0, 0)]);
        let f = MRatFun3::new(p, q);
        let xy = f.partial_derivative(Var3::Y).partial_derivative(Var3::Z);
        let yx = f.partial_derivative(Var3::Z).partial_derivative(Var3::Y);
        assert!(xy.eq_cross(&yx));
    }

    #[test]
    fn known_factor_cancellation() {
        // (X-1)^2 (Y + 1) / ((X-1) Z) reduces to (X-1)(Y+1)/Z
        let xm1 = MPoly3::from_terms(&[(1, 1, 0, 0), (-1, 0, 0, 0)]);
        let yp1 = MPoly3::from_terms(&[(1, 0, 1, 0), (1, 0, 0, 0)]);
        let z = MPoly3::var(Var3::Z);
        let f = MRatFun3::new(xm1.mul(&xm1).mul(&yp1), xm1.mul(&z));
        let r = f.reduced(&[&xm1]);
        assert!(r.eq_cross(&MRatFun3::new(xm1.mul(&yp1), z)));
        assert_eq!(r.den, MPoly3::var(Var3::Z));
    }

    #[test]
    fn monomial_content_cancellation() {
        // (X^2 Y) / (X Y Z) -> X / Z
        let num = MPoly3::monomial((2, 1, 0), rat(1, 1));
        let den = MPoly3::monomial((1, 1, 1), rat(1, 1));
        let r = MRatFun3::new(num, den).reduced(&[]);
        assert_eq!(r.num, MPoly3::var(Var3::X));
        assert_eq!(r.den, MPoly3::var(Var3::Z));
    }

    #[test]
    fn specialization_drops_marks() {
        // (X Y + X Z)/(2 Z) at Y = Z = 1 -> (2X)/2
        let num = MPoly3::from_terms(&[(1, 1, 1, 0), (1, 1, 0, 1)]);
        let den = MPoly3::from_terms(&[(2, 0, 0, 1)]);
        let s = MRatFun3::new(num, den).specialize_marks();
        assert!(s.eq_cross(&RatFun::from_poly(Poly::new(vec![
            Rat::zero(),
            Rat::one()
        ]))));
    }

    #[test]
    fn denominator_sign_normalization() {
        let num = MPoly3::from_terms(&[(2, 1, 0, 0)]);
        let den = MPoly3::from_terms(&[(-2, 1, 1, 0), (2, 0, 0, 0)]);
        let r = MRatFun3::new(num, den).reduced(&[]);
        assert!(r.den.leading().unwrap().1.is_positive());
        assert!(r.eq_cross(&MRatFun3::new(
            MPoly3::from_terms(&[(2, 1, 0, 0)]),
            MPoly3::from_terms(&[(-2, 1, 1, 0), (2, 0, 0, 0)])
        )));
    }
}
