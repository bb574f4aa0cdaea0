//! Dense univariate polynomials.
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and `deg` returns `None` for it.
//! Arithmetic is generic over [`Coeff`]; gcd is provided over the rationals
//! only, via a primitive pseudo-remainder sequence on integer polynomials
//! (naive Euclid over Q explodes coefficient sizes at the degrees the
//! recurrence route produces).

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use super::rat::Rat;
use super::{Coeff, QuadNum};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F> {
    /// coeffs[k] is the coefficient of X^k; last entry nonzero.
    pub coeffs: Vec<F>,
}

impl<F: Coeff> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![F::one()],
        }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c * X^k.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// X as a polynomial.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.clone() * F::from_rat(&super::rat::rat_int(k as i64)));
        }
        Self::new(out)
    }

    /// Horner evaluation at a point in any field that embeds the coefficients.
    pub fn eval<G, E>(&self, x: &G, embed: E) -> G
    where
        G: Coeff,
        E: Fn(&F) -> G,
    {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg().unwrap();
        let dlead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.deg() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap().clone() / dlead.clone();
            let shift = rd - dd;
            quo[shift] = q.clone();
            // rem -= q X^shift * d
            let mut new = rem.coeffs.clone();
            for (j, b) in d.coeffs.iter().enumerate() {
                new[shift + j] = new[shift + j].clone() - q.clone() * b.clone();
            }
            // the leading term cancels by construction
            new.truncate(rd);
            rem = Poly::new(new);
        }
        (Poly::new(quo), rem)
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Divisibility multiplicity: the largest e with d^e dividing self.
    pub fn multiplicity_of(&self, d: &Self) -> usize {
        assert!(d.deg().map_or(false, |k| k >= 1), "multiplicity of a non-constant divisor");
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(d) {
            if cur.is_zero() {
                break;
            }
            cur = q;
            e += 1;
        }
        e
    }

    /// Composition self(g(X)).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Reverse coefficients: X^deg * self(1/X). Zero maps to zero.
    pub fn reversal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }
}

impl Poly<Rat> {
    /// Monic normalization of a nonzero polynomial.
    pub fn monic(&self) -> Self {
        let lead = self.leading().expect("monic of zero polynomial").clone();
        self.scale(&(Rat::one() / lead))
    }

    /// Map into Q(sqrt 5) coefficients.
    pub fn to_quad(&self) -> Poly<QuadNum> {
        Poly::new(self.coeffs.iter().cloned().map(QuadNum::from_rat).collect())
    }

    /// Evaluate at a Q(sqrt 5) point.
    pub fn eval_quad(&self, x: &QuadNum) -> QuadNum {
        self.eval(x, |c| QuadNum::from_rat(c.clone()))
    }

    /// Evaluate at a rational point.
    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.eval(x, |c| c.clone())
    }

    /// Clear denominators: primitive integer coefficient vector with positive
    /// leading coefficient, plus the rational unit u with self = u * primitive.
    pub fn primitive_parts(&self) -> (Vec<BigInt>, Rat) {
        if self.is_zero() {
            return (vec![], Rat::one());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * &den / c.denom()).collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        let mut prim: Vec<BigInt> = ints.iter().map(|v| v / &content).collect();
        let mut unit = Rat::new(content, den);
        if prim.last().unwrap().is_negative() {
            for v in &mut prim {
                *v = -v.clone();
            }
            unit = -unit;
        }
        (prim, unit)
    }

    /// Monic gcd via a primitive pseudo-remainder sequence over the integers.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return if other.is_zero() {
                Self::zero()
            } else {
                other.monic()
            };
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, _) = self.primitive_parts();
        let (mut b, _) = other.primitive_parts();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = int_pseudo_rem(&a, &b);
            if r.is_empty() {
                let poly = Poly::new(b.iter().map(|v| Rat::from_integer(v.clone())).collect());
                return poly.monic();
            }
            a = b;
            b = int_primitive(r);
        }
    }

    /// Square-free part self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.div_exact(&g)
            .expect("gcd divides the polynomial")
            .monic()
    }
}

/// Pseudo-remainder of primitive integer polynomials, low degree first.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead_b = b.last().unwrap().clone();
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lead_r = r.last().unwrap().clone();
        // r <- lead_b * r - lead_r * X^(dr-db) * b
        for v in r.iter_mut() {
            *v *= &lead_b;
        }
        let shift = dr - db;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &lead_r * c;
        }
        while r.last().map_or(false, |v| v.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

impl<F: Coeff> std::fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

impl<F: Coeff> std::fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{k}")?,
            }
        }
        Ok(())
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
    fn arithmetic_basics() {
        let a = p(&[1, 2, 1]); // 1 + 2X + X^2
        let b = p(&[1, 1]); // 1 + X
        assert_eq!(b.mul(&b), a);
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.derivative(), p(&[2, 2]));
        assert_eq!(a.eval_rat(&rat_int(3)), rat_int(16));
    }

    #[test]
    fn division_with_remainder() {
        let a = p(&[-1, 0, 0, 1]); // X^3 - 1
        let b = p(&[-1, 1]); // X - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((X-1)^2 (X+2), (X-1)(X+3)) = X - 1
        let a = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        // coprime inputs give 1
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), Poly::one());
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let a = p(&[-1, 1]).scale(&rat(3, 7));
        let b = p(&[-1, 0, 1]).scale(&rat(-2, 5));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let a = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1]));
        assert_eq!(a.squarefree_part(), p(&[-1, 1]).mul(&p(&[1, 1])));
    }

    #[test]
    fn composition_and_reversal() {
        let a = p(&[0, 0, 1]); // X^2
        let g = p(&[1, 2]); // 1 + 2X
        assert_eq!(a.compose(&g), p(&[1, 4, 4]));
        assert_eq!(p(&[1, -3, 1]).reversal(), p(&[1, -3, 1]));
        assert_eq!(p(&[0, 2, 1]).reversal(), p(&[1, 2]));
    }

    #[test]
    fn multiplicity_counting() {
        let f = p(&[-1, 1]);
        let a = f.mul(&f).mul(&p(&[5, 1]));
        assert_eq!(a.multiplicity_of(&f), 2);
        assert_eq!(a.multiplicity_of(&p(&[7, 1])), 0);
    }
}
