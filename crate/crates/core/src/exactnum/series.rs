//! Truncated power series and Laurent series.
//!
//! A [`Series`] tracks coefficients c_0..c_n of a power series together with
//! its truncation order n (the coefficient of X^n is the last one known).
//! Binary operations truncate to the smaller order. [`Laurent`] adds a
//! leading offset so finitely many negative powers can be carried through
//! intermediate computations and asserted away at the end.

use crate::error::{Error, Result};
use super::poly::Poly;
use super::Coeff;

#[derive(Clone, PartialEq, Debug)]
pub struct Series<F> {
    /// coeffs[k] is the coefficient of X^k; length is order + 1.
    pub coeffs: Vec<F>,
}

impl<F: Coeff> Series<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Series { coeffs }
    }

    /// Truncation order: highest known exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    pub fn from_poly(p: &Poly<F>, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        for (k, c) in p.coeffs.iter().enumerate() {
            if k > order {
                break;
            }
            coeffs[k] = c.clone();
        }
        Series { coeffs }
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(F::zero());
        }
        Series { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series::new((0..=n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series::new((0..=n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Series::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        Series::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![F::zero(); n + 1];
        for i in 0..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                out[i + j] = out[i + j].clone() + a.clone() * rhs.coeff(j);
            }
        }
        Series::new(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::DivisionByZero {
                context: "Series::inverse with zero constant term",
            });
        }
        let n = self.order();
        let mut out = vec![F::zero(); n + 1];
        out[0] = F::one() / c0.clone();
        for k in 1..=n {
            let mut acc = F::zero();
            for j in 1..=k {
                acc = acc + self.coeff(j) * out[k - j].clone();
            }
            out[k] = -(acc / c0.clone());
        }
        Ok(Series::new(out))
    }

    /// Square root with constant term the principal in-domain root.
    ///
    /// The constant term must be a nonzero perfect square in the coefficient
    /// domain; the recursion c_k = (s_k - sum_{0<j<k} c_j c_{k-j}) / (2 c_0)
    /// then stays in-domain. Squaring the output reproduces the input to the
    /// truncation order.
    pub fn sqrt(&self) -> Result<Self> {
        let s0 = self.coeff(0);
        if s0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0 = s0.sqrt_exact().ok_or_else(|| Error::NotASquare {
            context: format!("series constant term {s0}"),
        })?;
        let n = self.order();
        let mut out = vec![F::zero(); n + 1];
        let two_c0 = c0.clone() + c0.clone();
        out[0] = c0;
        for k in 1..=n {
            let mut acc = F::zero();
            for j in 1..k {
                acc = acc + out[j].clone() * out[k - j].clone();
            }
            out[k] = (self.coeff(k) - acc) / two_c0.clone();
        }
        Ok(Series::new(out))
    }
}

/// Laurent series: coefficient of X^(ord + k) is coeffs[k].
#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<F> {
    pub ord: i64,
    pub coeffs: Vec<F>,
}

impl<F: Coeff> Laurent<F> {
    pub fn new(ord: i64, coeffs: Vec<F>) -> Self {
        let mut l = Laurent { ord, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 && lead < self.coeffs.len() {
            self.coeffs.drain(0..lead);
            self.ord += lead as i64;
        } else if lead == self.coeffs.len() && !self.coeffs.is_empty() {
            // identically zero to the tracked order; keep one slot
            let top = self.top();
            self.coeffs = vec![F::zero()];
            self.ord = top;
        }
    }

    pub fn from_series(s: &Series<F>) -> Self {
        Laurent::new(0, s.coeffs.clone())
    }

    /// Highest tracked exponent.
    pub fn top(&self) -> i64 {
        self.ord + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: i64) -> F {
        if k < self.ord {
            return F::zero();
        }
        self.coeffs
            .get((k - self.ord) as usize)
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest exponent with nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| self.ord + k as i64)
    }

    pub fn shift(&self, by: i64) -> Self {
        Laurent {
            ord: self.ord + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let lo = self.ord.min(rhs.ord);
        let hi = self.top().min(rhs.top());
        assert!(hi >= lo, "Laurent add: no overlapping tracked range");
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Laurent::new(lo, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent {
            ord: self.ord,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // truncation: each factor is exact through its top exponent, so the
        // product is exact through min over cross terms
        let n1 = self.coeffs.len();
        let n2 = rhs.coeffs.len();
        let len = n1.min(n2);
        let mut out = vec![F::zero(); len];
        for i in 0..n1 {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in 0..n2 {
                if i + j >= len {
                    break;
                }
                out[i + j] = out[i + j].clone() + a.clone() * rhs.coeffs[j].clone();
            }
        }
        Laurent::new(self.ord + rhs.ord, out)
    }

    /// Convert to a power series of the given order; errors if any tracked
    /// negative-exponent coefficient is nonzero or the order exceeds what is
    /// tracked.
    pub fn into_series(&self, order: usize) -> Result<Series<F>> {
        if let Some(v) = self.valuation() {
            if v < 0 {
                return Err(Error::Parse {
                    context: format!("Laurent series has a pole: valuation {v}"),
                });
            }
        }
        assert!(
            self.top() >= order as i64,
            "Laurent series tracked only to exponent {} < requested order {order}",
            self.top()
        );
        Ok(Series::new((0..=order as i64).map(|k| self.coeff(k)).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{rat, rat_int, Rat};

    fn s(coeffs: &[(i64, i64)]) -> Series<Rat> {
        Series::new(coeffs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn sqrt_of_one_minus_two_x() {
        // sqrt(1 - 2X) = 1 - X - X^2/2 - X^3/2 - ...
        let input = s(&[(1, 1), (-2, 1), (0, 1), (0, 1)]);
        let root = input.sqrt().unwrap();
        assert_eq!(root, s(&[(1, 1), (-1, 1), (-1, 2), (-1, 2)]));
        // squaring the output reproduces the input
        assert_eq!(root.mul(&root), input);
    }

    #[test]
    fn sqrt_of_perfect_square() {
        let input = s(&[(1, 1), (2, 1), (1, 1), (0, 1)]);
        assert_eq!(input.sqrt().unwrap(), s(&[(1, 1), (1, 1), (0, 1), (0, 1)]));
    }

    #[test]
    fn sqrt_rejects_bad_constant_terms() {
        assert!(matches!(
            s(&[(0, 1), (1, 1)]).sqrt(),
            Err(Error::ZeroConstantTerm)
        ));
        assert!(matches!(
            s(&[(2, 1), (1, 1)]).sqrt(),
            Err(Error::NotASquare { .. })
        ));
    }

    #[test]
    fn inverse_of_geometric() {
        // 1/(1 - X) = 1 + X + X^2 + ...
        let inv = s(&[(1, 1), (-1, 1), (0, 1), (0, 1)]).inverse().unwrap();
        assert_eq!(inv, s(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn random_sqrt_round_trip() {
        // light randomized check; the heavy version lives in the proptest suite
        let mut state = 1u64;
        for _ in 0..20 {
            let mut coeffs = vec![rat_int(1)];
            for _ in 0..8 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let v = ((state >> 33) % 11) as i64 - 5;
                coeffs.push(rat(v, 3));
            }
            let input = Series::new(coeffs);
            let root = input.sqrt().unwrap();
            assert_eq!(root.mul(&root), input);
        }
    }

    #[test]
    fn laurent_pole_cancellation() {
        // (X^-2 - X^-2) + regular part has no pole left
        let a = Laurent::new(-2, vec![rat_int(1), rat_int(0), rat_int(3), rat_int(1)]);
        let b = Laurent::new(-2, vec![rat_int(-1), rat_int(0), rat_int(2), rat_int(4)]);
        let sum = a.add(&b);
        assert_eq!(sum.valuation(), Some(0));
        let ser = sum.into_series(1).unwrap();
        assert_eq!(ser.coeffs, vec![rat_int(5), rat_int(5)]);
    }

    #[test]
    fn laurent_multiplication_tracks_truncation() {
        // (X^-1)(X^2 + X^3) = X + X^2
        let a = Laurent::new(-1, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)]);
        let b = Laurent::new(2, vec![rat_int(1), rat_int(1), rat_int(0), rat_int(0)]);
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(1), rat_int(1));
        assert_eq!(prod.coeff(2), rat_int(1));
    }

    #[test]
    fn into_series_rejects_poles() {
        let a = Laurent::new(-1, vec![rat_int(1), rat_int(2)]);
        assert!(a.into_series(0).is_err());
    }
}
