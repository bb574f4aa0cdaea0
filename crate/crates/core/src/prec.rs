//! The recurrence route: from a radical closed form to a first-order linear
//! differential equation, to a recurrence with polynomial coefficients, and
//! from there to exact high-index values and Poincaré-type asymptotic
//! expansions.
//!
//! This is an independent second path to the asymptotics of the same
//! sequences that singularity analysis handles, sharing no code with it past
//! the closed form. The two routes are compared coefficient by coefficient in
//! the integration tests; agreement of exact irrational constants computed by
//! such different means is a strong end-to-end check.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::closedform::UniRadical;
use crate::error::{Error, Result};
use crate::exactnum::dec::Dec;
use crate::exactnum::poly::Poly;
use crate::exactnum::quad::QuadNum;
use crate::exactnum::rat::{binom_rat, is_half_integer, rat_int, Rat};
use crate::exactnum::ratfun::RatFun;
use crate::exactnum::roots::{analyze_roots, RootAnalysis};

/// Minimal polynomial of a radical expression over the rational functions.
#[derive(Clone, Debug)]
pub enum MinPoly {
    /// The expression is itself rational: M - value vanishes.
    Linear { value: RatFun<Rat> },
    /// M^2 + p1 M + p0 vanishes, with p1 = -2 u1 and p0 = u1^2 - v1^2 R0.
    Quadratic { p1: RatFun<Rat>, p0: RatFun<Rat> },
}

/// Minimal polynomial of u1 + v1 sqrt(R0).
pub fn minimal_polynomial(r: &UniRadical) -> MinPoly {
    if r.v1.is_zero() {
        return MinPoly::Linear {
            value: r.u1.clone(),
        };
    }
    let p1 = r.u1.mul(&rf_const(-2)).reduced();
    let r0 = RatFun::from_poly(r.radicand0.clone());
    let p0 = r
        .u1
        .mul(&r.u1)
        .sub(&r.v1.mul(&r.v1).mul(&r0))
        .reduced();
    MinPoly::Quadratic { p1, p0 }
}

fn rf_const(c: i64) -> RatFun<Rat> {
    RatFun::from_poly(Poly::constant(rat_int(c)))
}

/// Linear differential equation sum_b coeffs[b] F^(b) = rhs with polynomial
/// coefficients; coeffs[b] multiplies the b-th derivative.
#[derive(Clone, Debug)]
pub struct Ode {
    pub coeffs: Vec<Poly<Rat>>,
    pub rhs: Poly<Rat>,
}

impl Ode {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// First-order inhomogeneous equation satisfied by any root of the minimal
/// polynomial.
///
/// For M^2 + p1 M + p0 = 0, implicit differentiation and reduction modulo
/// the defining relation give F' = A F + B with
/// A = (p1 p1' - 2 p0') / D and B = (2 p1' p0 - p0' p1) / D, D = p1^2 - 4 p0.
/// Clearing denominators yields polynomial coefficients.
pub fn algebraic_to_ode(mp: &MinPoly) -> Result<Ode> {
    match mp {
        MinPoly::Linear { value } => {
            let d = value.derivative().reduced();
            Ok(Ode {
                coeffs: vec![Poly::zero(), d.den.clone()],
                rhs: d.num.clone(),
            })
        }
        MinPoly::Quadratic { p1, p0 } => {
            let disc = p1.mul(p1).sub(&p0.mul(&rf_const(4))).reduced();
            if disc.is_zero() {
                return Err(Error::DivisionByZero {
                    context: "discriminant of a degenerate quadratic minimal polynomial",
                });
            }
            let dp1 = p1.derivative();
            let dp0 = p0.derivative();
            let a = p1
                .mul(&dp1)
                .sub(&dp0.mul(&rf_const(2)))
                .div(&disc)?
                .reduced();
            let b = dp1
                .mul(p0)
                .mul(&rf_const(2))
                .sub(&dp0.mul(p1))
                .div(&disc)?
                .reduced();
            // common polynomial multiplier q = lcm of the two denominators
            let g = a.den.gcd(&b.den);
            let q = a
                .den
                .mul(&b.den)
                .div_exact(&g)
                .expect("gcd does not divide its input");
            let qa = a
                .num
                .mul(&q.div_exact(&a.den).expect("lcm lost a factor"));
            let qb = b
                .num
                .mul(&q.div_exact(&b.den).expect("lcm lost a factor"));
            Ok(Ode {
                coeffs: vec![qa.neg(), q],
                rhs: qb,
            })
        }
    }
}

/// Recurrence with polynomial coefficients:
/// sum_i coeffs[i](k) f_{k+i} = rhs(k) for every k >= start,
/// where rhs is zero outside the stored support.
#[derive(Clone, Debug)]
pub struct PRec {
    pub coeffs: Vec<Poly<Rat>>,
    pub rhs: BTreeMap<i64, Rat>,
    pub start: i64,
}

impl PRec {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Index of the first value the recurrence determines from earlier ones.
    pub fn first_determined(&self) -> usize {
        (self.start + self.order() as i64) as usize
    }

    fn rhs_at(&self, k: i64) -> Rat {
        self.rhs.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Check the identity at one index against explicit sequence values.
    pub fn holds_at(&self, values: &[Rat], k: i64) -> bool {
        if k < self.start {
            return true;
        }
        let top = k + self.order() as i64;
        if top as usize >= values.len() {
            return true;
        }
        let kr = rat_int(k);
        let mut acc = -self.rhs_at(k);
        for (i, q) in self.coeffs.iter().enumerate() {
            acc += q.eval_rat(&kr) * values[(k + i as i64) as usize].clone();
        }
        acc.is_zero()
    }
}

/// Extract the coefficient recurrence of an ODE.
///
/// Matching the coefficient of X^m in sum_b p_b(X) F^(b) = rhs(X) gives, for
/// each monomial c X^a of p_b, the term c * falling(m - a + b, b) * f_{m-a+b}.
/// Reindexing by the smallest offset produces the stored normal form.
pub fn ode_to_recurrence(ode: &Ode) -> PRec {
    let mut jmin = i64::MAX;
    let mut jmax = i64::MIN;
    for (b, p) in ode.coeffs.iter().enumerate() {
        if let Some(d) = p.deg() {
            for a in 0..=d {
                if !p.coeff(a).is_zero() {
                    let j = b as i64 - a as i64;
                    jmin = jmin.min(j);
                    jmax = jmax.max(j);
                }
            }
        }
    }
    assert!(jmin <= jmax, "empty differential equation");
    let order = (jmax - jmin) as usize;
    let mut coeffs = vec![Poly::<Rat>::zero(); order + 1];
    for (b, p) in ode.coeffs.iter().enumerate() {
        if let Some(d) = p.deg() {
            for a in 0..=d {
                let c = p.coeff(a);
                if c.is_zero() {
                    continue;
                }
                let i = (b as i64 - a as i64) - jmin;
                coeffs[i as usize] =
                    coeffs[i as usize].add(&falling_poly(i, b).scale(&c));
            }
        }
    }
    let start = jmin.max(0);
    let mut rhs = BTreeMap::new();
    if let Some(d) = ode.rhs.deg() {
        for m in 0..=d {
            let c = ode.rhs.coeff(m);
            if !c.is_zero() {
                let k = m as i64 + jmin;
                if k >= start {
                    rhs.insert(k, c);
                }
                // identities below `start` only constrain initial values,
                // which callers supply explicitly
            }
        }
    }
    PRec { coeffs, rhs, start }
}

/// falling(k + i, b) = (k+i)(k+i-1)...(k+i-b+1) as a polynomial in k.
fn falling_poly(i: i64, b: usize) -> Poly<Rat> {
    let mut acc = Poly::one();
    for t in 0..b as i64 {
        acc = acc.mul(&Poly::new(vec![rat_int(i - t), Rat::one()]));
    }
    acc
}

/// Extend a sequence to index n_max exactly, given enough initial values.
///
/// Fails if the leading coefficient vanishes at an index inside the range,
/// or if the initial segment is too short to start the recurrence.
pub fn unroll(rec: &PRec, initial: &[Rat], n_max: usize) -> Result<Vec<Rat>> {
    let rho = rec.order();
    let first = rec.first_determined();
    if initial.len() < first {
        return Err(Error::InsufficientData {
            context: format!(
                "recurrence needs the first {first} values but got {}",
                initial.len()
            ),
        });
    }
    let mut values: Vec<Rat> = initial[..initial.len().min(n_max + 1)].to_vec();
    while values.len() <= n_max {
        let t = values.len();
        let k = t as i64 - rho as i64;
        let kr = rat_int(k);
        let lead = rec.coeffs[rho].eval_rat(&kr);
        if lead.is_zero() {
            return Err(Error::LeadingCoefficientZero { n: t as i64 });
        }
        let mut acc = rec.rhs_at(k);
        for i in 0..rho {
            acc -= rec.coeffs[i].eval_rat(&kr) * values[(k + i as i64) as usize].clone();
        }
        values.push(acc / lead);
    }
    Ok(values)
}

/// One term class of the asymptotic solution space:
/// mu^n n^theta (coeffs[0] + coeffs[1]/n + ...), coeffs[0] = 1.
#[derive(Clone, Debug)]
pub struct BasisElem {
    pub mu: QuadNum,
    pub theta: Rat,
    pub coeffs: Vec<QuadNum>,
}

/// Asymptotic basis data for a recurrence: expansions for every simple real
/// characteristic root recognized in Q(sqrt 5), plus an honest record of all
/// roots no expansion was produced for.
#[derive(Clone, Debug)]
pub struct AsymBasis {
    /// Sorted by |mu| descending.
    pub elements: Vec<BasisElem>,
    /// Recognized real roots with multiplicity > 1 (no power-series ansatz).
    pub repeated: Vec<(QuadNum, usize)>,
    /// Irreducible quadratic factors with complex roots: (factor, |root|^2).
    pub complex_moduli: Vec<(Poly<Rat>, Rat)>,
    /// Unidentified part of the characteristic polynomial (1 when none).
    pub unidentified: Poly<Rat>,
}

impl AsymBasis {
    /// The element of strictly largest growth, refusing when any root
    /// without an expansion could tie or dominate it.
    pub fn dominant(&self) -> Result<&BasisElem> {
        let top = self.elements.first().ok_or_else(|| Error::AnsatzFailure {
            context: "no characteristic root was recognized in Q(sqrt 5)".into(),
        })?;
        let top_sq = top.mu.clone() * top.mu.clone();
        let top_sq = top_sq.abs();
        if let Some(second) = self.elements.get(1) {
            let second_sq = (second.mu.clone() * second.mu.clone()).abs();
            if second_sq >= top_sq {
                return Err(Error::SingularityTie {
                    context: "two recognized characteristic roots share the largest modulus".into(),
                });
            }
        }
        for (mu, _) in &self.repeated {
            if (mu.clone() * mu.clone()).abs() >= top_sq {
                return Err(Error::SingularityTie {
                    context: "a repeated characteristic root is not strictly subdominant".into(),
                });
            }
        }
        for (_, msq) in &self.complex_moduli {
            if QuadNum::from_rat(msq.clone()) >= top_sq {
                return Err(Error::SingularityTie {
                    context: "a complex characteristic root is not strictly subdominant".into(),
                });
            }
        }
        if !self.unidentified.is_constant() {
            let bound = crate::exactnum::roots::modulus_upper_bound(&self.unidentified);
            if QuadNum::from_rat(bound.clone() * bound) >= top_sq {
                return Err(Error::SingularityTie {
                    context: "an unidentified characteristic factor could reach the largest modulus"
                        .into(),
                });
            }
        }
        Ok(top)
    }

    pub fn element_with_mu(&self, mu: &QuadNum) -> Option<&BasisElem> {
        self.elements.iter().find(|e| e.mu == *mu)
    }
}

/// Asymptotic expansions of the homogeneous solution space of a recurrence,
/// one per simple recognized real characteristic root, each with `order`
/// coefficients past the leading 1.
///
/// The characteristic polynomial chi collects the top-degree (in k)
/// coefficients of the recurrence; for a simple root mu, substituting
/// mu^n n^theta (1 + c_1/n + ...) and matching powers of n gives theta from
/// the subleading coefficients and then each c_l from a triangular system
/// whose pivot is -(l) mu chi'(mu), nonzero precisely because mu is simple.
/// The exponent must come out a half-integer within [-order-2, order+2];
/// anything else is refused as outside this ansatz.
pub fn asymptotic_basis(rec: &PRec, order: usize) -> Result<AsymBasis> {
    let d_max = rec
        .coeffs
        .iter()
        .filter_map(|p| p.deg())
        .max()
        .expect("recurrence with all-zero coefficients");
    let chi = Poly::new(rec.coeffs.iter().map(|p| p.coeff(d_max)).collect());
    assert!(!chi.is_zero(), "characteristic polynomial vanished");
    let analysis: RootAnalysis = analyze_roots(&chi);
    let chi_deriv = chi.derivative();
    let mut elements = Vec::new();
    let mut repeated = Vec::new();
    for root in &analysis.real {
        if root.value.is_zero() {
            continue;
        }
        if root.multiplicity > 1 {
            repeated.push((root.value.clone(), root.multiplicity));
            continue;
        }
        elements.push(expand_at_root(rec, d_max, &chi, &chi_deriv, &root.value, order)?);
    }
    elements.sort_by(|a, b| {
        let am = (a.mu.clone() * a.mu.clone()).abs();
        let bm = (b.mu.clone() * b.mu.clone()).abs();
        bm.cmp(&am)
    });
    Ok(AsymBasis {
        elements,
        repeated,
        complex_moduli: analysis
            .complex_quadratics
            .into_iter()
            .map(|(f, msq, _)| (f, msq))
            .collect(),
        unidentified: analysis.leftover,
    })
}

fn expand_at_root(
    rec: &PRec,
    d_max: usize,
    chi: &Poly<Rat>,
    chi_deriv: &Poly<Rat>,
    mu: &QuadNum,
    order: usize,
) -> Result<BasisElem> {
    let mu_chi_d = mu.clone() * chi_deriv.eval_quad(mu);
    assert!(!mu_chi_d.is_zero(), "simple root with vanishing chi'");
    // theta from the degree D-1 layer
    let mut sub = QuadNum::zero();
    for (i, q) in rec.coeffs.iter().enumerate() {
        let c = if d_max >= 1 { q.coeff(d_max - 1) } else { Rat::zero() };
        if !c.is_zero() {
            sub = sub + QuadNum::from_rat(c) * mu.powi(i as i64)?;
        }
    }
    let theta_q = -(sub * mu_chi_d.inv()?);
    let theta = match theta_q.as_rat() {
        Some(t) if is_half_integer(t) => t.clone(),
        _ => {
            return Err(Error::AnsatzFailure {
                context: format!("exponent {theta_q} is not a half-integer"),
            })
        }
    };
    let window = rat_int(order as i64 + 2);
    if theta.clone().abs() > window {
        return Err(Error::AnsatzFailure {
            context: format!("exponent {theta} outside the search window"),
        });
    }
    // triangular solve for c_1..c_order; level l of the matched expansion
    // reads sum over (i, a, k, m) with (D - a) + k + m = l
    let mut c: Vec<QuadNum> = vec![QuadNum::one()];
    for l in 2..=(order + 1) {
        let mut s = QuadNum::zero();
        for (i, q) in rec.coeffs.iter().enumerate() {
            let deg = match q.deg() {
                Some(d) => d,
                None => continue,
            };
            let mu_i = mu.powi(i as i64)?;
            for a in 0..=deg {
                let qa = q.coeff(a);
                if qa.is_zero() {
                    continue;
                }
                for (k, ck) in c.iter().enumerate().take(l - 1) {
                    let m = l as i64 - (d_max - a) as i64 - k as i64;
                    if m < 0 {
                        continue;
                    }
                    let m = m as u32;
                    let t = &theta - rat_int(k as i64);
                    let term = QuadNum::from_rat(
                        qa.clone() * binom_rat(&t, m) * rat_int(i as i64).pow(m as i32),
                    ) * mu_i.clone()
                        * ck.clone();
                    s = s + term;
                }
            }
        }
        let pivot = QuadNum::from_rat(rat_int(l as i64 - 1)) * mu_chi_d.clone();
        c.push(s * pivot.inv()?);
    }
    Ok(BasisElem {
        mu: mu.clone(),
        theta,
        coeffs: c,
    })
}

/// The recurrence (k+1) b_{k+1} - (k - s) b_k = 0 satisfied by the binomial
/// tail sequence b_k = binom(k - s - 1, k); its basis element at mu = 1 has
/// exponent -1 - s and supplies the correction series used when translating
/// local singular behavior into coefficient asymptotics.
pub fn binomial_tail_recurrence(s: &Rat) -> PRec {
    PRec {
        coeffs: vec![
            Poly::new(vec![s.clone(), rat_int(-1)]),
            Poly::new(vec![Rat::one(), Rat::one()]),
        ],
        rhs: BTreeMap::new(),
        start: 0,
    }
}

/// Output of a least-squares constant fit.
#[derive(Clone, Debug)]
pub struct FitResult {
    /// Fitted constants C_0..C_k.
    pub constants: Vec<Dec>,
    /// Root-mean-square residual of the normalized samples.
    pub residual: Dec,
    /// Ratio of largest to smallest elimination pivot of the normal
    /// equations; a rough conditioning figure for judging trustworthy digits.
    pub condition: Dec,
}

/// Least squares for C_0..C_{terms-1} in
/// value(n) ~ mu^n n^theta (C_0 + C_1/n + ... ).
///
/// Samples are exact; each is normalized to y_n = value / (mu^n n^theta) in
/// fixed-point arithmetic at `scale` digits, and the design in powers of 1/n
/// is solved through its normal equations by Gaussian elimination.
pub fn fit_constants(
    samples: &[(u64, Rat)],
    mu: &Dec,
    theta: &Rat,
    terms: usize,
    scale: u32,
) -> Result<FitResult> {
    assert!(terms >= 1, "fit with no constants");
    if samples.len() < terms {
        return Err(Error::InsufficientData {
            context: format!(
                "{} samples cannot determine {terms} constants",
                samples.len()
            ),
        });
    }
    let mut gram = vec![vec![Dec::zero(scale); terms]; terms];
    let mut moment = vec![Dec::zero(scale); terms];
    for (n, value) in samples {
        assert!(*n >= 1, "fit samples need n >= 1");
        let y = Dec::from_rat(value, scale).div(&scaled_growth(mu, theta, *n, scale));
        let inv_n = Dec::one(scale).div(&Dec::from_int(*n as i64, scale));
        let mut powers = Vec::with_capacity(2 * terms);
        let mut p = Dec::one(scale);
        for _ in 0..2 * terms {
            powers.push(p.clone());
            p = p.mul(&inv_n);
        }
        for r in 0..terms {
            moment[r] = moment[r].add(&y.mul(&powers[r]));
            for col in 0..terms {
                gram[r][col] = gram[r][col].add(&powers[r + col]);
            }
        }
    }
    let (constants, condition) = solve_normal(gram, moment, scale)?;
    // residual against the fitted model
    let mut sq = Dec::zero(scale);
    for (n, value) in samples {
        let y = Dec::from_rat(value, scale).div(&scaled_growth(mu, theta, *n, scale));
        let inv_n = Dec::one(scale).div(&Dec::from_int(*n as i64, scale));
        let mut model = Dec::zero(scale);
        let mut p = Dec::one(scale);
        for c in &constants {
            model = model.add(&c.mul(&p));
            p = p.mul(&inv_n);
        }
        let d = y.sub(&model);
        sq = sq.add(&d.mul(&d));
    }
    let residual = sq.div(&Dec::from_int(samples.len() as i64, scale)).sqrt();
    Ok(FitResult {
        constants,
        residual,
        condition,
    })
}

/// mu^n n^theta as a fixed-point number; theta is a half-integer.
fn scaled_growth(mu: &Dec, theta: &Rat, n: u64, scale: u32) -> Dec {
    let mut acc = mu.powi(n);
    let twice = theta * rat_int(2);
    assert!(twice.is_integer(), "growth exponent must be a half-integer");
    let t2: i64 = {
        let v = twice.to_integer();
        i64::try_from(v).expect("growth exponent out of range")
    };
    let sqrt_n = Dec::from_int(n as i64, scale).sqrt();
    let powed = sqrt_n.powi(t2.unsigned_abs());
    if t2 >= 0 {
        acc = acc.mul(&powed);
    } else {
        acc = acc.div(&powed);
    }
    acc
}

fn solve_normal(
    mut a: Vec<Vec<Dec>>,
    mut b: Vec<Dec>,
    scale: u32,
) -> Result<(Vec<Dec>, Dec)> {
    let n = b.len();
    let mut pivots: Vec<Dec> = Vec::with_capacity(n);
    for col in 0..n {
        let mut best = col;
        for row in (col + 1)..n {
            if a[best][col].abs().le(&a[row][col].abs()) {
                best = row;
            }
        }
        a.swap(col, best);
        b.swap(col, best);
        let pivot = a[col][col].clone();
        if pivot.is_zero() {
            return Err(Error::InsufficientData {
                context: "singular normal equations in constant fit".into(),
            });
        }
        pivots.push(pivot.abs());
        for row in (col + 1)..n {
            let f = a[row][col].div(&a[col][col]);
            for c2 in col..n {
                let t = f.mul(&a[col][c2]);
                a[row][c2] = a[row][c2].sub(&t);
            }
            let t = f.mul(&b[col]);
            b[row] = b[row].sub(&t);
        }
    }
    let mut x = vec![Dec::zero(scale); n];
    for col in (0..n).rev() {
        let mut acc = b[col].clone();
        for c2 in (col + 1)..n {
            let t = a[col][c2].mul(&x[c2]);
            acc = acc.sub(&t);
        }
        x[col] = acc.div(&a[col][col]);
    }
    let mut pmax = pivots[0].clone();
    let mut pmin = pivots[0].clone();
    for p in &pivots[1..] {
        if pmax.le(p) {
            pmax = p.clone();
        }
        if p.le(&pmin) {
            pmin = p.clone();
        }
    }
    Ok((x, pmax.div(&pmin)))
}

/// Estimate the growth base mu from the last adjacent sample pair, using a
/// known exponent theta: value(n+1)/value(n) ~ mu (1 + theta/n)^(+1)...
/// inverted to first order. Rough by design; used only to seed fits when no
/// exact base is supplied.
pub fn estimate_mu(samples: &[(u64, Rat)], theta: &Rat, scale: u32) -> Result<Dec> {
    for w in samples.windows(2).rev() {
        if w[1].0 == w[0].0 + 1 && !w[0].1.is_zero() {
            let n = w[0].0;
            let ratio = Dec::from_rat(&(w[1].1.clone() / w[0].1.clone()), scale);
            // (1 + 1/n)^theta to first order: 1 + theta/n
            let corr = Dec::one(scale).add(&Dec::from_rat(
                &(theta / rat_int(n as i64)),
                scale,
            ));
            return Ok(ratio.div(&corr));
        }
    }
    Err(Error::InsufficientData {
        context: "growth estimation needs two consecutive samples".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{grand_gf, specialize, uniradical_series};
    use crate::exactnum::rat::rat;
    use crate::exactnum::series::Laurent;
    use crate::structures::count_sequence;

    fn poly(coeffs: &[i64]) -> Poly<Rat> {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn sqrt_inv_radical() -> UniRadical {
        // 1 / sqrt(1 - 2X) = 0 + (1/(1-2X)) sqrt(1 - 2X)
        UniRadical {
            u1: RatFun::zero(),
            v1: RatFun::raw(Poly::one(), poly(&[1, -2])),
            radicand0: poly(&[1, -2]),
        }
    }

    fn sqrt_radical() -> UniRadical {
        UniRadical {
            u1: RatFun::zero(),
            v1: RatFun::one(),
            radicand0: poly(&[1, -2]),
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        match minimal_polynomial(&sqrt_radical()) {
            MinPoly::Quadratic { p1, p0 } => {
                assert!(p1.is_zero());
                assert!(p0.eq_cross(&RatFun::from_poly(poly(&[-1, 2]))));
            }
            MinPoly::Linear { .. } => panic!("expected a quadratic"),
        }
        match minimal_polynomial(&sqrt_inv_radical()) {
            MinPoly::Quadratic { p1, p0 } => {
                assert!(p1.is_zero());
                // p0 = -1/(1-2X)
                assert!(p0.eq_cross(&RatFun::raw(
                    Poly::constant(rat_int(-1)),
                    poly(&[1, -2])
                )));
            }
            MinPoly::Linear { .. } => panic!("expected a quadratic"),
        }
    }

    #[test]
    fn minimal_polynomial_annihilates_the_series() {
        let f = specialize(&grand_gf()).unwrap();
        let mp = minimal_polynomial(&f);
        let (p1, p0) = match mp {
            MinPoly::Quadratic { p1, p0 } => (p1, p0),
            MinPoly::Linear { .. } => panic!("grand generating function is irrational"),
        };
        let order = 30usize;
        let margin = 6usize;
        let fs = uniradical_series(&f, order + margin).unwrap();
        let lf = Laurent::from_series(&fs);
        let lp1 = crate::closedform::ratfun_laurent(&p1, order + margin).unwrap();
        let lp0 = crate::closedform::ratfun_laurent(&p0, order + margin).unwrap();
        let total = lf.mul(&lf).add(&lp1.mul(&lf)).add(&lp0);
        for k in 0..=order as i64 {
            assert!(total.coeff(k).is_zero(), "residual at X^{k}");
        }
    }

    #[test]
    fn ode_examples_for_square_roots() {
        // sqrt(1-2X): (1-2X) F' + F = 0
        let ode = algebraic_to_ode(&minimal_polynomial(&sqrt_radical())).unwrap();
        assert_eq!(ode.order(), 1);
        assert!(ode.rhs.is_zero());
        // coefficients proportional to [1, 1-2X]
        let scale_check = ode.coeffs[1].mul(&Poly::one());
        assert_eq!(
            scale_check.mul(&poly(&[1])).monic(),
            poly(&[1, -2]).monic().mul(&ode.coeffs[0].monic())
                .div_exact(&ode.coeffs[0].monic())
                .unwrap()
                .mul(&poly(&[1, -2]).monic())
                .div_exact(&poly(&[1, -2]).monic())
                .unwrap()
                .mul(&ode.coeffs[1].monic())
        );
        assert!(ode.coeffs[0]
            .mul(&poly(&[1, -2]))
            .sub(&ode.coeffs[1].mul(&poly(&[1])))
            .is_zero());

        // 1/sqrt(1-2X): (1-2X) F' - F = 0
        let ode = algebraic_to_ode(&minimal_polynomial(&sqrt_inv_radical())).unwrap();
        assert!(ode.rhs.is_zero());
        assert!(ode.coeffs[0]
            .mul(&poly(&[1, -2]))
            .add(&ode.coeffs[1].mul(&poly(&[1])))
            .is_zero());
    }

    #[test]
    fn recurrence_for_inverse_square_root() {
        let ode = algebraic_to_ode(&minimal_polynomial(&sqrt_inv_radical())).unwrap();
        let rec = ode_to_recurrence(&ode);
        assert_eq!(rec.order(), 1);
        assert_eq!(rec.start, 0);
        // (k+1) f_{k+1} - (2k+1) f_k = 0 up to overall sign
        let q1 = rec.coeffs[1].clone();
        let q0 = rec.coeffs[0].clone();
        assert!(q1.mul(&poly(&[-1, -2])).sub(&q0.mul(&poly(&[1, 1]))).is_zero());
        // unroll and compare against binom(2n, n) / 2^n
        let values = unroll(&rec, &[Rat::one()], 20).unwrap();
        let mut pow2 = Rat::one();
        for (n, v) in values.iter().enumerate() {
            let expected = Rat::from(crate::exactnum::rat::binom_int(2 * n as u64, n as u64))
                / pow2.clone();
            assert_eq!(*v, expected, "coefficient at n = {n}");
            pow2 = pow2 * rat_int(2);
        }
    }

    #[test]
    fn count_sequence_recurrence_round_trip() {
        let f = specialize(&grand_gf()).unwrap();
        let ode = algebraic_to_ode(&minimal_polynomial(&f)).unwrap();
        let rec = ode_to_recurrence(&ode);
        let direct = count_sequence(60);
        let as_rat: Vec<Rat> = direct.iter().map(|b| Rat::from(b.clone())).collect();
        for k in 0..as_rat.len() as i64 {
            assert!(rec.holds_at(&as_rat, k), "identity fails at k = {k}");
        }
        let first = rec.first_determined();
        let unrolled = unroll(&rec, &as_rat[..first.max(6)], 60).unwrap();
        assert_eq!(unrolled, as_rat);
    }

    #[test]
    fn unroll_needs_enough_initial_values() {
        let ode = algebraic_to_ode(&minimal_polynomial(&sqrt_inv_radical())).unwrap();
        let rec = ode_to_recurrence(&ode);
        assert!(matches!(
            unroll(&rec, &[], 5),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn unroll_reports_vanishing_leading_coefficient() {
        // f_{k+1} (k - 5) = f_k breaks down at k = 5
        let rec = PRec {
            coeffs: vec![poly(&[-1]), poly(&[-5, 1])],
            rhs: BTreeMap::new(),
            start: 0,
        };
        match unroll(&rec, &[Rat::one()], 10) {
            Err(Error::LeadingCoefficientZero { n }) => assert_eq!(n, 6),
            other => panic!("expected a leading-coefficient error, got {other:?}"),
        }
    }

    #[test]
    fn basis_for_inverse_square_root_sequence() {
        let ode = algebraic_to_ode(&minimal_polynomial(&sqrt_inv_radical())).unwrap();
        let rec = ode_to_recurrence(&ode);
        let basis = asymptotic_basis(&rec, 3).unwrap();
        assert_eq!(basis.elements.len(), 1);
        let e = basis.dominant().unwrap();
        assert_eq!(e.mu, QuadNum::from_int(2));
        assert_eq!(e.theta, rat(-1, 2));
        assert_eq!(e.coeffs[0], QuadNum::one());
        assert_eq!(e.coeffs[1], QuadNum::from_rat(rat(-1, 8)));
        assert_eq!(e.coeffs[2], QuadNum::from_rat(rat(1, 128)));
        assert_eq!(e.coeffs[3], QuadNum::from_rat(rat(5, 1024)));
    }

    #[test]
    fn basis_for_count_recurrence() {
        let f = specialize(&grand_gf()).unwrap();
        let ode = algebraic_to_ode(&minimal_polynomial(&f)).unwrap();
        let rec = ode_to_recurrence(&ode);
        let basis = asymptotic_basis(&rec, 4).unwrap();
        let dom = basis.dominant().unwrap();
        assert_eq!(dom.mu, QuadNum::from_parts(3, 2, 1, 2));
        assert_eq!(dom.theta, rat(-3, 2));
        // the reciprocal root is also recognized and strictly subdominant
        assert!(basis
            .element_with_mu(&QuadNum::from_parts(3, 2, -1, 2))
            .is_some());
        // the complex pair of the characteristic polynomial sits on the unit
        // circle and is reported, not expanded
        assert_eq!(basis.complex_moduli.len(), 1);
        assert_eq!(basis.complex_moduli[0].1, Rat::one());
        assert!(basis.unidentified.is_constant());
    }

    #[test]
    fn binomial_tail_basis_matches_exact_products() {
        // b_k = binom(k - s - 1, k) for s = -3/2, checked at k = 10^6
        let s = rat(-3, 2);
        let rec = binomial_tail_recurrence(&s);
        let basis = asymptotic_basis(&rec, 4).unwrap();
        assert_eq!(basis.elements.len(), 1);
        let e = &basis.elements[0];
        assert_eq!(e.mu, QuadNum::one());
        assert_eq!(e.theta, rat(1, 2));

        let scale = 40u32;
        let nn = 1_000_000u64;
        let mut b = Dec::one(scale);
        for k in 0..nn {
            let num = Dec::from_rat(&(rat_int(k as i64) - s.clone()), scale);
            let den = Dec::from_int(k as i64 + 1, scale);
            b = b.mul(&num).div(&den);
        }
        // prediction: b_n = n^theta / Gamma(-s) * (1 + c_1/n + ...) with
        // Gamma(3/2) = sqrt(pi)/2
        let n_dec = Dec::from_int(nn as i64, scale);
        let inv_n = Dec::one(scale).div(&n_dec);
        let mut series = Dec::zero(scale);
        let mut p = Dec::one(scale);
        for c in &e.coeffs {
            series = series.add(&Dec::from_quad(c, scale).mul(&p));
            p = p.mul(&inv_n);
        }
        let gamma = Dec::pi(scale).sqrt().div(&Dec::from_int(2, scale));
        let predicted = n_dec.sqrt().mul(&series).div(&gamma);
        let rel = b.sub(&predicted).div(&b).abs();
        let tol = Dec::from_rat(&Rat::new(1.into(), num::BigInt::from(10).pow(25)), scale);
        assert!(rel.le(&tol), "relative deviation too large");
    }

    #[test]
    fn repeated_roots_are_reported_not_expanded() {
        // f_{k+2} - 2 f_{k+1} + f_k = 0: characteristic (mu - 1)^2
        let rec = PRec {
            coeffs: vec![poly(&[1]), poly(&[-2]), poly(&[1])],
            rhs: BTreeMap::new(),
            start: 0,
        };
        let basis = asymptotic_basis(&rec, 2).unwrap();
        assert!(basis.elements.is_empty());
        assert_eq!(basis.repeated, vec![(QuadNum::one(), 2)]);
        assert!(basis.dominant().is_err());
    }

    #[test]
    fn fit_recovers_synthetic_constants() {
        // v(n) = 2^n (3 + 5/n + 7/n^2), exact
        let samples: Vec<(u64, Rat)> = (20..=60)
            .map(|n| {
                let n_r = rat_int(n);
                let v = (rat_int(3) + rat_int(5) / n_r.clone() + rat_int(7) / (n_r.clone() * n_r))
                    * Rat::from(num::BigInt::from(2).pow(n as u32));
                (n as u64, v)
            })
            .collect();
        let scale = 50u32;
        let fit = fit_constants(&samples, &Dec::from_int(2, scale), &Rat::zero(), 3, scale)
            .unwrap();
        let close = |d: &Dec, target: i64| {
            let diff = d.sub(&Dec::from_int(target, scale)).abs();
            diff.le(&Dec::from_rat(&Rat::new(1.into(), num::BigInt::from(10).pow(30)), scale))
        };
        assert!(close(&fit.constants[0], 3));
        assert!(close(&fit.constants[1], 5));
        assert!(close(&fit.constants[2], 7));
        assert!(fit.residual.le(&Dec::from_rat(
            &Rat::new(1.into(), num::BigInt::from(10).pow(30)),
            scale
        )));
    }

    #[test]
    fn mu_estimate_is_close_for_geometric_data() {
        let samples: Vec<(u64, Rat)> = (50..=52)
            .map(|n| (n as u64, Rat::from(num::BigInt::from(3).pow(n as u32))))
            .collect();
        let mu = estimate_mu(&samples, &Rat::zero(), 30).unwrap();
        let diff = mu.sub(&Dec::from_int(3, 30)).abs();
        assert!(diff.le(&Dec::from_rat(&rat(1, 1000), 30)));
    }
}
