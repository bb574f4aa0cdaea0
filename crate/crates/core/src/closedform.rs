//! Closed form of the grand generating function and its Euler derivatives.
//!
//! The joint generating function F(X; Y, Z) = sum over sizes n of X^n times
//! the mark polynomial (Y marks hairpins, Z marks base pairs) is algebraic of
//! degree two: it can be written as u + v * sqrt(R) with u, v rational
//! functions and R a fixed trivariate polynomial, the radicand. This module
//! builds that representation, pushes Euler operators Y d/dY and Z d/dZ
//! through it to reach power-sum numerators, specializes the marks to 1, and
//! expands the results as exact power series.
//!
//! Everything here is exact rational arithmetic. The series expansions double
//! as internal consistency checks: pole parts must cancel and the specialized
//! series must reproduce the structure counts.

use crate::error::{Error, Result};
use crate::exactnum::mpoly::{MPoly3, MRatFun3, Var3};
use crate::exactnum::poly::Poly;
use crate::exactnum::rat::{rat, Rat};
use crate::exactnum::ratfun::RatFun;
use crate::exactnum::series::{Laurent, Series};


/// Generating function value of the form u + v * sqrt(radicand), with u and v
/// trivariate rational functions in (X, Y, Z).
///
/// The radicand is shared by the whole Euler pipeline: differentiating
/// u + v sqrt(R) only rewrites u and v, never R.
#[derive(Clone, Debug)]
pub struct RadicalExpr {
    pub u: MRatFun3,
    pub v: MRatFun3,
    pub radicand: MPoly3,
}

/// Univariate specialization (marks set to 1): u1 + v1 * sqrt(radicand0).
#[derive(Clone, Debug)]
pub struct UniRadical {
    pub u1: RatFun<Rat>,
    pub v1: RatFun<Rat>,
    pub radicand0: Poly<Rat>,
}

/// The trivariate radicand R of the closed form.
pub fn radicand() -> MPoly3 {
    MPoly3::from_terms(&[
        (1, 6, 2, 2),
        (-2, 5, 1, 2),
        (-2, 5, 1, 1),
        (4, 4, 1, 1),
        (1, 4, 0, 2),
        (-2, 4, 0, 1),
        (-2, 3, 1, 1),
        (1, 4, 0, 0),
        (4, 3, 0, 1),
        (-4, 3, 0, 0),
        (-2, 2, 0, 1),
        (6, 2, 0, 0),
        (-4, 1, 0, 0),
        (1, 0, 0, 0),
    ])
}

/// Numerator polynomial N of the radical quotient (N + sqrt(R)) / D.
fn quotient_numerator() -> MPoly3 {
    MPoly3::from_terms(&[
        (-2, 4, 0, 1),
        (1, 3, 1, 1),
        (1, 2, 0, 1),
        (-1, 2, 0, 0),
        (2, 1, 0, 0),
        (-1, 0, 0, 0),
    ])
}

/// Denominator polynomial D = 2 X^2 Z (X - 1) of the radical quotient.
fn quotient_denominator() -> MPoly3 {
    MPoly3::from_terms(&[(2, 3, 0, 1), (-2, 2, 0, 1)])
}

fn x_minus_one() -> MPoly3 {
    MPoly3::from_terms(&[(1, 1, 0, 0), (-1, 0, 0, 0)])
}

/// The grand generating function as a radical expression.
///
/// The radical quotient (N + sqrt(R)) / D alone reproduces the series only
/// from X^2 onward; the two smallest sizes contribute one (unpaired)
/// structure each, so the rational part carries an explicit extra 1 + X.
/// Equivalently, u = (N + (1 + X) D) / D and v = 1 / D.
pub fn grand_gf() -> RadicalExpr {
    let d = quotient_denominator();
    let one_plus_x = MPoly3::from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)]);
    let u = MRatFun3::new(quotient_numerator().add(&one_plus_x.mul(&d)), d.clone());
    let v = MRatFun3::new(MPoly3::one(), d);
    RadicalExpr {
        u: u.reduced(&[&x_minus_one()]),
        v,
        radicand: radicand(),
    }
}

/// One application of the Euler operator t d/dt to u + v sqrt(R).
///
/// d/dt (u + v sqrt(R)) = u_t + (v_t + v R_t / (2R)) sqrt(R), so the result
/// stays in the same radical form with the same radicand. Denominators stay
/// inside the multiplicatively closed set generated by monomials, X - 1, and
/// R, which is what `reduced` knows how to cancel.
fn euler_once(e: &RadicalExpr, var: Var3) -> RadicalExpr {
    let t = MRatFun3::from_poly(MPoly3::var(var));
    let xm1 = x_minus_one();
    let known: [&MPoly3; 2] = [&e.radicand, &xm1];
    let u = t.mul(&e.u.partial_derivative(var)).reduced(&known);
    let chain = MRatFun3::new(
        e.v.num.mul(&e.radicand.partial_derivative(var)),
        e.v.den.mul(&e.radicand).scale(&rat(2, 1)),
    );
    let v = t
        .mul(&e.v.partial_derivative(var).add(&chain))
        .reduced(&known);
    RadicalExpr {
        u,
        v,
        radicand: e.radicand.clone(),
    }
}

/// Apply the hairpin Euler operator (Y d/dY) `hairpin_order` times and the
/// pair Euler operator (Z d/dZ) `pair_order` times.
///
/// The coefficient of X^n in the result, with marks then set to 1, is the
/// power sum over all size-n structures of h^hairpin_order * p^pair_order.
pub fn euler_apply(e: &RadicalExpr, hairpin_order: u32, pair_order: u32) -> RadicalExpr {
    let mut out = e.clone();
    for _ in 0..hairpin_order {
        out = euler_once(&out, Var3::Y);
    }
    for _ in 0..pair_order {
        out = euler_once(&out, Var3::Z);
    }
    out
}

/// Set both marks to 1, reducing to a univariate radical expression.
///
/// Validates the pole structure: the rational part may only have poles at
/// X = 0 and X = 1, and the radical part only at X = 0, X = 1, and zeros of
/// the specialized radicand.
pub fn specialize(e: &RadicalExpr) -> Result<UniRadical> {
    let u1 = e.u.specialize_marks().reduced();
    let v1 = e.v.specialize_marks().reduced();
    let radicand0 = e
        .radicand
        .set_one(Var3::Y)
        .set_one(Var3::Z)
        .to_univariate();
    let x = Poly::<Rat>::x();
    let xm1 = x.sub(&Poly::one());
    check_pole_support(&u1, &[&x, &xm1], "rational part")?;
    // after gcd reduction the radical denominator carries the square-free
    // core of the radicand (minus any X, X - 1 parts), not whole powers of it
    let mut branch_core = radicand0.squarefree_part().monic();
    while let Some(q) = branch_core.div_exact(&x) {
        branch_core = q;
    }
    while let Some(q) = branch_core.div_exact(&xm1) {
        branch_core = q;
    }
    check_pole_support(&v1, &[&x, &xm1, &branch_core], "radical part")?;
    Ok(UniRadical { u1, v1, radicand0 })
}

fn check_pole_support(rf: &RatFun<Rat>, allowed: &[&Poly<Rat>], what: &str) -> Result<()> {
    let mut d = rf.den.monic();
    for f in allowed {
        while let Some(q) = d.div_exact(f) {
            d = q;
            if d.is_constant() {
                return Ok(());
            }
        }
    }
    if d.is_constant() {
        Ok(())
    } else {
        Err(Error::UnexpectedPoles {
            context: format!("{what}: residual denominator factor of degree {}", d.deg().unwrap_or(0)),
        })
    }
}

/// Laurent expansion of a rational function around X = 0.
///
/// The result is exact through exponent `order`.
fn laurent_of_ratfun(rf: &RatFun<Rat>, order: usize) -> Result<Laurent<Rat>> {
    let x = Poly::<Rat>::x();
    let pole = rf.den.multiplicity_of(&x);
    let mut den = rf.den.clone();
    for _ in 0..pole {
        den = den.div_exact(&x).expect("multiplicity_of overcounted the X factor");
    }
    let inv = Series::from_poly(&den, order + pole).inverse()?;
    let num = Series::from_poly(&rf.num, order + pole);
    Ok(Laurent::from_series(&num.mul(&inv)).shift(-(pole as i64)))
}

/// Power series of u1 + v1 * sqrt(radicand0) through X^order.
///
/// The square root takes the branch with positive constant term, which
/// requires the radicand to have a nonzero perfect-square constant term. The
/// pole parts of the two summands must cancel exactly; a leftover pole is
/// reported as an error.
pub fn uniradical_series(r: &UniRadical, order: usize) -> Result<Series<Rat>> {
    let x = Poly::<Rat>::x();
    let margin = r
        .u1
        .den
        .multiplicity_of(&x)
        .max(r.v1.den.multiplicity_of(&x));
    let w = order + margin;
    let lu = laurent_of_ratfun(&r.u1, w)?;
    let lv = laurent_of_ratfun(&r.v1, w)?;
    let root = Series::from_poly(&r.radicand0, w).sqrt()?;
    lu.add(&lv.mul(&Laurent::from_series(&root))).into_series(order)
}

/// Coefficient of X^n as a polynomial in the marks, for n = 0..=order,
/// computed from the closed form alone.
///
/// The radicand has constant term 1, so sqrt(R) expands as a power series in
/// X whose coefficients are polynomials in the marks over Q; no division by
/// mark monomials is needed until the final exact division by the quotient
/// denominator 2 X^2 Z (X - 1), whose validity is asserted term by term.
pub fn closed_form_series(order: usize) -> Vec<MPoly3> {
    let w = order + 2;
    let r = x_slices(&radicand(), w);
    let half = rat(1, 2);
    let mut s: Vec<MPoly3> = Vec::with_capacity(w + 1);
    s.push(MPoly3::one());
    for m in 1..=w {
        let mut acc = r[m].clone();
        for j in 1..m {
            acc = acc.sub(&s[j].mul(&s[m - j]));
        }
        s.push(acc.scale(&half));
    }
    let n_slices = x_slices(&quotient_numerator(), w);
    let num: Vec<MPoly3> = (0..=w).map(|m| n_slices[m].add(&s[m])).collect();
    assert!(
        num[0].is_zero() && num[1].is_zero(),
        "radical quotient numerator must vanish through X^1"
    );
    // divide by -2 Z X^2, then by 1 - X (prefix sums), then restore the
    // explicit 1 + X part
    let minus_half = rat(-1, 2);
    let mut out: Vec<MPoly3> = Vec::with_capacity(order + 1);
    let mut run = MPoly3::zero();
    for m in 0..=order {
        let c = &num[m + 2];
        if !c.is_zero() {
            assert!(
                c.min_exponents().2 >= 1,
                "radical quotient numerator coefficient not divisible by the pair mark"
            );
            run = run.add(&c.div_monomial((0, 0, 1)).scale(&minus_half));
        }
        out.push(run.clone());
    }
    out[0] = out[0].add(&MPoly3::one());
    if order >= 1 {
        out[1] = out[1].add(&MPoly3::one());
    }
    out
}

/// Bucket a trivariate polynomial by X-exponent, keeping exponents <= top.
fn x_slices(p: &MPoly3, top: usize) -> Vec<MPoly3> {
    let mut out = vec![MPoly3::zero(); top + 1];
    for (&(ex, ey, ez), c) in &p.terms {
        if (ex as usize) <= top {
            out[ex as usize].add_term((0, ey, ez), c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat_int;
    use crate::structures::{joint_counts, power_sums_through};
    use num::BigInt;

    fn series_coeff_bigint(s: &Series<Rat>, k: usize) -> Option<BigInt> {
        let c = s.coeff(k);
        if c.is_integer() {
            Some(c.to_integer())
        } else {
            None
        }
    }

    #[test]
    fn radicand_specializes_to_univariate_form() {
        let r0 = radicand().set_one(Var3::Y).set_one(Var3::Z).to_univariate();
        let expected = Poly::new(
            [1, -4, 4, -2, 4, -4, 1].iter().map(|&c| rat_int(c)).collect(),
        );
        assert_eq!(r0, expected);
    }

    #[test]
    fn specialized_series_reproduces_counts() {
        let f = specialize(&grand_gf()).unwrap();
        let s = uniradical_series(&f, 9).unwrap();
        let expected = [1u32, 1, 1, 2, 4, 8, 17, 37, 82, 185];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(series_coeff_bigint(&s, k), Some(BigInt::from(e)), "count at n = {k}");
        }
    }

    #[test]
    fn closed_form_series_matches_joint_tables() {
        let table = closed_form_series(10);
        for n in 0..=10u64 {
            assert_eq!(
                table[n as usize],
                joint_counts(n).mark_polynomial(),
                "mark polynomial at n = {n}"
            );
        }
    }

    #[test]
    fn size_three_table_is_one_plus_marked_pair() {
        let expected = MPoly3::from_terms(&[(1, 0, 0, 0), (1, 0, 1, 1)]);
        assert_eq!(closed_form_series(3)[3], expected);
    }

    #[test]
    fn euler_derivatives_give_power_sums() {
        // size 5: seven hairpins and eight pairs in total across 8 structures
        let f = grand_gf();
        let hair = uniradical_series(&specialize(&euler_apply(&f, 1, 0)).unwrap(), 5).unwrap();
        assert_eq!(series_coeff_bigint(&hair, 5), Some(BigInt::from(7)));
        let pair = uniradical_series(&specialize(&euler_apply(&f, 0, 1)).unwrap(), 5).unwrap();
        assert_eq!(series_coeff_bigint(&pair, 5), Some(BigInt::from(8)));
    }

    #[test]
    fn power_sum_round_trip() {
        let n_max = 60u64;
        let max_order = 4u32;
        let sums = power_sums_through(n_max, max_order);
        let f = grand_gf();
        for i in 0..=max_order {
            for j in 0..=(max_order - i) {
                let e = euler_apply(&f, i, j);
                assert!(
                    e.u.den.div_exact(&e.radicand).is_none(),
                    "rational part of ({i},{j}) picked up a radicand factor"
                );
                let s = uniradical_series(&specialize(&e).unwrap(), n_max as usize).unwrap();
                for n in 0..=n_max {
                    let got = series_coeff_bigint(&s, n as usize);
                    assert_eq!(
                        got.as_ref(),
                        Some(sums[n as usize].get(i, j)),
                        "power sum ({i},{j}) at n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn specialization_rejects_unexpected_poles() {
        // 1 / (1 - 2X) has a pole away from {0, 1}
        let bad = RadicalExpr {
            u: MRatFun3::new(
                MPoly3::one(),
                MPoly3::from_terms(&[(1, 0, 0, 0), (-2, 1, 0, 0)]),
            ),
            v: MRatFun3::zero(),
            radicand: radicand(),
        };
        assert!(matches!(
            specialize(&bad),
            Err(Error::UnexpectedPoles { .. })
        ));
    }

    #[test]
    fn uniradical_series_on_plain_square_root() {
        // sqrt(1 - 2X) alone: u1 = 0, v1 = 1
        let r = UniRadical {
            u1: RatFun::zero(),
            v1: RatFun::one(),
            radicand0: Poly::new(vec![rat_int(1), rat_int(-2)]),
        };
        let s = uniradical_series(&r, 2).unwrap();
        assert_eq!(s.coeff(0), rat_int(1));
        assert_eq!(s.coeff(1), rat_int(-1));
        assert_eq!(s.coeff(2), rat(-1, 2));
    }

    #[test]
    fn pole_parts_cancel_in_combination() {
        // (-1 + sqrt(1 + 2X)) / X is a power series: 1 - X/2 + X^2/2 - ...
        let x = Poly::<Rat>::x();
        let r = UniRadical {
            u1: RatFun::raw(Poly::constant(rat_int(-1)), x.clone()),
            v1: RatFun::raw(Poly::one(), x),
            radicand0: Poly::new(vec![rat_int(1), rat_int(2)]),
        };
        let s = uniradical_series(&r, 2).unwrap();
        assert_eq!(s.coeff(0), rat_int(1));
        assert_eq!(s.coeff(1), rat(-1, 2));
        assert_eq!(s.coeff(2), rat(1, 2));
    }

    #[test]
    fn leftover_pole_is_reported() {
        let x = Poly::<Rat>::x();
        let r = UniRadical {
            u1: RatFun::raw(Poly::one(), x),
            v1: RatFun::zero(),
            radicand0: Poly::one(),
        };
        assert!(uniradical_series(&r, 3).is_err());
    }

    #[test]
    fn euler_operators_commute() {
        let f = grand_gf();
        let a = specialize(&euler_apply(&euler_apply(&f, 1, 0), 0, 1)).unwrap();
        let b = specialize(&euler_apply(&euler_apply(&f, 0, 1), 1, 0)).unwrap();
        let sa = uniradical_series(&a, 12).unwrap();
        let sb = uniradical_series(&b, 12).unwrap();
        for k in 0..=12 {
            assert_eq!(sa.coeff(k), sb.coeff(k), "mixed Euler order at n = {k}");
        }
    }
}
