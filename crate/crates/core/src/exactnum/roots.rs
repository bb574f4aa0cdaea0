//! Real root isolation and recognition for rational polynomials.
//!
//! Sturm chains give exact root counts on rational intervals, bisection
//! refines isolating intervals to any requested width, and a reconstruction
//! step tries to identify each root exactly: as a rational number, or as a
//! root of a rational quadratic factor, in which case roots lying in
//! Q(sqrt 5) are returned as [`QuadNum`] values. Factors that resist
//! identification are reported as leftovers together with exact modulus
//! bounds, never silently dropped; callers decide whether a leftover blocks
//! their certification.
//!
//! Recognition is reconstruction plus exact verification: a candidate read
//! off a refined interval is only accepted if it divides the polynomial
//! exactly, so a wrong guess can cause a missed identification but never a
//! wrong one.

use num::{One, Signed, Zero};

use super::poly::Poly;
use super::quad::QuadNum;
use super::rat::{rat_int, Rat};

/// Width target for isolating intervals before reconstruction, 2^-80.
pub fn default_refine_width() -> Rat {
    Rat::new(1.into(), num::BigInt::from(2).pow(80))
}

/// Sturm chain of p: remainders with flipped signs, each scaled by a
/// positive constant to keep coefficients small.
pub fn sturm_chain(p: &Poly<Rat>) -> Vec<Poly<Rat>> {
    let mut chain = vec![normalize_positive(p), normalize_positive(&p.derivative())];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(normalize_positive(&r.neg()));
    }
}

/// Scale by a positive rational so coefficients are coprime integers; the
/// sign pattern, which is all Sturm evaluation uses, is unchanged.
fn normalize_positive(p: &Poly<Rat>) -> Poly<Rat> {
    if p.is_zero() {
        return Poly::zero();
    }
    let (ints, unit) = p.primitive_parts();
    // primitive_parts flips signs to make the leading coefficient positive;
    // undo that when it happened, the overall scale must stay positive
    let flip = unit.is_negative();
    Poly::new(
        ints.into_iter()
            .map(|v| if flip { Rat::from(-v) } else { Rat::from(v) })
            .collect(),
    )
}

fn sign_variations<F: Fn(&Poly<Rat>) -> i32>(chain: &[Poly<Rat>], sign_of: F) -> usize {
    let mut last = 0i32;
    let mut changes = 0usize;
    for p in chain {
        let s = sign_of(p);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn sign_at(p: &Poly<Rat>, x: &Rat) -> i32 {
    let v = p.eval_rat(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots in (lo, hi]; endpoints must not be roots of
/// the chain's head polynomial (lo in particular).
pub fn count_roots_between(chain: &[Poly<Rat>], lo: &Rat, hi: &Rat) -> usize {
    let va = sign_variations(chain, |p| sign_at(p, lo));
    let vb = sign_variations(chain, |p| sign_at(p, hi));
    va.saturating_sub(vb)
}

/// Cauchy bound: every complex root z of p satisfies |z| <= bound.
pub fn modulus_upper_bound(p: &Poly<Rat>) -> Rat {
    let d = p.deg().expect("root bound of the zero polynomial");
    let lead = p.coeff(d).abs();
    let mut m = Rat::zero();
    for k in 0..d {
        let q = p.coeff(k).abs() / lead.clone();
        if q > m {
            m = q;
        }
    }
    m + Rat::one()
}

/// Lower bound: every root z of p satisfies |z| >= bound > 0.
/// Requires p(0) != 0 (otherwise no positive bound exists).
pub fn modulus_lower_bound(p: &Poly<Rat>) -> Rat {
    assert!(
        !p.coeff(0).is_zero(),
        "modulus lower bound requires a nonzero constant term"
    );
    Rat::one() / modulus_upper_bound(&p.reversal())
}

/// Isolating intervals for all real roots of a square-free polynomial.
///
/// Each returned interval (lo, hi] contains exactly one root; a degenerate
/// interval [r, r] marks an exactly known rational root.
pub fn isolate_real_roots(p: &Poly<Rat>) -> Vec<(Rat, Rat)> {
    assert!(
        p.gcd(&p.derivative()).is_constant(),
        "root isolation requires a square-free polynomial"
    );
    if p.is_constant() {
        return Vec::new();
    }
    let chain = sturm_chain(p);
    let bound = modulus_upper_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = count_roots_between(&chain, &lo, &hi);
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                if sign_at(p, &mid) == 0 {
                    out.push((mid.clone(), mid.clone()));
                    // nudge around the hit root so Sturm endpoints stay
                    // off-root; widen the nudge back out if it swallowed a
                    // neighboring root
                    let mut eps = (hi.clone() - lo.clone()) / rat_int(1024);
                    loop {
                        let a = mid.clone() - eps.clone();
                        let b = mid.clone() + eps.clone();
                        if sign_at(p, &a) != 0
                            && sign_at(p, &b) != 0
                            && count_roots_between(&chain, &a, &b) == 1
                        {
                            stack.push((lo.clone(), a));
                            stack.push((b, hi.clone()));
                            break;
                        }
                        eps /= rat_int(2);
                    }
                } else {
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Split point for bisection; midpoint unless it lands exactly on a root in
/// a way the caller wants to detect (the caller checks).
fn split_point(_p: &Poly<Rat>, lo: &Rat, hi: &Rat) -> Rat {
    (lo.clone() + hi.clone()) / rat_int(2)
}

/// Shrink an isolating interval below the given width by sign bisection.
///
/// The input must contain exactly one simple root; point intervals pass
/// through unchanged.
pub fn refine_interval(p: &Poly<Rat>, interval: (Rat, Rat), width: &Rat) -> (Rat, Rat) {
    let (mut lo, mut hi) = interval;
    if lo == hi {
        return (lo, hi);
    }
    if sign_at(p, &hi) == 0 {
        return (hi.clone(), hi);
    }
    let mut slo = sign_at(p, &lo);
    if slo == 0 {
        return (lo.clone(), lo);
    }
    let shi = sign_at(p, &hi);
    assert!(
        slo != shi,
        "refinement interval must bracket its root with a sign change"
    );
    while hi.clone() - lo.clone() > *width {
        let mid = (lo.clone() + hi.clone()) / rat_int(2);
        let sm = sign_at(p, &mid);
        if sm == 0 {
            return (mid.clone(), mid);
        }
        if sm == slo {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// The unique rational with smallest denominator in the closed interval
/// [lo, hi] (smallest numerator among those on ties).
pub fn simplest_rational_in(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi, "empty interval");
    if lo.is_negative() && !hi.is_negative() {
        return Rat::zero();
    }
    if lo.is_positive() || lo.is_zero() {
        simplest_non_negative(lo, hi)
    } else {
        -simplest_non_negative(&-hi.clone(), &-lo.clone())
    }
}

fn simplest_non_negative(lo: &Rat, hi: &Rat) -> Rat {
    // 0 <= lo <= hi; continued-fraction descent
    let fl = lo.floor();
    if &fl == lo {
        return lo.clone();
    }
    let next = fl.clone() + Rat::one();
    if next <= *hi {
        return next;
    }
    // both endpoints inside (fl, fl + 1): recurse on reciprocals
    let inner = simplest_non_negative(
        &(Rat::one() / (hi.clone() - fl.clone())),
        &(Rat::one() / (lo.clone() - fl.clone())),
    );
    fl + Rat::one() / inner
}

fn rational_square_root(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = super::rat::int_sqrt_exact(r.numer())?;
    let d = super::rat::int_sqrt_exact(r.denom())?;
    Some(Rat::new(n, d))
}

/// One identified real root.
#[derive(Clone, Debug)]
pub struct RecognizedRoot {
    pub value: QuadNum,
    pub multiplicity: usize,
}

/// Full root classification of a rational polynomial.
#[derive(Clone, Debug)]
pub struct RootAnalysis {
    /// Real roots identified exactly in Q(sqrt 5), rationals included.
    pub real: Vec<RecognizedRoot>,
    /// Irreducible quadratic factors with complex roots: (monic factor,
    /// squared modulus of each root, multiplicity).
    pub complex_quadratics: Vec<(Poly<Rat>, Rat, usize)>,
    /// Product of everything not identified (constant 1 when nothing is
    /// left); its roots have no exact description here.
    pub leftover: Poly<Rat>,
}

impl RootAnalysis {
    /// Largest modulus that any root outside `real` could have: exact for
    /// complex quadratics, Cauchy bound for the leftover. None if every root
    /// was identified.
    pub fn unidentified_modulus_sq_upper(&self) -> Option<Rat> {
        let mut best: Option<Rat> = None;
        let mut push = |m: Rat| {
            if best.as_ref().map_or(true, |b| m > *b) {
                best = Some(m);
            }
        };
        for (_, msq, _) in &self.complex_quadratics {
            push(msq.clone());
        }
        if !self.leftover.is_constant() {
            let b = modulus_upper_bound(&self.leftover);
            push(b.clone() * b);
        }
        best
    }
}

/// Identify the roots of p: isolate real roots, reconstruct rational and
/// quadratic candidates from refined intervals, verify by exact division,
/// and classify what remains.
pub fn analyze_roots(p: &Poly<Rat>) -> RootAnalysis {
    assert!(!p.is_zero(), "root analysis of the zero polynomial");
    let mut analysis = RootAnalysis {
        real: Vec::new(),
        complex_quadratics: Vec::new(),
        leftover: Poly::one(),
    };
    if p.is_constant() {
        return analysis;
    }
    let monic = p.monic();
    let x = Poly::<Rat>::x();
    let zero_mult = monic.multiplicity_of(&x);
    if zero_mult > 0 {
        analysis.real.push(RecognizedRoot {
            value: QuadNum::zero(),
            multiplicity: zero_mult,
        });
    }
    let sf = monic.squarefree_part();
    let mut work = if zero_mult > 0 {
        sf.div_exact(&x).expect("square-free part lost the X factor")
    } else {
        sf
    };
    let width = default_refine_width();
    let mut intervals: Vec<(Rat, Rat)> = isolate_real_roots(&work)
        .into_iter()
        .map(|iv| refine_interval(&work, iv, &width))
        .collect();

    // pass 1: rational roots
    let mut remaining = Vec::new();
    for (lo, hi) in intervals.drain(..) {
        let cand = simplest_rational_in(&lo, &hi);
        let factor = x.sub(&Poly::constant(cand.clone()));
        if work.div_exact(&factor).is_some() {
            analysis.real.push(RecognizedRoot {
                value: QuadNum::from_rat(cand),
                multiplicity: monic.multiplicity_of(&factor),
            });
            work = strip_factor(&work, &factor);
        } else {
            remaining.push((lo, hi));
        }
    }

    // pass 2: quadratic factors reconstructed from pairs of real roots
    let mut used = vec![false; remaining.len()];
    for i in 0..remaining.len() {
        if used[i] {
            continue;
        }
        for j in (i + 1)..remaining.len() {
            if used[j] {
                continue;
            }
            let (ref alo, ref ahi) = remaining[i];
            let (ref blo, ref bhi) = remaining[j];
            let trace = simplest_rational_in(&(alo.clone() + blo.clone()), &(ahi.clone() + bhi.clone()));
            let (plo, phi) = product_interval(alo, ahi, blo, bhi);
            let nrm = simplest_rational_in(&plo, &phi);
            let factor = Poly::new(vec![nrm.clone(), -trace.clone(), Rat::one()]);
            if work.div_exact(&factor).is_none() {
                continue;
            }
            let mult = monic.multiplicity_of(&factor);
            let disc = trace.clone() * trace.clone() - rat_int(4) * nrm;
            let root_of = |s: QuadNum| {
                QuadNum::new(trace.clone() / rat_int(2), Rat::zero())
                    + s * QuadNum::new(Rat::new(1.into(), 2.into()), Rat::zero())
            };
            let sqrt_disc = if let Some(r) = rational_square_root(&disc) {
                Some(QuadNum::from_rat(r))
            } else {
                rational_square_root(&(disc / rat_int(5))).map(|r| QuadNum::new(Rat::zero(), r))
            };
            if let Some(s) = sqrt_disc {
                analysis.real.push(RecognizedRoot {
                    value: root_of(s.clone()),
                    multiplicity: mult,
                });
                analysis.real.push(RecognizedRoot {
                    value: root_of(-s),
                    multiplicity: mult,
                });
                work = strip_factor(&work, &factor);
                used[i] = true;
                used[j] = true;
                break;
            }
            // verified factor, but its roots live outside Q(sqrt 5):
            // leave it for the leftover classification below
        }
    }

    // classify what is left of the square-free part
    if !work.is_constant() {
        let chain = sturm_chain(&work);
        let b = modulus_upper_bound(&work) + Rat::one();
        let real_roots = count_roots_between(&chain, &-b.clone(), &b);
        if real_roots == 0 && work.deg() == Some(2) {
            let msq = work.coeff(0).clone();
            let mult = monic.multiplicity_of(&work);
            analysis.complex_quadratics.push((work.clone(), msq, mult));
        } else {
            analysis.leftover = work;
        }
    }
    analysis.real.sort_by(|a, b| a.value.cmp(&b.value));
    analysis
}

fn strip_factor(p: &Poly<Rat>, factor: &Poly<Rat>) -> Poly<Rat> {
    let mut out = p.clone();
    while let Some(q) = out.div_exact(factor) {
        out = q;
    }
    out
}

fn product_interval(alo: &Rat, ahi: &Rat, blo: &Rat, bhi: &Rat) -> (Rat, Rat) {
    let corners = [
        alo.clone() * blo.clone(),
        alo.clone() * bhi.clone(),
        ahi.clone() * blo.clone(),
        ahi.clone() * bhi.clone(),
    ];
    let mut lo = corners[0].clone();
    let mut hi = corners[0].clone();
    for c in &corners[1..] {
        if *c < lo {
            lo = c.clone();
        }
        if *c > hi {
            hi = c.clone();
        }
    }
    (lo, hi)
}
