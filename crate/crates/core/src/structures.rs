//! Enumeration and exact statistics of secondary structures.
//!
//! A structure on n positions is a partial matching of {0, .., n-1} by arcs
//! (i, j) with j - i >= 2, no two arcs sharing an endpoint and no two arcs
//! crossing. An arc is a hairpin if no other arc lies strictly inside it.
//!
//! The module provides three independent computation paths, used to check
//! each other in the tests:
//!
//! * [`enumerate_structures`] — brute-force backtracking over candidate arc
//!   sets, straight from the definition; the oracle for everything else.
//! * [`joint_counts`] — the grammar recurrence computing, for one n, how many
//!   structures have each (hairpins, pairs) profile.
//! * [`power_sums_through`] — the same recurrence carried on truncated jets
//!   of Euler derivatives, which yields the power sums sum h^i p^j over all
//!   structures without materializing the bivariate table. This is the path
//!   that scales to n in the hundreds.
//!
//! The grammar behind the last two: a nonempty structure either leaves its
//! last position unpaired, or pairs it with position k, splitting the rest
//! into an independent prefix and an enclosed interior. The enclosed arc is a
//! hairpin exactly when the interior carries no arc at all.

use crate::error::{Error, Result};
use crate::exactnum::dec::Dec;
use crate::exactnum::mpoly::MPoly3;
use crate::exactnum::rat::{binom_rat, rat_int, Rat};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Largest n accepted by the brute-force enumerator.
pub const MAX_ENUM_N: u64 = 14;

/// A single secondary structure: arc list sorted by left endpoint, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Structure {
    /// Build from an arc list, validating the structure conditions.
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        arcs.sort_unstable();
        let s = Structure { n, arcs };
        if s.check().is_some() {
            return Err(Error::Parse {
                context: format!("invalid structure on {n} positions: {:?}", s.arcs),
            });
        }
        Ok(s)
    }

    fn from_arcs_unchecked(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        Structure { n, arcs }
    }

    /// First violated condition, if any (for tests and validation).
    fn check(&self) -> Option<&'static str> {
        for &(i, j) in &self.arcs {
            if j >= self.n {
                return Some("endpoint out of range");
            }
            if j < i + 2 {
                return Some("arc span below 2");
            }
        }
        for (a, &(i1, j1)) in self.arcs.iter().enumerate() {
            for &(i2, j2) in &self.arcs[a + 1..] {
                if i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2 {
                    return Some("shared endpoint");
                }
                let (p, q) = if i1 < i2 { ((i1, j1), (i2, j2)) } else { ((i2, j2), (i1, j1)) };
                if p.0 < q.0 && q.0 < p.1 && p.1 < q.1 {
                    return Some("crossing arcs");
                }
            }
        }
        None
    }

    pub fn positions(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn num_pairs(&self) -> u32 {
        self.arcs.len() as u32
    }

    /// Number of arcs with no other arc strictly inside them.
    pub fn num_hairpins(&self) -> u32 {
        self.arcs
            .iter()
            .filter(|&&(i, j)| {
                !self
                    .arcs
                    .iter()
                    .any(|&(a, b)| i < a && b < j)
            })
            .count() as u32
    }

    /// Dot-bracket string: '.' unpaired, '(' and ')' for arc endpoints.
    pub fn dot_bracket(&self) -> String {
        let mut out = vec!['.'; self.n];
        for &(i, j) in &self.arcs {
            out[i] = '(';
            out[j] = ')';
        }
        out.into_iter().collect()
    }
}

/// All structures on n positions, by definition-driven backtracking.
///
/// Candidate arcs are scanned in lexicographic order; each compatible subset
/// is produced exactly once. Guarded by [`MAX_ENUM_N`] since the count grows
/// like 2.6^n.
pub fn enumerate_structures(n: u64) -> Result<Vec<Structure>> {
    if n > MAX_ENUM_N {
        return Err(Error::EnumerationLimit { n, max: MAX_ENUM_N });
    }
    let n = n as usize;
    let mut candidates = Vec::new();
    for i in 0..n {
        for j in (i + 2)..n {
            candidates.push((i, j));
        }
    }

    fn compatible(a: (usize, usize), b: (usize, usize)) -> bool {
        if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
            return false;
        }
        let (p, q) = if a.0 < b.0 { (a, b) } else { (b, a) };
        // p starts first; crossing means q starts inside p but ends outside
        !(q.0 < p.1 && p.1 < q.1)
    }

    fn extend(
        start: usize,
        candidates: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Structure>,
        n: usize,
    ) {
        out.push(Structure::from_arcs_unchecked(n, chosen.clone()));
        for idx in start..candidates.len() {
            let arc = candidates[idx];
            if chosen.iter().all(|&c| compatible(arc, c)) {
                chosen.push(arc);
                extend(idx + 1, candidates, chosen, out, n);
                chosen.pop();
            }
        }
    }

    let mut out = Vec::new();
    extend(0, &candidates, &mut Vec::new(), &mut out, n);
    Ok(out)
}

/// Counts of structures for sizes 0..=upto, by the grammar recurrence.
pub fn count_sequence(upto: u64) -> Vec<BigInt> {
    let upto = upto as usize;
    let mut a: Vec<BigInt> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        let v = if m < 3 {
            BigInt::one()
        } else {
            let mut s = a[m - 1].clone();
            for k in 1..=(m - 2) {
                s += &a[k - 1] * &a[m - 1 - k];
            }
            s
        };
        a.push(v);
    }
    a
}

/// Number of structures on n positions.
pub fn count(n: u64) -> BigInt {
    count_sequence(n).pop().expect("nonempty sequence")
}

type Hist = BTreeMap<(u32, u32), BigInt>;

/// Bivariate table: how many structures on n positions have exactly
/// (hairpins, pairs) = (i, j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointCounts {
    n: u64,
    counts: Hist,
}

impl JointCounts {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Count at (hairpins, pairs); zero if absent.
    pub fn get(&self, hairpins: u32, pairs: u32) -> BigInt {
        self.counts
            .get(&(hairpins, pairs))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero entries in lexicographic (hairpins, pairs) order.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.counts.iter()
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// Histogram of an explicit structure list (oracle path).
    pub fn from_structures(n: u64, structures: &[Structure]) -> Self {
        let mut counts = Hist::new();
        for s in structures {
            *counts
                .entry((s.num_hairpins(), s.num_pairs()))
                .or_insert_with(BigInt::zero) += 1;
        }
        JointCounts { n, counts }
    }

    /// The table as a polynomial in the hairpin mark Y and pair mark Z
    /// (X-degree zero): sum of count * Y^h Z^p.
    pub fn mark_polynomial(&self) -> MPoly3 {
        let mut poly = MPoly3::zero();
        for (&(h, p), c) in &self.counts {
            poly.add_term((0, h, p), Rat::from(c.clone()));
        }
        poly
    }

    /// Power sum over the table: sum of h^i p^j weighted by counts.
    pub fn power_sum(&self, i: u32, j: u32) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(h, p), c) in &self.counts {
            acc += c * BigInt::from(h).pow(i) * BigInt::from(p).pow(j);
        }
        acc
    }
}

/// Bivariate (hairpins, pairs) table via the grammar recurrence.
pub fn joint_counts(n: u64) -> JointCounts {
    let n = n as usize;
    let mut f: Vec<Hist> = Vec::with_capacity(n + 1);
    // interior factor for an enclosing arc: drop the arcless interior from
    // the plain table and credit it at (1, 0), marking the arc as a hairpin
    let mut g: Vec<Hist> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut cur: Hist = if m == 0 {
            let mut h = Hist::new();
            h.insert((0, 0), BigInt::one());
            h
        } else {
            f[m - 1].clone()
        };
        if m >= 3 {
            for k in 1..=(m - 2) {
                let left = &f[k - 1];
                let interior = &g[m - 1 - k];
                for (&(h1, p1), c1) in left {
                    for (&(h2, p2), c2) in interior {
                        *cur.entry((h1 + h2, p1 + p2 + 1))
                            .or_insert_with(BigInt::zero) += c1 * c2;
                    }
                }
            }
        }
        let mut adj = cur.clone();
        adj.remove(&(0, 0));
        *adj.entry((1, 0)).or_insert_with(BigInt::zero) += BigInt::one();
        f.push(cur);
        g.push(adj);
    }
    JointCounts {
        n: n as u64,
        counts: f.pop().expect("nonempty table vector"),
    }
}

/// Jet order pairs (i, j) with i + j <= max_order, lexicographic.
fn jet_pairs(max_order: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 0..=max_order {
        for j in 0..=(max_order - i) {
            out.push((i, j));
        }
    }
    out
}

/// Position of (i, j) in [`jet_pairs`] order.
fn jet_index(max_order: u32, i: u32, j: u32) -> usize {
    debug_assert!(i + j <= max_order);
    let i = i as usize;
    let m = max_order as usize;
    i * (m + 1) - i * i.saturating_sub(1) / 2 + j as usize
}

/// Power sums sum over structures of hairpins^i pairs^j, all i + j <= order.
#[derive(Debug, Clone)]
pub struct PowerSums {
    pub n: u64,
    max_order: u32,
    sums: Vec<BigInt>,
}

impl PowerSums {
    pub fn max_order(&self) -> u32 {
        self.max_order
    }

    pub fn get(&self, i: u32, j: u32) -> &BigInt {
        assert!(i + j <= self.max_order, "power sum order out of range");
        &self.sums[jet_index(self.max_order, i, j)]
    }

    /// The (0, 0) sum, i.e. the number of structures.
    pub fn total(&self) -> &BigInt {
        self.get(0, 0)
    }
}

/// Accumulate the jet product of a and b into acc.
///
/// Jets are the values of (x d/dx)^i (z d/dz)^j at x = z = 1; both operators
/// are derivations, so the product follows a two-index Leibniz rule with
/// binomial weights.
fn jet_mul_add(
    acc: &mut [BigInt],
    a: &[BigInt],
    b: &[BigInt],
    pairs: &[(u32, u32)],
    max_order: u32,
    binom: &[Vec<u32>],
) {
    for (ia, &(i1, j1)) in pairs.iter().enumerate() {
        if a[ia].is_zero() {
            continue;
        }
        for (ib, &(i2, j2)) in pairs.iter().enumerate() {
            if i1 + i2 + j1 + j2 > max_order {
                continue;
            }
            if b[ib].is_zero() {
                continue;
            }
            let w = binom[(i1 + i2) as usize][i1 as usize] * binom[(j1 + j2) as usize][j1 as usize];
            let mut t = &a[ia] * &b[ib];
            if w != 1 {
                t *= w;
            }
            acc[jet_index(max_order, i1 + i2, j1 + j2)] += t;
        }
    }
}

fn pascal(rows: u32) -> Vec<Vec<u32>> {
    let mut t: Vec<Vec<u32>> = vec![vec![1]];
    for r in 1..=rows as usize {
        let prev = &t[r - 1];
        let mut row = vec![1u32; r + 1];
        for k in 1..r {
            row[k] = prev[k - 1] + prev[k];
        }
        t.push(row);
    }
    t
}

/// Power sums for every size 0..=n_max, carried by the grammar recurrence on
/// jets. Cost is O(n_max^2) big-integer jet products; sizes in the high
/// hundreds are practical.
pub fn power_sums_through(n_max: u64, max_order: u32) -> Vec<PowerSums> {
    let n_max = n_max as usize;
    let pairs = jet_pairs(max_order);
    let len = pairs.len();
    let binom = pascal(2 * max_order);
    let one_jet = |at: (u32, u32)| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); len];
        v[jet_index(max_order, at.0, at.1)] = BigInt::one();
        v
    };

    // jet of the mark z alone: (z d/dz)^j z = z for all j, so the value is 1
    // whenever i = 0 and 0 otherwise; same for x with the roles swapped
    let z_jet: Vec<BigInt> = pairs
        .iter()
        .map(|&(i, _)| if i == 0 { BigInt::one() } else { BigInt::zero() })
        .collect();
    let x_jet: Vec<BigInt> = pairs
        .iter()
        .map(|&(_, j)| if j == 0 { BigInt::one() } else { BigInt::zero() })
        .collect();

    let mut f: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    // h[m] = jet of z * (f_m - 1 + x), the enclosed-interior factor
    let mut h: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        let mut cur = if m == 0 {
            one_jet((0, 0))
        } else {
            f[m - 1].clone()
        };
        if m >= 3 {
            for k in 1..=(m - 2) {
                let (left, interior) = (&f[k - 1], &h[m - 1 - k]);
                jet_mul_add(&mut cur, left, interior, &pairs, max_order, &binom);
            }
        }
        let mut adjusted = cur.clone();
        adjusted[0] -= BigInt::one();
        for (idx, v) in x_jet.iter().enumerate() {
            adjusted[idx] += v;
        }
        let mut hm = vec![BigInt::zero(); len];
        jet_mul_add(&mut hm, &z_jet, &adjusted, &pairs, max_order, &binom);
        f.push(cur);
        h.push(hm);
    }
    f.into_iter()
        .enumerate()
        .map(|(n, sums)| PowerSums {
            n: n as u64,
            max_order,
            sums,
        })
        .collect()
}

/// Exact raw and central moments of (hairpins, pairs) under the uniform
/// distribution on structures of one size.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentTable {
    pub n: u64,
    pub max_order: u32,
    raw: Vec<Rat>,
    central: Vec<Rat>,
}

impl MomentTable {
    fn from_raw(n: u64, max_order: u32, raw: Vec<Rat>) -> Self {
        let mx = raw[jet_index(max_order, 1, 0)].clone();
        let mz = raw[jet_index(max_order, 0, 1)].clone();
        let mut central = vec![Rat::zero(); raw.len()];
        for (idx, &(i, j)) in jet_pairs(max_order).iter().enumerate() {
            let mut acc = Rat::zero();
            for a in 0..=i {
                for b in 0..=j {
                    let w = binom_rat(&rat_int(i as i64), a)
                        * binom_rat(&rat_int(j as i64), b)
                        * pow_rat(&-mx.clone(), i - a)
                        * pow_rat(&-mz.clone(), j - b)
                        * &raw[jet_index(max_order, a, b)];
                    acc += w;
                }
            }
            central[idx] = acc;
        }
        MomentTable {
            n,
            max_order,
            raw,
            central,
        }
    }

    pub fn from_power_sums(s: &PowerSums) -> Self {
        let total = Rat::from_integer(s.total().clone());
        let raw = s
            .sums
            .iter()
            .map(|v| Rat::from_integer(v.clone()) / &total)
            .collect();
        Self::from_raw(s.n, s.max_order, raw)
    }

    pub fn from_joint(j: &JointCounts, max_order: u32) -> Self {
        let total = Rat::from_integer(j.total());
        let raw = jet_pairs(max_order)
            .iter()
            .map(|&(a, b)| Rat::from_integer(j.power_sum(a, b)) / &total)
            .collect();
        Self::from_raw(j.n, max_order, raw)
    }

    /// Raw moment E[hairpins^i pairs^j].
    pub fn raw(&self, i: u32, j: u32) -> &Rat {
        assert!(i + j <= self.max_order, "moment order out of range");
        &self.raw[jet_index(self.max_order, i, j)]
    }

    /// Central moment E[(hairpins - mean)^i (pairs - mean)^j].
    pub fn central(&self, i: u32, j: u32) -> &Rat {
        assert!(i + j <= self.max_order, "moment order out of range");
        &self.central[jet_index(self.max_order, i, j)]
    }

    pub fn mean_hairpins(&self) -> &Rat {
        self.raw(1, 0)
    }

    pub fn mean_pairs(&self) -> &Rat {
        self.raw(0, 1)
    }

    pub fn var_hairpins(&self) -> &Rat {
        self.central(2, 0)
    }

    pub fn var_pairs(&self) -> &Rat {
        self.central(0, 2)
    }

    pub fn covariance(&self) -> &Rat {
        self.central(1, 1)
    }

    /// Squared correlation, exact. Errors when either variance vanishes.
    pub fn correlation_squared(&self) -> Result<Rat> {
        let vx = self.var_hairpins();
        let vz = self.var_pairs();
        if vx.is_zero() || vz.is_zero() {
            return Err(Error::DegenerateVariance { n: self.n });
        }
        let c = self.covariance();
        Ok(c * c / (vx * vz))
    }

    /// Correlation as a decimal: sign(cov) * sqrt(corr^2).
    pub fn correlation_dec(&self, scale: u32) -> Result<Dec> {
        let c2 = self.correlation_squared()?;
        let r = Dec::from_rat(&c2, scale).sqrt();
        Ok(if self.covariance().is_negative() { r.neg() } else { r })
    }

    /// Central moment scaled by sigma_h^i sigma_p^j, as a decimal.
    pub fn scaled_central_dec(&self, i: u32, j: u32, scale: u32) -> Result<Dec> {
        let vx = self.var_hairpins();
        let vz = self.var_pairs();
        if (i > 0 && vx.is_zero()) || (j > 0 && vz.is_zero()) {
            return Err(Error::DegenerateVariance { n: self.n });
        }
        let num = Dec::from_rat(self.central(i, j), scale);
        let sx = Dec::from_rat(vx, scale).sqrt().powi(i as u64);
        let sz = Dec::from_rat(vz, scale).sqrt().powi(j as u64);
        Ok(num.div(&sx.mul(&sz)))
    }
}

fn pow_rat(r: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

/// Moment table for one size, via the jet recurrence.
pub fn moment_table(n: u64, max_order: u32) -> MomentTable {
    let sums = power_sums_through(n, max_order);
    MomentTable::from_power_sums(sums.last().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat;

    #[test]
    fn counts_match_known_values() {
        let a = count_sequence(10);
        let expect: Vec<i64> = vec![1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423];
        assert_eq!(a, expect.into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(count(10), BigInt::from(423));
    }

    #[test]
    fn enumeration_matches_counts() {
        for n in 0..=12u64 {
            let structures = enumerate_structures(n).unwrap();
            assert_eq!(BigInt::from(structures.len()), count(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            enumerate_structures(MAX_ENUM_N + 1),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn enumerated_structures_are_valid_and_distinct() {
        let structures = enumerate_structures(9).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for s in &structures {
            assert!(s.check().is_none(), "invalid structure {:?}", s);
            assert!(seen.insert(s.arcs().to_vec()), "duplicate {:?}", s);
        }
    }

    #[test]
    fn hairpins_by_hand_for_small_cases() {
        // nested pair on 5 positions: only the inner arc is a hairpin
        let s = Structure::new(5, vec![(0, 4), (1, 3)]).unwrap();
        assert_eq!(s.num_pairs(), 2);
        assert_eq!(s.num_hairpins(), 1);
        assert_eq!(s.dot_bracket(), "((.))");
        // two arcs side by side: both are hairpins
        let s = Structure::new(6, vec![(0, 2), (3, 5)]).unwrap();
        assert_eq!(s.num_hairpins(), 2);
        // crossing arcs are rejected
        assert!(Structure::new(6, vec![(0, 3), (2, 5)]).is_err());
        // arc span below 2 is rejected
        assert!(Structure::new(4, vec![(0, 1)]).is_err());
    }

    #[test]
    fn joint_histogram_matches_enumeration() {
        for n in 0..=10u64 {
            let by_dp = joint_counts(n);
            let by_enum = JointCounts::from_structures(n, &enumerate_structures(n).unwrap());
            assert_eq!(by_dp, by_enum, "n = {n}");
        }
    }

    #[test]
    fn small_joint_tables_by_hand() {
        // n = 3: empty structure, or the single arc (0, 2) which is a hairpin
        let j = joint_counts(3);
        assert_eq!(j.get(0, 0), BigInt::one());
        assert_eq!(j.get(1, 1), BigInt::one());
        assert_eq!(j.total(), BigInt::from(2));
        // n = 5: 1 empty, 6 single arcs (all hairpins), 1 nested pair
        let j = joint_counts(5);
        assert_eq!(j.get(0, 0), BigInt::one());
        assert_eq!(j.get(1, 1), BigInt::from(6));
        assert_eq!(j.get(1, 2), BigInt::one());
        assert_eq!(j.total(), BigInt::from(8));
    }

    #[test]
    fn power_sums_match_joint_tables() {
        let sums = power_sums_through(12, 4);
        for n in 0..=12u64 {
            let j = joint_counts(n);
            let s = &sums[n as usize];
            for i in 0..=4u32 {
                for jj in 0..=(4 - i) {
                    assert_eq!(
                        s.get(i, jj),
                        &j.power_sum(i, jj),
                        "n = {n}, order ({i}, {jj})"
                    );
                }
            }
        }
    }

    #[test]
    fn moment_table_n5_by_hand() {
        let t = moment_table(5, 2);
        assert_eq!(t.mean_hairpins(), &rat(7, 8));
        assert_eq!(t.mean_pairs(), &rat(1, 1));
        assert_eq!(t.var_hairpins(), &rat(7, 64));
        assert_eq!(t.var_pairs(), &rat(1, 4));
        assert_eq!(t.covariance(), &rat(1, 8));
        assert_eq!(t.correlation_squared().unwrap(), rat(4, 7));
    }

    #[test]
    fn moment_table_n3_is_fully_correlated() {
        // on 3 positions hairpins = pairs for every structure
        let t = moment_table(3, 2);
        assert_eq!(t.mean_hairpins(), &rat(1, 2));
        assert_eq!(t.mean_pairs(), &rat(1, 2));
        assert_eq!(t.covariance(), &rat(1, 4));
        assert_eq!(t.correlation_squared().unwrap(), rat(1, 1));
    }

    #[test]
    fn degenerate_sizes_have_no_correlation() {
        for n in [0u64, 1, 2] {
            let t = moment_table(n, 2);
            assert!(matches!(
                t.correlation_squared(),
                Err(Error::DegenerateVariance { .. })
            ));
        }
    }

    #[test]
    fn moment_paths_agree() {
        for n in [5u64, 8, 11] {
            let via_joint = MomentTable::from_joint(&joint_counts(n), 4);
            let via_jets = moment_table(n, 4);
            assert_eq!(via_joint, via_jets, "n = {n}");
        }
    }

    #[test]
    fn central_moments_recenter() {
        let t = moment_table(9, 3);
        // first central moments vanish by construction
        assert!(t.central(1, 0).is_zero());
        assert!(t.central(0, 1).is_zero());
        // third central moment spot-checked against the direct sum
        let structures = enumerate_structures(9).unwrap();
        let total = rat_int(structures.len() as i64);
        let mx = t.mean_hairpins().clone();
        let mut third = Rat::zero();
        for s in &structures {
            let d = rat_int(s.num_hairpins() as i64) - &mx;
            third += &d * &d * &d;
        }
        third /= total;
        assert_eq!(t.central(3, 0), &third);
    }

    #[test]
    fn scaled_moments_normalize() {
        let t = moment_table(30, 2);
        let one = t.scaled_central_dec(2, 0, 32).unwrap();
        // scaled second moment is exactly 1 up to decimal rounding
        let err = one.sub(&Dec::one(32)).abs();
        assert!(err.le(&Dec::from_rat(&rat(1, 1_000_000_000), 32)));
    }
}
