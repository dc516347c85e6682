//! Closed forms and polynomial-time counts for linear extension diameters.
//!
//! For a 2-dimensional poset `P`, `led(D_P)` is a quarter of the number of
//! ordered pairs of antichains `(A, B)` whose symmetric difference induces a
//! disconnected subposet. That count is `α − β − γ − δ`:
//!
//! * `α = a(P)²`, all ordered pairs;
//! * `β = a(P)`, pairs with `A = B`;
//! * `γ`, pairs with `|A △ B| = 1`;
//! * `δ`, pairs with `|A △ B| > 1` and `P[A △ B]` connected.
//!
//! Every count runs along a non-separating linear extension σ = x_1 … x_n,
//! where adding a σ-later element incomparable to the σ-maximum of an
//! antichain always yields an antichain again.
//!
//! # Counting δ
//!
//! A connected `D = A △ B` of height 2 splits into `Max(D)` and `Min(D)`,
//! and the pair is either `(Max(D) ∪ I, Min(D) ∪ I)` or its swap, so δ is
//! twice the number of configurations `(D, I)`. `I` splits into a part
//! σ-before all of `D` and a part σ-after it. Configurations are grouped by
//! `x_k = max_σ Min(D)` and `x_ℓ = max_σ Max(D)` with the σ-after part of
//! `I` empty; the σ-after part is then weighted in by `a(P^right_{k,ℓ})`.
//!
//! * `δ₁(k, ℓ)`: `x_ℓ` is the only maximum. Sum over `x_i = min_σ Min(D)` of
//!   `a(P_{i,k,ℓ}) · a(P^left_{i,ℓ})`.
//! * `δ₂(k, ℓ)`: several maxima, `x_ℓ'` the σ-second-largest. The recursion
//!   is anchored at `x_k'`, the σ-largest minimum below `x_ℓ'`. Every minimum
//!   σ-after `x_k'` and σ-before `x_ℓ'` lies below `x_ℓ'` (σ is
//!   non-separating), so the minima only `x_ℓ` covers are exactly the
//!   minima σ-after `x_ℓ'`. Removing `x_ℓ` and those minima leaves a
//!   configuration counted in `δ(k', ℓ')`. Going back, `x_k` (if `k ≠ k'`)
//!   plus an antichain `Y` is added, all σ-after `x_ℓ'`, below `x_ℓ`, and
//!   incomparable to `x_k'`. The number of ways is counted by one antichain
//!   DP per `(k', ℓ', ℓ)`, which keeps the whole computation at O(n⁵).
//!
//! Summing the inner term over every `k'` below both `x_ℓ'` and `x_ℓ`
//! instead counts a configuration once per minimum shared by `x_ℓ'` and
//! `x_ℓ`, which overshoots whenever they share two or more minima.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{ElementId, Induced, Poset};
use crate::realizer::{is_non_separating, realizer, LinearExtension};
use crate::revlex::BigCount;
use crate::set::ElementSet;

/// `led(B_n) = 2^{2n−2} − (n+1)·2^{n−2}`; zero for `n ≤ 1`.
pub fn led_boolean(n: u32) -> BigCount {
    if n < 2 {
        return BigCount::zero();
    }
    // 2^{n-2} · (2^n − n − 1)
    let pow_n = BigUint::one() << n;
    (pow_n - BigUint::from(n) - 1u32) << (n - 2)
}

/// Closed form for the downset lattice of a disjoint union of chains with
/// the given lengths.
pub fn led_chain_union(lengths: &[usize]) -> BigCount {
    let factors: Vec<BigUint> = lengths.iter().map(|&l| BigUint::from(l) + 1u32).collect();
    let all: BigUint = factors.iter().product();
    let one_chain: BigUint = (0..lengths.len())
        .map(|k| {
            let others: BigUint =
                factors.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, f)| f).product();
            &factors[k] * BigUint::from(lengths[k]) * others
        })
        .sum();
    (&all * &all - one_chain - &all) >> 2
}

/// The relation of `P` re-indexed by σ-position.
struct Frame {
    n: usize,
    up: Vec<ElementSet>,
    inc: Vec<ElementSet>,
}

impl Frame {
    fn new(p: &Poset, sigma: &LinearExtension) -> Result<Self> {
        if !is_non_separating(p, sigma)? {
            return Err(Error::SeparatingExtension);
        }
        let n = p.len();
        let to_pos = |s: &ElementSet| ElementSet::from_indices(n, s.iter().map(|x| sigma.position(ElementId::new(x))));
        let up = (0..n).map(|i| to_pos(p.above(sigma.at(i)))).collect();
        let inc = (0..n).map(|i| to_pos(&p.incomparable_to(sigma.at(i)))).collect();
        Ok(Self { n, up, inc })
    }

    #[inline]
    fn lt(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    fn inc(&self, i: usize, j: usize) -> bool {
        self.inc[i].contains(j)
    }

    /// Antichain counts ending at each member of `members` (σ-increasing),
    /// and the total including the empty antichain.
    fn antichain_dp(&self, members: &[usize]) -> (Vec<BigCount>, BigCount) {
        let mut ending: Vec<BigCount> = Vec::with_capacity(members.len());
        let mut total = BigCount::one();
        for (t, &x) in members.iter().enumerate() {
            let mut v = BigCount::one();
            for (s, &y) in members[..t].iter().enumerate() {
                if self.inc(x, y) {
                    v += &ending[s];
                }
            }
            total += &v;
            ending.push(v);
        }
        (ending, total)
    }

    fn count(&self, members: &[usize]) -> BigCount {
        self.antichain_dp(members).1
    }

    /// `P_{i,k,ℓ}`: positions strictly between `i` and `k`, below `ℓ`,
    /// incomparable to both `i` and `k`.
    fn middle(&self, i: usize, k: usize, l: usize) -> Vec<usize> {
        if i >= k || !self.inc(i, k) {
            return Vec::new();
        }
        (i + 1..k).filter(|&j| self.lt(j, l) && self.inc(j, i) && self.inc(j, k)).collect()
    }

    /// `P^left_{i,ℓ}`: positions before `i` incomparable to `ℓ`.
    fn left(&self, i: usize, l: usize) -> Vec<usize> {
        (0..i).filter(|&x| self.inc(x, l)).collect()
    }

    /// `P^right_{k,ℓ}`: positions after `ℓ` incomparable to `k`.
    fn right(&self, k: usize, l: usize) -> Vec<usize> {
        (l + 1..self.n).filter(|&x| self.inc(x, k)).collect()
    }
}

/// Antichain counts along σ: `a(x_i)` antichains have `x_i` as σ-maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntichainCountTable {
    pub sigma: LinearExtension,
    /// `a(x_i)` indexed by σ-position.
    #[serde(serialize_with = "decimal_vec")]
    pub per_element: Vec<BigCount>,
    /// `a(P) = 1 + Σ a(x_i)`.
    #[serde(serialize_with = "decimal")]
    pub total: BigCount,
}

impl AntichainCountTable {
    pub fn of(&self, x: ElementId) -> &BigCount {
        &self.per_element[self.sigma.position(x)]
    }
}

/// `a(x_i) = 1 + Σ_{j<i, x_j ∥ x_i} a(x_j)` and `a(P) = 1 + Σ_i a(x_i)`.
pub fn count_antichains(p: &Poset, sigma: &LinearExtension) -> Result<AntichainCountTable> {
    let frame = Frame::new(p, sigma)?;
    let all: Vec<usize> = (0..frame.n).collect();
    let (per_element, total) = frame.antichain_dp(&all);
    Ok(AntichainCountTable { sigma: sigma.clone(), per_element, total })
}

/// `s_r(x_i)`: antichains of size `r` whose σ-maximum is `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeVector {
    /// `s[i][r - 1]` for σ-position `i`, `r` in `1..=n`.
    s: Vec<Vec<BigCount>>,
}

impl SizeVector {
    /// `s_r(x_i)` for σ-position `i`; zero for `r = 0` or `r > n`.
    pub fn get(&self, i: usize, r: usize) -> BigCount {
        match r {
            0 => BigCount::zero(),
            r => self.s[i].get(r - 1).cloned().unwrap_or_default(),
        }
    }

    /// `Σ_r r · Σ_i s_r(x_i)`: the number of pairs `(A, x)` with `x ∈ A`.
    pub fn incidences(&self) -> BigCount {
        self.s
            .iter()
            .flat_map(|row| row.iter().enumerate().map(|(r, v)| v * BigUint::from(r + 1)))
            .sum()
    }
}

/// `s_1(x_i) = 1` and `s_r(x_i) = Σ_{j<i, x_j ∥ x_i} s_{r−1}(x_j)`.
pub fn size_vectors(p: &Poset, sigma: &LinearExtension) -> Result<SizeVector> {
    let frame = Frame::new(p, sigma)?;
    Ok(size_vectors_in(&frame))
}

fn size_vectors_in(frame: &Frame) -> SizeVector {
    let n = frame.n;
    let mut s: Vec<Vec<BigCount>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![BigCount::zero(); n];
        row[0] = BigCount::one();
        for (j, prev) in s.iter().enumerate() {
            if !frame.inc(i, j) {
                continue;
            }
            for r in 1..n {
                if !prev[r - 1].is_zero() {
                    row[r] += &prev[r - 1];
                }
            }
        }
        s.push(row);
    }
    SizeVector { s }
}

/// `γ`: ordered pairs of antichains differing in exactly one element, twice
/// the number of pairs `(A, A − x)`.
pub fn gamma(p: &Poset, sigma: &LinearExtension) -> Result<BigCount> {
    Ok(size_vectors(p, sigma)?.incidences() * 2u32)
}

/// The three restricted subposets for σ-positions `i`, `k`, `ℓ` (0-based).
#[derive(Clone, Debug)]
pub struct RestrictedSubposets {
    /// `P_{i,k,ℓ}`.
    pub middle: Induced,
    /// `P^left_{i,ℓ}`.
    pub left: Induced,
    /// `P^right_{k,ℓ}`.
    pub right: Induced,
}

pub fn restricted_subposets(
    p: &Poset,
    sigma: &LinearExtension,
    i: usize,
    k: usize,
    l: usize,
) -> Result<RestrictedSubposets> {
    let n = p.len();
    for pos in [i, k, l] {
        if pos >= n {
            return Err(Error::IndexOutOfRange { index: pos + 1, n });
        }
    }
    let frame = Frame::new(p, sigma)?;
    let induce = |positions: Vec<usize>| {
        p.induced(&ElementSet::from_indices(n, positions.into_iter().map(|pos| sigma.at(pos).index())))
    };
    // `middle` as the σ-interval (x_i, x_k) filtered by the conditions; when
    // {x_i, x_k} is not an antichain the definition still applies.
    let middle: Vec<usize> = (i + 1..k)
        .filter(|&j| frame.lt(j, l) && frame.inc(j, i) && frame.inc(j, k) && (i == k || frame.inc(i, k)))
        .collect();
    Ok(RestrictedSubposets { middle: induce(middle)?, left: induce(frame.left(i, l))?, right: induce(frame.right(k, l))? })
}

/// δ₁ and δ₂ for every pair of σ-positions `(k, ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTable {
    n: usize,
    d1: Vec<BigCount>,
    d2: Vec<BigCount>,
}

impl DeltaTable {
    pub fn delta1(&self, k: usize, l: usize) -> &BigCount {
        &self.d1[k * self.n + l]
    }

    pub fn delta2(&self, k: usize, l: usize) -> &BigCount {
        &self.d2[k * self.n + l]
    }

    /// Nonzero entries as `(k, ℓ, value)` with 1-based σ-positions.
    fn nonzero(values: &[BigCount], n: usize) -> Vec<(usize, usize, String)> {
        values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| (idx / n + 1, idx % n + 1, v.to_string()))
            .collect()
    }
}

pub fn delta_table(p: &Poset, sigma: &LinearExtension) -> Result<DeltaTable> {
    Ok(delta_table_in(&Frame::new(p, sigma)?))
}

pub fn delta1(p: &Poset, sigma: &LinearExtension, k: usize, l: usize) -> Result<BigCount> {
    check_positions(p, k, l)?;
    Ok(delta_table(p, sigma)?.delta1(k, l).clone())
}

pub fn delta2(p: &Poset, sigma: &LinearExtension, k: usize, l: usize) -> Result<BigCount> {
    check_positions(p, k, l)?;
    Ok(delta_table(p, sigma)?.delta2(k, l).clone())
}

fn check_positions(p: &Poset, k: usize, l: usize) -> Result<()> {
    match [k, l].into_iter().find(|&x| x >= p.len()) {
        Some(bad) => Err(Error::IndexOutOfRange { index: bad + 1, n: p.len() }),
        None => Ok(()),
    }
}

fn delta_table_in(frame: &Frame) -> DeltaTable {
    let n = frame.n;
    let idx = |k: usize, l: usize| k * n + l;

    let left: Vec<BigCount> =
        (0..n * n).map(|t| frame.count(&frame.left(t / n, t % n))).collect();

    let mut d1 = vec![BigCount::zero(); n * n];
    for l in 0..n {
        for k in 0..l {
            if !frame.lt(k, l) {
                continue;
            }
            let mut sum = BigCount::zero();
            for i in 0..=k {
                if (i == k || frame.inc(i, k)) && frame.lt(i, l) {
                    sum += frame.count(&frame.middle(i, k, l)) * &left[idx(i, l)];
                }
            }
            d1[idx(k, l)] = sum;
        }
    }

    let mut d2 = vec![BigCount::zero(); n * n];
    for l in 0..n {
        for lp in 0..l {
            if !frame.inc(lp, l) {
                continue;
            }
            for kp in 0..lp {
                if !(frame.lt(kp, lp) && frame.lt(kp, l)) {
                    continue;
                }
                let below = &d1[idx(kp, lp)] + &d2[idx(kp, lp)];
                if below.is_zero() {
                    continue;
                }
                // k = k': x_ℓ added above the existing σ-last minimum.
                d2[idx(kp, l)] += &below;
                // k > ℓ': x_k and Y added σ-after x_ℓ'.
                let tail: Vec<usize> =
                    (lp + 1..l).filter(|&j| frame.lt(j, l) && frame.inc(j, kp)).collect();
                let (ending, _) = frame.antichain_dp(&tail);
                for (&k, ways) in tail.iter().zip(&ending) {
                    d2[idx(k, l)] += &below * ways;
                }
            }
        }
    }
    DeltaTable { n, d1, d2 }
}

/// All quantities of the polynomial-time computation of `led(D_P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedBreakdown {
    pub sigma: LinearExtension,
    #[serde(serialize_with = "decimal")]
    pub alpha: BigCount,
    #[serde(serialize_with = "decimal")]
    pub beta: BigCount,
    #[serde(serialize_with = "decimal")]
    pub gamma: BigCount,
    #[serde(serialize_with = "decimal")]
    pub delta: BigCount,
    #[serde(skip)]
    pub deltas: DeltaTable,
    #[serde(serialize_with = "decimal")]
    pub led: BigCount,
}

impl LedBreakdown {
    /// Nonzero `δ₁(k, ℓ)` as `(k, ℓ, value)`, 1-based σ-positions.
    pub fn delta1_entries(&self) -> Vec<(usize, usize, String)> {
        DeltaTable::nonzero(&self.deltas.d1, self.deltas.n)
    }

    /// Nonzero `δ₂(k, ℓ)` as `(k, ℓ, value)`, 1-based σ-positions.
    pub fn delta2_entries(&self) -> Vec<(usize, usize, String)> {
        DeltaTable::nonzero(&self.deltas.d2, self.deltas.n)
    }
}

fn decimal_vec<S: serde::Serializer>(v: &[BigCount], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_str_radix(10)))
}

fn decimal<S: serde::Serializer>(v: &BigCount, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// `led(D_P)` for a 2-dimensional `P`, using the first member of its realizer.
pub fn led_downset(p: &Poset) -> Result<LedBreakdown> {
    let r = realizer(p)?;
    led_downset_with(p, &r.sigma)
}

/// `led(D_P)` computed along a given non-separating linear extension.
pub fn led_downset_with(p: &Poset, sigma: &LinearExtension) -> Result<LedBreakdown> {
    let frame = Frame::new(p, sigma)?;
    let n = frame.n;
    let all: Vec<usize> = (0..n).collect();
    let a_total = frame.count(&all);

    let alpha = &a_total * &a_total;
    let beta = a_total.clone();
    let gamma = size_vectors_in(&frame).incidences() * 2u32;

    let deltas = delta_table_in(&frame);
    let mut configurations = BigCount::zero();
    for k in 0..n {
        for l in 0..n {
            let t = deltas.delta1(k, l) + deltas.delta2(k, l);
            if !t.is_zero() {
                configurations += t * frame.count(&frame.right(k, l));
            }
        }
    }
    let delta = configurations * 2u32;

    let removed = &beta + &gamma + &delta;
    if removed > alpha {
        return Err(Error::InvariantViolated("α < β + γ + δ".into()));
    }
    let disconnected = &alpha - removed;
    if !(&disconnected % 4u32).is_zero() {
        return Err(Error::InvariantViolated("α − β − γ − δ is not divisible by 4".into()));
    }
    let led = disconnected >> 2;
    Ok(LedBreakdown { sigma: sigma.clone(), alpha, beta, gamma, delta, deltas, led })
}

/// A quarter of the number of ordered antichain pairs whose symmetric
/// difference induces at least two components, by enumeration.
///
/// An upper bound on `led(D_P)` for every poset, attained when `P` is
/// 2-dimensional.
pub fn led_upper_bound(p: &Poset, cap: usize) -> Result<BigCount> {
    let antichains = p.enumerate_antichains(cap)?;
    let mut count: u128 = 0;
    for a in &antichains {
        for b in &antichains {
            let d = a.set().symmetric_difference(b.set());
            if d.len() >= 2 && p.components_of(&d).len() >= 2 {
                count += 1;
            }
        }
    }
    if count % 4 != 0 {
        return Err(Error::InvariantViolated("disconnected pair count is not divisible by 4".into()));
    }
    Ok(BigCount::from(count / 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::poset::DEFAULT_CAP;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn boolean_formula_values() {
        let got: Vec<BigCount> = (1..=5).map(led_boolean).collect();
        assert_eq!(got, [0u64, 1, 8, 44, 208].map(big));
        assert_eq!(led_boolean(0), big(0));
    }

    #[test]
    fn chain_union_formula() {
        assert_eq!(led_chain_union(&[5]), big(0));
        assert_eq!(led_chain_union(&[1, 1]), big(1));
        for n in 1..=10u32 {
            assert_eq!(led_chain_union(&vec![1; n as usize]), led_boolean(n));
        }
    }

    #[test]
    fn antichain_counts_closed_forms() {
        for n in 0..=10 {
            let a = Poset::antichain(n);
            let r = realizer(&a).unwrap();
            assert_eq!(count_antichains(&a, &r.sigma).unwrap().total, big(1 << n));
            let c = Poset::chain(n);
            let r = realizer(&c).unwrap();
            assert_eq!(count_antichains(&c, &r.sigma).unwrap().total, big(n as u64 + 1));
        }
    }

    #[test]
    fn separating_extension_rejected() {
        let p = Poset::from_one_based(3, &[(1, 2)]).unwrap();
        let pi = LinearExtension::from_one_based(&p, &[1, 3, 2]).unwrap();
        assert_eq!(count_antichains(&p, &pi), Err(Error::SeparatingExtension));
        assert_eq!(size_vectors(&p, &pi), Err(Error::SeparatingExtension));
        assert_eq!(gamma(&p, &pi), Err(Error::SeparatingExtension));
        assert_eq!(led_downset_with(&p, &pi), Err(Error::SeparatingExtension));
    }

    #[test]
    fn size_vector_examples() {
        let a3 = Poset::antichain(3);
        let sigma = realizer(&a3).unwrap().sigma;
        let s = size_vectors(&a3, &sigma).unwrap();
        assert_eq!(s.get(2, 2), big(2));
        assert_eq!(s.get(2, 3), big(1));
        for i in 0..3 {
            assert_eq!(s.get(i, 1), big(1));
        }

        let c = Poset::chain(4);
        let sigma = realizer(&c).unwrap().sigma;
        let s = size_vectors(&c, &sigma).unwrap();
        for i in 0..4 {
            for r in 2..=4 {
                assert_eq!(s.get(i, r), big(0));
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let sigma = |p: &Poset| realizer(p).unwrap().sigma;
        let a2 = Poset::antichain(2);
        assert_eq!(gamma(&a2, &sigma(&a2)).unwrap(), big(8));
        let c2 = Poset::chain(2);
        assert_eq!(gamma(&c2, &sigma(&c2)).unwrap(), big(4));
        let e = Poset::empty();
        assert_eq!(gamma(&e, &sigma(&e)).unwrap(), big(0));
    }

    #[test]
    fn restricted_subposet_examples() {
        let c2 = Poset::chain(2);
        let sigma = realizer(&c2).unwrap().sigma;
        let r = restricted_subposets(&c2, &sigma, 0, 0, 1).unwrap();
        assert!(r.middle.poset.is_empty() && r.left.poset.is_empty() && r.right.poset.is_empty());

        let a3 = Poset::antichain(3);
        let sigma = LinearExtension::from_one_based(&a3, &[1, 2, 3]).unwrap();
        let r = restricted_subposets(&a3, &sigma, 0, 0, 1).unwrap();
        assert_eq!(r.right.map, vec![ElementId::new(2)]);
        assert!(restricted_subposets(&a3, &sigma, 0, 3, 1).is_err());
    }

    #[test]
    fn delta_examples() {
        let c2 = Poset::chain(2);
        let sigma = realizer(&c2).unwrap().sigma;
        assert_eq!(delta1(&c2, &sigma, 0, 1).unwrap(), big(1));
        assert_eq!(delta2(&c2, &sigma, 0, 1).unwrap(), big(0));

        for n in 1..=6 {
            let a = Poset::antichain(n);
            let t = delta_table(&a, &realizer(&a).unwrap().sigma).unwrap();
            for k in 0..n {
                for l in 0..n {
                    assert!(t.delta1(k, l).is_zero() && t.delta2(k, l).is_zero());
                }
            }
        }

        let p = Poset::from_permutation(&[2, 0, 5, 3, 1, 4, 6]);
        let sigma = realizer(&p).unwrap().sigma;
        let t = delta_table(&p, &sigma).unwrap();
        for k in 0..p.len() {
            for l in 0..p.len() {
                if !p.less(sigma.at(k), sigma.at(l)) {
                    assert!(t.delta1(k, l).is_zero(), "δ₁({k},{l})");
                }
            }
        }
    }

    #[test]
    fn two_chain_breakdown() {
        let b = led_downset(&Poset::chain(2)).unwrap();
        assert_eq!((b.alpha, b.beta, b.gamma, b.delta, b.led), (big(9), big(3), big(4), big(2), big(0)));
    }

    #[test]
    fn antichain_matches_boolean_formula() {
        for n in 1..=10u32 {
            assert_eq!(led_downset(&Poset::antichain(n as usize)).unwrap().led, led_boolean(n));
        }
    }

    #[test]
    fn non_two_dimensional_is_rejected() {
        let c = generate::chevron();
        assert_eq!(led_downset(&c), Err(Error::NotTwoDimensional));
        assert!(led_upper_bound(&c, DEFAULT_CAP).is_ok());
    }

    #[test]
    fn upper_bound_is_tight_in_dimension_two() {
        for n in 0..=5 {
            for p in generate::all_posets(n) {
                assert_eq!(led_downset(&p).unwrap().led, led_upper_bound(&p, DEFAULT_CAP).unwrap());
            }
        }
    }
}
