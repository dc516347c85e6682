//! The σ-revlex order on downsets and the lattice extensions it induces.
//!
//! For a linear extension σ of `P`, downsets compare by the σ-largest element
//! of their symmetric difference: `S < T` iff that element lies in `T`. The
//! resulting linear extension `L_σ` of the downset lattice, paired with
//! `L_σ̄` for the complementary realizer member, is a diametral pair.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{Downset, Poset};
use crate::realizer::{realizer, LinearExtension};
use crate::set::ElementSet;

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Whether `s` precedes `t` in the σ-revlex order.
pub fn revlex_less(sigma: &LinearExtension, s: &ElementSet, t: &ElementSet) -> Result<bool> {
    match revlex_cmp(sigma, s, t) {
        Ordering::Equal => Err(Error::EqualSets),
        ord => Ok(ord == Ordering::Less),
    }
}

/// Total σ-revlex comparison; `Equal` only for equal sets.
pub fn revlex_cmp(sigma: &LinearExtension, s: &ElementSet, t: &ElementSet) -> Ordering {
    for &x in sigma.order().iter().rev() {
        match (s.contains(x.index()), t.contains(x.index())) {
            (false, true) => return Ordering::Less,
            (true, false) => return Ordering::Greater,
            _ => {}
        }
    }
    Ordering::Equal
}

/// A linear order on the downsets of a poset, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeExtension {
    order: Vec<Downset>,
    #[serde(skip)]
    index: HashMap<ElementSet, usize>,
}

impl LatticeExtension {
    /// Wraps an order without checking it against a poset; see
    /// [`LatticeExtension::validate`].
    pub fn from_order(order: Vec<Downset>) -> Self {
        let index = order.iter().enumerate().map(|(i, d)| (d.set().clone(), i)).collect();
        Self { order, index }
    }

    pub fn order(&self) -> &[Downset] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 0-based position of a downset.
    pub fn position(&self, d: &ElementSet) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Checks that this is a linear extension of the downset lattice of `p`:
    /// every downset exactly once, and inclusion respected.
    pub fn validate(&self, p: &Poset, cap: usize) -> Result<()> {
        let all = p.enumerate_downsets(cap)?;
        if all.len() != self.order.len() || self.index.len() != self.order.len() {
            return Err(Error::MismatchedGroundSets);
        }
        if all.iter().any(|d| self.position(d.set()).is_none()) {
            return Err(Error::MismatchedGroundSets);
        }
        // Inclusion is generated by covers S ⊂ S + x.
        for (pos, d) in self.order.iter().enumerate() {
            for x in 0..p.len() {
                if d.set().contains(x) || !p.below(crate::ElementId::new(x)).is_subset(d.set()) {
                    continue;
                }
                let mut bigger = d.set().clone();
                bigger.insert(x);
                if self.position(&bigger).is_none_or(|q| q < pos) {
                    return Err(Error::NotALinearExtension);
                }
            }
        }
        Ok(())
    }

    pub(crate) fn same_ground_set(&self, other: &Self) -> bool {
        self.len() == other.len() && self.order.iter().all(|d| other.index.contains_key(d.set()))
    }
}

/// `L_σ`: all downsets of `p` sorted by the σ-revlex comparator.
pub fn build_revlex_extension(p: &Poset, sigma: &LinearExtension, cap: usize) -> Result<LatticeExtension> {
    if sigma.len() != p.len() || p.relations().iter().any(|&(x, y)| !sigma.precedes(x, y)) {
        return Err(Error::NotALinearExtension);
    }
    let mut downsets = p.enumerate_downsets(cap)?;
    downsets.sort_by(|a, b| revlex_cmp(sigma, a.set(), b.set()));
    Ok(LatticeExtension::from_order(downsets))
}

/// Number of unordered pairs of downsets ordered oppositely.
pub fn reversal_distance(l1: &LatticeExtension, l2: &LatticeExtension) -> Result<BigCount> {
    if !l1.same_ground_set(l2) {
        return Err(Error::MismatchedGroundSets);
    }
    let mut seq: Vec<usize> = l1.order.iter().map(|d| l2.index[d.set()]).collect();
    Ok(BigCount::from(count_inversions(&mut seq)))
}

/// Inversions of `seq` by merge sort; sorts `seq` as a side effect.
fn count_inversions(seq: &mut [usize]) -> u64 {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = count_inversions(&mut seq[..mid]) + count_inversions(&mut seq[mid..]);
    let mut merged = Vec::with_capacity(n);
    let (mut i, mut j) = (0, mid);
    while i < mid && j < n {
        if seq[i] <= seq[j] {
            merged.push(seq[i]);
            i += 1;
        } else {
            merged.push(seq[j]);
            count += (mid - i) as u64;
            j += 1;
        }
    }
    merged.extend_from_slice(&seq[i..mid]);
    merged.extend_from_slice(&seq[j..]);
    seq.copy_from_slice(&merged);
    count
}

/// The diametral pair `(L_σ, L_σ̄)` for the realizer of a 2-dimensional `p`.
pub fn diametral_pair(p: &Poset, cap: usize) -> Result<(LatticeExtension, LatticeExtension)> {
    let r = realizer(p)?;
    Ok((build_revlex_extension(p, &r.sigma, cap)?, build_revlex_extension(p, &r.sigma_bar, cap)?))
}

/// A downset placed at its 1-based ranks in two lattice extensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominancePoint {
    pub downset: Downset,
    pub x: usize,
    pub y: usize,
}

/// Each downset mapped to `(rank in l1, rank in l2)`, listed in `l1` order.
pub fn dominance_coordinates(l1: &LatticeExtension, l2: &LatticeExtension) -> Result<Vec<DominancePoint>> {
    if !l1.same_ground_set(l2) {
        return Err(Error::MismatchedGroundSets);
    }
    Ok(l1
        .order
        .iter()
        .enumerate()
        .map(|(i, d)| DominancePoint { downset: d.clone(), x: i + 1, y: l2.index[d.set()] + 1 })
        .collect())
}
