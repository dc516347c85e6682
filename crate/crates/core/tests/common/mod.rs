#![allow(dead_code)]

use posetkit::{ElementSet, Poset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random 2-dimensional poset: the intersection of a random permutation
/// with the identity, under a random relabeling.
pub fn random_two_dim(rng: &mut StdRng, n: usize) -> Poset {
    let mut tau: Vec<usize> = (0..n).collect();
    tau.shuffle(rng);
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    Poset::from_permutation(&tau).relabel(&relabel)
}

pub fn random_size(rng: &mut StdRng, lo: usize, hi: usize) -> usize {
    rng.random_range(lo..=hi)
}

/// Every subset of the ground set, as element sets. `n` must be small.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0u64..1 << n).map(move |m| ElementSet::from_indices(n, (0..n).filter(|&i| m >> i & 1 == 1)))
}

/// Antichains by filtering all subsets.
pub fn brute_antichains(p: &Poset) -> Vec<ElementSet> {
    let n = p.len();
    all_subsets(n)
        .filter(|s| {
            let v: Vec<usize> = s.iter().collect();
            v.iter().all(|&a| v.iter().all(|&b| a == b || p.incomparable_idx(a, b)))
        })
        .collect()
}

/// Whether `P[s]` is connected, by flood fill over comparabilities.
pub fn connected(p: &Poset, s: &ElementSet) -> bool {
    let v: Vec<usize> = s.iter().collect();
    let Some(&start) = v.first() else { return true };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        for &b in &v {
            if !seen.contains(&b) && p.comparable_idx(a, b) {
                seen.push(b);
                stack.push(b);
            }
        }
    }
    seen.len() == v.len()
}
