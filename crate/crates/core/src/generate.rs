//! Named posets and exhaustive generation of small posets.

use std::collections::BTreeSet;

use crate::poset::{Poset, DEFAULT_CAP};

/// The 6-element chevron: the chains `1 < 4 < 5` and `2 < 3 < 5` plus an
/// element `6` above `1` and `2`. It has 7 incomparable pairs, dimension 3,
/// and its linear extension graph has diameter 6.
pub fn chevron() -> Poset {
    Poset::from_one_based(6, &[(1, 4), (4, 5), (2, 3), (3, 5), (1, 6), (2, 6)])
        .expect("chevron relations are acyclic")
}

/// The Boolean lattice `B_n` as a poset: element `k` is the subset of
/// `{1..n}` whose bit pattern is `k`, ordered by strict inclusion.
pub fn boolean_lattice(n: usize) -> Poset {
    assert!(n < 16, "B_{n} is too large to materialize");
    let m = 1usize << n;
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a != b && a & b == a {
                pairs.push((a + 1, b + 1));
            }
        }
    }
    Poset::from_one_based(m, &pairs).expect("inclusion is acyclic")
}

fn relation_code(p: &Poset, perm: &[usize]) -> u64 {
    let n = p.len();
    let mut code = 0u64;
    for (x, y) in p.relations() {
        code |= 1 << (perm[x.index()] * n + perm[y.index()]);
    }
    code
}

fn canonical_code(p: &Poset) -> u64 {
    let n = p.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = relation_code(p, &perm);
    while next_permutation(&mut perm) {
        best = best.min(relation_code(p, &perm));
    }
    best
}

/// Lexicographic successor; `false` once `perm` is the last permutation.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// One representative of every isomorphism class of posets on `n`
/// elements, for `n <= 7`.
///
/// Every poset arises from one on `n - 1` elements by adding a new maximal
/// element above some downset, so classes are grown one element at a time
/// and deduplicated by a canonical relation code.
pub fn all_posets(n: usize) -> Vec<Poset> {
    assert!(n <= 7, "exhaustive generation is limited to n <= 7");
    let mut level = vec![Poset::empty()];
    for size in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for p in &level {
            for d in p.enumerate_downsets(DEFAULT_CAP).expect("small poset") {
                let mut pairs: Vec<(usize, usize)> =
                    p.relations().iter().map(|&(x, y)| (x.one_based(), y.one_based())).collect();
                pairs.extend(d.set().iter().map(|x| (x + 1, size)));
                let q = Poset::from_one_based(size, &pairs).expect("extension stays acyclic");
                if seen.insert(canonical_code(&q)) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    level
}
