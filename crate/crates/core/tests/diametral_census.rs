//! Diametral pairs of downset lattices: the brute-force census against the
//! σ-revlex construction, and the dominance drawing they induce.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use posetkit::generate::all_posets;
use posetkit::oracle::{all_linear_extensions, brute_led_downset};
use posetkit::realizer::{complement, is_non_separating};
use posetkit::revlex::{diametral_pair, dominance_coordinates};
use posetkit::{build_revlex_extension, is_two_dimensional, led_downset, ElementSet, LatticeExtension, Poset, DEFAULT_CAP};

fn orders(l: &LatticeExtension) -> Vec<ElementSet> {
    l.order().iter().map(|d| d.set().clone()).collect()
}

fn unordered(a: Vec<ElementSet>, b: Vec<ElementSet>) -> (Vec<ElementSet>, Vec<ElementSet>) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn two_dim_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(all_posets).filter(is_two_dimensional).collect()
}

#[test]
fn census_is_exactly_the_revlex_pairs() {
    for p in two_dim_up_to(4) {
        let brute = brute_led_downset(&p, 1 << 22).unwrap();
        let census: BTreeSet<_> = brute.pairs.iter().map(|(a, b)| unordered(orders(a), orders(b))).collect();
        let mut revlex = BTreeSet::new();
        for sigma in all_linear_extensions(&p, DEFAULT_CAP).unwrap() {
            if !is_non_separating(&p, &sigma).unwrap() {
                continue;
            }
            let bar = complement(&p, &sigma).unwrap();
            let l = build_revlex_extension(&p, &sigma, DEFAULT_CAP).unwrap();
            let lb = build_revlex_extension(&p, &bar, DEFAULT_CAP).unwrap();
            if l.order() != lb.order() {
                revlex.insert(unordered(orders(&l), orders(&lb)));
            }
        }
        assert_eq!(census, revlex, "{p:?}");
    }
}

#[test]
fn dominance_drawing_is_faithful_up_to_led() {
    for p in two_dim_up_to(5) {
        let lattice = p.downset_lattice(DEFAULT_CAP).unwrap();
        let (l1, l2) = diametral_pair(&p, DEFAULT_CAP).unwrap();
        let points = dominance_coordinates(&l1, &l2).unwrap();
        let at = |d: &ElementSet| points.iter().find(|pt| pt.downset.set() == d).unwrap();
        let led = led_downset(&p).unwrap().led;
        let mut spurious = 0u64;
        let q = &lattice.poset;
        for (i, a) in lattice.downsets.iter().enumerate() {
            for (j, b) in lattice.downsets.iter().enumerate().skip(i + 1) {
                let (pa, pb) = (at(a.set()), at(b.set()));
                let dominated = (pa.x < pb.x) == (pa.y < pb.y);
                if q.comparable_idx(i, j) {
                    assert!(dominated, "{p:?}: comparable {a} {b} not dominance-comparable");
                } else if dominated {
                    spurious += 1;
                }
            }
        }
        assert_eq!(BigUint::from(spurious) + led, BigUint::from(q.inc()), "{p:?}");
    }
}
