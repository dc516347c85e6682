//! Acceptance criteria 1 to 11, one pass/fail line each.
//!
//! Runs without the libtest harness so the summary lines always reach
//! stdout. Exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use posetkit::generate::{all_posets, boolean_lattice, chevron};
use posetkit::oracle::{
    all_linear_extensions, brute_led_downset, class_reversals, enumerate_classes, is_diametrally_reversing,
    kleitman_families, le_graph_diameter,
};
use posetkit::realizer::is_non_separating;
use posetkit::revlex::diametral_pair;
use posetkit::{
    build_revlex_extension, count_antichains, is_two_dimensional, led_boolean, led_chain_union, led_downset, realizer,
    reversal_distance, ElementId, ElementSet, LatticeExtension, LinearExtension, Poset, DEFAULT_CAP,
};
use rand::RngExt;

/// Enough for the 1,680,384 linear extensions of B_4.
const BIG_CAP: usize = 1 << 22;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

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

fn small_two_dim() -> Vec<Poset> {
    (0..=4).flat_map(all_posets).filter(is_two_dimensional).collect()
}

fn criterion_1() -> Outcome {
    for n in 1..=64u32 {
        // 4·led = 2^{2n} − (n+1)·2^n, free of the n = 1 fraction.
        let four_led = (BigUint::from(1u32) << (2 * n)) - (BigUint::from(n + 1) << n);
        check(led_boolean(n) * 4u32 == four_led, || format!("mismatch at n = {n}"))?;
    }
    let spots: Vec<String> = (1..=5).map(|n| led_boolean(n).to_string()).collect();
    check(spots == ["0", "1", "8", "44", "208"], || format!("spot values {spots:?}"))?;
    Ok(format!("n = 1..64 exact; spot values {}", spots.join(", ")))
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for n in [2, 3] {
        let brute = brute_led_downset(&Poset::antichain(n), DEFAULT_CAP).map_err(|e| e.to_string())?;
        let formula = led_boolean(n as u32);
        check(BigUint::from(brute.led) == formula, || format!("n = {n}: brute {} vs formula {formula}", brute.led))?;
        notes.push(format!("n = {n}: {} ({} extensions)", brute.led, brute.extensions));
        if n == 3 {
            let pairs = brute.extensions * (brute.extensions - 1) / 2;
            check(brute.extensions == 48 && pairs == 1128, || format!("{} extensions", brute.extensions))?;
        }
    }
    Ok(notes.join("; "))
}

fn criterion_3() -> Outcome {
    let posets = small_two_dim();
    for p in &posets {
        let fast = led_downset(p).map_err(|e| e.to_string())?.led;
        let brute = brute_led_downset(p, BIG_CAP).map_err(|e| e.to_string())?.led;
        check(fast == BigUint::from(brute), || format!("{p:?}: engine {fast} vs brute {brute}"))?;
    }
    Ok(format!("{} posets on at most 4 elements", posets.len()))
}

fn criterion_4() -> Outcome {
    let c = chevron();
    check(c.inc() == 7, || format!("inc = {}", c.inc()))?;
    check(!is_two_dimensional(&c), || "chevron has a 2-realizer".into())?;
    let d = le_graph_diameter(&c, DEFAULT_CAP).map_err(|e| e.to_string())?;
    check(d.diameter == 6, || format!("diameter {}", d.diameter))?;
    Ok(format!("diameter 6 over {} extensions, inc 7", d.extensions))
}

fn criterion_5() -> Outcome {
    let posets = small_two_dim();
    for p in &posets {
        let (l1, l2) = diametral_pair(p, DEFAULT_CAP).map_err(|e| e.to_string())?;
        l1.validate(p, DEFAULT_CAP).map_err(|e| format!("{p:?}: L1 {e}"))?;
        l2.validate(p, DEFAULT_CAP).map_err(|e| format!("{p:?}: L2 {e}"))?;
        let dist = reversal_distance(&l1, &l2).map_err(|e| e.to_string())?;
        let led = led_downset(p).map_err(|e| e.to_string())?.led;
        check(dist == led, || format!("{p:?}: distance {dist} vs led {led}"))?;
    }
    Ok(format!("{} posets", posets.len()))
}

fn criterion_6() -> Outcome {
    let p = Poset::antichain(3);
    let brute = brute_led_downset(&p, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let census: BTreeSet<_> = brute.pairs.iter().map(|(a, b)| unordered(orders(a), orders(b))).collect();
    let mut expected = BTreeSet::new();
    for sigma in all_linear_extensions(&p, DEFAULT_CAP).map_err(|e| e.to_string())? {
        let reversed: Vec<ElementId> = sigma.order().iter().rev().copied().collect();
        let bar = LinearExtension::new(&p, reversed).map_err(|e| e.to_string())?;
        let l = build_revlex_extension(&p, &sigma, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let lb = build_revlex_extension(&p, &bar, DEFAULT_CAP).map_err(|e| e.to_string())?;
        expected.insert(unordered(orders(&l), orders(&lb)));
    }
    check(census.len() == 3 && census == expected, || {
        format!("census has {} pairs, {} revlex pairs", census.len(), expected.len())
    })?;
    Ok("3 diametral pairs, all of the form {L_σ, L_σ̄}".into())
}

fn audit_bound(p: &Poset, l1: &LatticeExtension, l2: &LatticeExtension, exact: bool) -> Result<usize, String> {
    let classes = enumerate_classes(p, DEFAULT_CAP).map_err(|e| e.to_string())?;
    for c in &classes {
        let r = class_reversals(c, l1, l2).map_err(|e| e.to_string())?;
        let bound = if c.d() >= 2 { 1u64 << (c.d() - 2) } else { 0 };
        if exact {
            check(r == BigUint::from(bound), || format!("class d = {} gives {r}", c.d()))?;
        } else {
            check(r <= BigUint::from(bound), || format!("class d = {} gives {r} > {bound}", c.d()))?;
        }
        kleitman_families(c, l1, l2).map_err(|e| e.to_string())?;
    }
    Ok(classes.len())
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    for n in [3, 4] {
        let p = Poset::antichain(n);
        let (l1, l2) = diametral_pair(&p, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let classes = audit_bound(&p, &l1, &l2, true)?;
        notes.push(format!("B_{n}: {classes} classes exact"));
    }

    let p = Poset::antichain(3);
    let lattice = p.downset_lattice(DEFAULT_CAP).map_err(|e| e.to_string())?;
    let exts = all_linear_extensions(&lattice.poset, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let as_lattice = |l: &LinearExtension| {
        LatticeExtension::from_order(l.order().iter().map(|x| lattice.downsets[x.index()].clone()).collect())
    };
    let led = led_boolean(3);
    let mut rng = common::rng(7);
    let mut audited = 0;
    while audited < 100 {
        let (i, j) = (rng.random_range(0..exts.len()), rng.random_range(0..exts.len()));
        let (l1, l2) = (as_lattice(&exts[i]), as_lattice(&exts[j]));
        if reversal_distance(&l1, &l2).map_err(|e| e.to_string())? == led {
            continue;
        }
        audit_bound(&p, &l1, &l2, false)?;
        audited += 1;
    }
    notes.push("100 random non-diametral B_3 pairs within bound, Kleitman holds".into());
    Ok(notes.join("; "))
}

fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for total in 1..=12 {
        for lengths in compositions(total) {
            let engine = led_downset(&Poset::chain_union(&lengths)).map_err(|e| e.to_string())?.led;
            let closed = led_chain_union(&lengths);
            check(engine == closed, || format!("{lengths:?}: engine {engine} vs closed form {closed}"))?;
            count += 1;
        }
    }
    for n in 0..=10 {
        check(led_chain_union(&vec![1; n]) == led_boolean(n as u32), || format!("[1]^{n}"))?;
    }
    Ok(format!("{count} length vectors; [1]^n = B_n for n <= 10"))
}

fn criterion_9() -> Outcome {
    let mut rng = common::rng(9);
    for _ in 0..200 {
        let n = common::random_size(&mut rng, 1, 10);
        let p = common::random_two_dim(&mut rng, n);
        let sigma = realizer(&p).map_err(|e| e.to_string())?.sigma;
        let table = count_antichains(&p, &sigma).map_err(|e| e.to_string())?;
        let brute = common::brute_antichains(&p);
        check(table.total == BigUint::from(brute.len()), || format!("{p:?}: {} vs {}", table.total, brute.len()))?;
    }
    for n in 0..=10 {
        for (p, want) in [(Poset::antichain(n), 1u64 << n), (Poset::chain(n), n as u64 + 1)] {
            let sigma = realizer(&p).map_err(|e| e.to_string())?.sigma;
            debug_assert!(is_non_separating(&p, &sigma).unwrap());
            let got = count_antichains(&p, &sigma).map_err(|e| e.to_string())?.total;
            check(got == BigUint::from(want), || format!("closed form n = {n}: {got} vs {want}"))?;
        }
    }
    Ok("200 random posets and closed forms agree".into())
}

fn criterion_10() -> Outcome {
    for n in [2, 3] {
        let reversing = is_diametrally_reversing(&boolean_lattice(n), DEFAULT_CAP).map_err(|e| e.to_string())?;
        check(reversing, || format!("B_{n} is not diametrally reversing"))?;
    }
    Ok("B_2 and B_3".into())
}

fn time_led(p: &Poset, reps: usize) -> Result<Duration, String> {
    let mut best = Duration::MAX;
    for _ in 0..reps {
        let start = Instant::now();
        led_downset(p).map_err(|e| e.to_string())?;
        best = best.min(start.elapsed());
    }
    Ok(best)
}

fn criterion_11() -> Outcome {
    let mut rng = common::rng(11);
    let sizes = [10usize, 20, 40];
    let mut times = Vec::new();
    for (&n, reps) in sizes.iter().zip([20, 5, 1]) {
        let p = common::random_two_dim(&mut rng, n);
        times.push(time_led(&p, reps)?);
    }
    let t40 = times[2];
    check(t40 < Duration::from_secs(60), || format!("n = 40 took {t40:?}"))?;

    // Least-squares slope of log t against log n.
    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = times.iter().map(|t| t.as_secs_f64().max(1e-9).ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 3.0, ys.iter().sum::<f64>() / 3.0);
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    check(slope <= 6.0, || format!("fitted exponent {slope:.2}"))?;
    Ok(format!(
        "n = 40 in {:.2} s; times {:?}; fitted exponent {slope:.2}",
        t40.as_secs_f64(),
        times.iter().map(|t| format!("{:.4} s", t.as_secs_f64())).collect::<Vec<_>>()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("formula reproduction", criterion_1),
        ("oracle agreement, Boolean", criterion_2),
        ("oracle agreement, 2-dimensional n <= 4", criterion_3),
        ("chevron", criterion_4),
        ("diametral construction", criterion_5),
        ("uniqueness census", criterion_6),
        ("class audit", criterion_7),
        ("factor lattices", criterion_8),
        ("antichain DP", criterion_9),
        ("diametrally reversing", criterion_10),
        ("performance", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
