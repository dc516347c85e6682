//! Brute-force ground truth for small instances.
//!
//! Everything here enumerates: linear extensions, their graph, all ordered
//! pairs of antichains. Element counts are limited to 64 so that sets fit in
//! a machine word, and every enumeration stops with [`Error::CapExceeded`]
//! once it would produce more than `cap` items.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{Antichain, Downset, ElementId, Poset};
use crate::realizer::LinearExtension;
use crate::revlex::{BigCount, LatticeExtension};
use crate::set::ElementSet;

const MAX_ELEMENTS: usize = 64;

fn word(s: &ElementSet) -> u64 {
    s.iter().fold(0, |m, x| m | 1 << x)
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::CapExceeded { cap: MAX_ELEMENTS, what: "elements" });
    }
    Ok(())
}

/// Calls `visit` on every linear extension of the order given by
/// predecessor masks, choosing the smallest available element first.
fn for_each_extension(pred: &[u64], cap: usize, mut visit: impl FnMut(&[u8])) -> Result<usize> {
    fn go(
        pred: &[u64],
        placed: u64,
        order: &mut Vec<u8>,
        count: &mut usize,
        cap: usize,
        visit: &mut dyn FnMut(&[u8]),
    ) -> Result<()> {
        let n = pred.len();
        if order.len() == n {
            if *count >= cap {
                return Err(Error::CapExceeded { cap, what: "linear extensions" });
            }
            *count += 1;
            visit(order);
            return Ok(());
        }
        for x in 0..n {
            if placed >> x & 1 == 0 && pred[x] & !placed == 0 {
                order.push(x as u8);
                go(pred, placed | 1 << x, order, count, cap, visit)?;
                order.pop();
            }
        }
        Ok(())
    }
    let mut count = 0;
    go(pred, 0, &mut Vec::with_capacity(pred.len()), &mut count, cap, &mut visit)?;
    Ok(count)
}

fn predecessor_masks(p: &Poset) -> Result<Vec<u64>> {
    check_size(p.len())?;
    Ok(p.elements().map(|x| word(p.below(x))).collect())
}

fn to_extension(order: &[u8]) -> LinearExtension {
    LinearExtension::from_order_unchecked(order.iter().map(|&x| ElementId::new(x as usize)).collect())
}

/// Every linear extension, in the order produced by backtracking with the
/// smallest available element first.
pub fn all_linear_extensions(p: &Poset, cap: usize) -> Result<Vec<LinearExtension>> {
    let pred = predecessor_masks(p)?;
    let mut out = Vec::new();
    for_each_extension(&pred, cap, |o| out.push(to_extension(o)))?;
    Ok(out)
}

/// Number of linear extensions by dynamic programming over downsets.
pub fn count_linear_extensions(p: &Poset, cap: usize) -> Result<BigCount> {
    let pred = predecessor_masks(p)?;
    let downsets: Vec<u64> = p.enumerate_downsets(cap)?.iter().map(|d| word(d.set())).collect();
    let index: HashMap<u64, usize> = downsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    // Numeric order puts every downset after its subsets.
    let mut ways = vec![BigCount::default(); downsets.len()];
    ways[0] = BigCount::from(1u32);
    for (i, &m) in downsets.iter().enumerate().skip(1) {
        let mut total = BigCount::default();
        for x in 0..p.len() {
            // x can be placed last iff nothing in m lies above it.
            if m >> x & 1 == 1 && pred.iter().enumerate().all(|(y, &py)| m >> y & 1 == 0 || py >> x & 1 == 0) {
                total += &ways[index[&(m & !(1 << x))]];
            }
        }
        ways[i] = total;
    }
    Ok(ways.pop().unwrap_or_default())
}

/// Diameter of the linear extension graph and every unordered pair of
/// extensions at that distance.
#[derive(Clone, Debug, Serialize)]
pub struct LeDiameter {
    pub diameter: usize,
    pub extensions: usize,
    pub pairs: Vec<(LinearExtension, LinearExtension)>,
}

/// Diameter of `G(P)` by breadth-first search from every vertex.
///
/// Neighbours are generated by swapping adjacent incomparable elements. The
/// result is checked against the largest pairwise reversal count.
pub fn le_graph_diameter(p: &Poset, cap: usize) -> Result<LeDiameter> {
    let pred = predecessor_masks(p)?;
    let mut orders: Vec<Vec<u8>> = Vec::new();
    for_each_extension(&pred, cap, |o| orders.push(o.to_vec()))?;
    let index: HashMap<&[u8], usize> = orders.iter().enumerate().map(|(i, o)| (o.as_slice(), i)).collect();
    let n = p.len();

    let mut diameter = 0;
    let mut pairs = Vec::new();
    let mut dist = vec![usize::MAX; orders.len()];
    let mut queue = VecDeque::new();
    let mut scratch = vec![0u8; n];
    for source in 0..orders.len() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            scratch.copy_from_slice(&orders[v]);
            for i in 0..n.saturating_sub(1) {
                let (a, b) = (scratch[i] as usize, scratch[i + 1] as usize);
                if !p.incomparable_idx(a, b) {
                    continue;
                }
                scratch.swap(i, i + 1);
                let w = index[scratch.as_slice()];
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                scratch.swap(i, i + 1);
            }
        }
        for (target, &d) in dist.iter().enumerate().skip(source + 1) {
            if d > diameter {
                diameter = d;
                pairs.clear();
            }
            if d == diameter && d > 0 {
                pairs.push((source, target));
            }
        }
    }

    let extensions: Vec<LinearExtension> = orders.iter().map(|o| to_extension(o)).collect();
    let mut max_reversals = 0;
    for (i, a) in extensions.iter().enumerate() {
        for b in &extensions[i + 1..] {
            max_reversals = max_reversals.max(a.reversals(b));
        }
    }
    if max_reversals != diameter {
        return Err(Error::InvariantViolated(format!(
            "BFS diameter {diameter} differs from maximum reversal count {max_reversals}"
        )));
    }
    let pairs = pairs.into_iter().map(|(a, b)| (extensions[a].clone(), extensions[b].clone())).collect();
    Ok(LeDiameter { diameter, extensions: extensions.len(), pairs })
}

/// `led(D_P)` by enumeration, with every unordered diametral pair.
#[derive(Clone, Debug, Serialize)]
pub struct BruteLed {
    pub led: usize,
    /// Number of linear extensions of the downset lattice.
    pub extensions: usize,
    pub pairs: Vec<(LatticeExtension, LatticeExtension)>,
}

/// `led(D_P)` by enumerating the linear extensions of the downset lattice.
///
/// For each extension `L1`, the farthest `L2` is found by dynamic
/// programming over the downsets of the lattice: `L2` is built from the
/// bottom, and placing `x` last among a set `S` reverses every member of
/// `S − x` that `L1` puts after `x`.
pub fn brute_led_downset(p: &Poset, cap: usize) -> Result<BruteLed> {
    let lattice = p.downset_lattice(cap)?;
    let q = &lattice.poset;
    let m = q.len();
    let pred = predecessor_masks(q)?;
    let succ: Vec<u64> = q.elements().map(|x| word(q.above(x))).collect();

    // Downsets of the lattice, each with its one-smaller downsets.
    let ideals: Vec<u64> = q.enumerate_downsets(cap)?.iter().map(|d| word(d.set())).collect();
    let index: HashMap<u64, usize> = ideals.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let steps: Vec<Vec<(u8, usize)>> = ideals
        .iter()
        .map(|&s| {
            (0..m)
                .filter(|&x| s >> x & 1 == 1 && succ[x] & s == 0)
                .map(|x| (x as u8, index[&(s & !(1 << x))]))
                .collect()
        })
        .collect();

    let mut best = vec![0u32; ideals.len()];
    let mut after = vec![0u64; m];
    let fill = |order: &[u8], best: &mut Vec<u32>, after: &mut Vec<u64>| {
        let mut later = 0u64;
        for &x in order.iter().rev() {
            after[x as usize] = later;
            later |= 1 << x;
        }
        for (i, &s) in ideals.iter().enumerate().skip(1) {
            best[i] = steps[i]
                .iter()
                .map(|&(x, prev)| best[prev] + ((s & !(1 << x)) & after[x as usize]).count_ones())
                .max()
                .unwrap_or(0);
        }
        *best.last().unwrap_or(&0)
    };

    let mut led = 0u32;
    let mut witnesses: Vec<Vec<u8>> = Vec::new();
    let extensions = for_each_extension(&pred, cap, |order| {
        let ecc = fill(order, &mut best, &mut after);
        if ecc > led {
            led = ecc;
            witnesses.clear();
        }
        if ecc == led && ecc > 0 {
            witnesses.push(order.to_vec());
        }
    })?;

    let mut census: BTreeSet<(Vec<u8>, Vec<u8>)> = BTreeSet::new();
    for l1 in &witnesses {
        fill(l1, &mut best, &mut after);
        let mut suffix = Vec::with_capacity(m);
        farthest(ideals.len() - 1, &ideals, &steps, &best, &after, &mut suffix, &mut |l2| {
            let pair = if l1.as_slice() < l2 { (l1.clone(), l2.to_vec()) } else { (l2.to_vec(), l1.clone()) };
            census.insert(pair);
        });
    }
    let as_lattice_extension =
        |o: &[u8]| LatticeExtension::from_order(o.iter().map(|&x| lattice.downsets[x as usize].clone()).collect());
    let pairs = census.iter().map(|(a, b)| (as_lattice_extension(a), as_lattice_extension(b))).collect();
    Ok(BruteLed { led: led as usize, extensions, pairs })
}

/// Walks every optimal choice of the last element back to the empty set.
fn farthest(
    i: usize,
    ideals: &[u64],
    steps: &[Vec<(u8, usize)>],
    best: &[u32],
    after: &[u64],
    suffix: &mut Vec<u8>,
    emit: &mut dyn FnMut(&[u8]),
) {
    if i == 0 {
        let order: Vec<u8> = suffix.iter().rev().copied().collect();
        emit(&order);
        return;
    }
    let s = ideals[i];
    for &(x, prev) in &steps[i] {
        if best[prev] + ((s & !(1 << x)) & after[x as usize]).count_ones() == best[i] {
            suffix.push(x);
            farthest(prev, ideals, steps, best, after, suffix, emit);
            suffix.pop();
        }
    }
}

/// All ordered antichain pairs with symmetric difference `d` and
/// intersection `i`.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceClass {
    pub d: ElementSet,
    pub i: ElementSet,
    /// Components of `P[D]`, ordered by smallest member.
    pub components: Vec<ElementSet>,
    /// `(A_K, B_K)` at index `K`, a bitmask over `components`.
    pub pairs: Vec<(Antichain, Antichain)>,
    /// `(A_K↓, B_K↓)` at index `K`.
    #[serde(skip)]
    pub downsets: Vec<(Downset, Downset)>,
}

impl EquivalenceClass {
    /// Number of components of `P[D]`.
    pub fn d(&self) -> usize {
        self.components.len()
    }
}

/// Partitions the ordered pairs of antichains into classes and checks that
/// each class is in bijection with the subsets of its components.
pub fn enumerate_classes(p: &Poset, cap: usize) -> Result<Vec<EquivalenceClass>> {
    check_size(p.len())?;
    let antichains = p.enumerate_antichains(cap)?;
    if antichains.len().saturating_mul(antichains.len()) > cap {
        return Err(Error::CapExceeded { cap, what: "antichain pairs" });
    }
    let mut grouped: BTreeMap<(ElementSet, ElementSet), BTreeSet<(ElementSet, ElementSet)>> = BTreeMap::new();
    for a in &antichains {
        for b in &antichains {
            let key = (a.set().symmetric_difference(b.set()), a.set().intersection(b.set()));
            grouped.entry(key).or_default().insert((a.set().clone(), b.set().clone()));
        }
    }

    let mut classes = Vec::with_capacity(grouped.len());
    for ((d, i), members) in grouped {
        for x in i.iter() {
            if d.iter().any(|y| p.comparable_idx(x, y)) {
                return Err(Error::InvariantViolated(format!("class element {} meets D", x + 1)));
            }
        }
        let components = p.components_of(&d);
        let k = components.len();
        let maxima: Vec<ElementSet> = components.iter().map(|c| p.max_of(c).into_set()).collect();
        let minima: Vec<ElementSet> = components.iter().map(|c| p.min_of(c).into_set()).collect();

        let mut pairs = Vec::with_capacity(1 << k);
        let mut generated = BTreeSet::new();
        for mask in 0u64..1 << k {
            let mut x = ElementSet::empty(p.len());
            for c in 0..k {
                if mask >> c & 1 == 1 {
                    x.union_with(&maxima[c]);
                } else if components[c].len() > 1 {
                    x.union_with(&minima[c]);
                }
            }
            let a = x.union(&i);
            let b = d.difference(&x).union(&i);
            generated.insert((a.clone(), b.clone()));
            pairs.push((p.to_antichain(a)?, p.to_antichain(b)?));
        }
        if generated != members {
            return Err(Error::InvariantViolated(format!("class ({d}, {i}) is not generated by its components")));
        }
        let downsets = pairs
            .iter()
            .map(|(a, b)| Ok((p.downset_of(a)?, p.downset_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        classes.push(EquivalenceClass { d, i, components, pairs, downsets });
    }
    Ok(classes)
}

fn down_in(c: &EquivalenceClass, l: &LatticeExtension) -> Result<Vec<bool>> {
    c.downsets
        .iter()
        .map(|(a, b)| match (l.position(a.set()), l.position(b.set())) {
            (Some(pa), Some(pb)) => Ok(pa < pb),
            _ => Err(Error::MismatchedGroundSets),
        })
        .collect()
}

/// Number of unordered pairs `{A_K↓, B_K↓}` of the class that `l1` and `l2`
/// order oppositely.
pub fn class_reversals(c: &EquivalenceClass, l1: &LatticeExtension, l2: &LatticeExtension) -> Result<BigCount> {
    if !l1.same_ground_set(l2) {
        return Err(Error::MismatchedGroundSets);
    }
    let (f1, f2) = (down_in(c, l1)?, down_in(c, l2)?);
    let differing = f1.iter().zip(&f2).filter(|(a, b)| a != b).count();
    // K and its complement describe the same unordered pair.
    Ok(BigCount::from(differing / 2))
}

/// `F_i = {K : A_K↓ precedes B_K↓ in L_i}`, as bitmasks over the components.
///
/// Checks that both families are downward closed, that each holds exactly
/// one of every complementary pair `K`, `K^c`, and Kleitman's inequality
/// `|F1|·|F2| ≤ 2^d·|F1 ∩ F2|`.
pub fn kleitman_families(
    c: &EquivalenceClass,
    l1: &LatticeExtension,
    l2: &LatticeExtension,
) -> Result<(Vec<u64>, Vec<u64>)> {
    if !l1.same_ground_set(l2) {
        return Err(Error::MismatchedGroundSets);
    }
    let d = c.d();
    let family = |l: &LatticeExtension| -> Result<Vec<u64>> {
        let down = down_in(c, l)?;
        let f: Vec<u64> = (0u64..1 << d).filter(|&k| down[k as usize]).collect();
        let expected = if d == 0 { 0 } else { 1usize << (d - 1) };
        if f.len() != expected {
            return Err(Error::InvariantViolated(format!("family has {} members, expected {expected}", f.len())));
        }
        for &k in &f {
            for bit in 0..d {
                if k >> bit & 1 == 1 && !down[(k & !(1 << bit)) as usize] {
                    return Err(Error::InvariantViolated("family is not downward closed".into()));
                }
            }
        }
        Ok(f)
    };
    let (f1, f2) = (family(l1)?, family(l2)?);
    let both = f1.iter().filter(|k| f2.binary_search(k).is_ok()).count();
    if (f1.len() as u128) * (f2.len() as u128) > (1u128 << d) * both as u128 {
        return Err(Error::InvariantViolated("Kleitman's inequality fails".into()));
    }
    Ok((f1, f2))
}

/// An ordered incomparable pair `(x, y)` with everything below `x` below `y`
/// and everything above `y` above `x`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CriticalPair {
    pub x: ElementId,
    pub y: ElementId,
}

pub fn critical_pairs(p: &Poset) -> Vec<CriticalPair> {
    let mut out = Vec::new();
    for x in p.elements() {
        for y in p.elements() {
            if p.incomparable(x, y) && p.below(x).is_subset(p.below(y)) && p.above(y).is_subset(p.above(x)) {
                out.push(CriticalPair { x, y });
            }
        }
    }
    out
}

/// Whether every extension in every diametral pair of `G(P)` puts `y`
/// before `x` for some critical pair `(x, y)`. True when the diameter is 0.
pub fn is_diametrally_reversing(p: &Poset, cap: usize) -> Result<bool> {
    let critical = critical_pairs(p);
    let diameter = le_graph_diameter(p, cap)?;
    let reverses = |l: &LinearExtension| critical.iter().any(|c| l.precedes(c.y, c.x));
    Ok(diameter.pairs.iter().all(|(a, b)| reverses(a) && reverses(b)))
}
