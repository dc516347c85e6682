//! Linear extensions of a poset, the 2-dimensionality test, and realizers.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{ElementId, Poset};
use crate::set::ElementSet;

/// A linear extension of a poset: a permutation of its elements, smallest
/// first, in which every relation `x < y` has `x` before `y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearExtension {
    order: Vec<ElementId>,
    #[serde(skip)]
    position: Vec<usize>,
}

impl LinearExtension {
    /// Validates that `order` is a permutation of the elements extending `p`.
    pub fn new(p: &Poset, order: Vec<ElementId>) -> Result<Self> {
        let ext = Self::from_permutation(order, p.len())?;
        if p.relations().iter().any(|&(x, y)| !ext.precedes(x, y)) {
            return Err(Error::NotALinearExtension);
        }
        Ok(ext)
    }

    /// Like [`LinearExtension::new`] with 1-based element numbers.
    pub fn from_one_based(p: &Poset, order: &[usize]) -> Result<Self> {
        let ids = order
            .iter()
            .map(|&k| ElementId::from_one_based(k).ok_or(Error::IndexOutOfRange { index: k, n: p.len() }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, ids)
    }

    fn from_permutation(order: Vec<ElementId>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::NotALinearExtension);
        }
        let mut position = vec![usize::MAX; n];
        for (pos, x) in order.iter().enumerate() {
            if x.index() >= n {
                return Err(Error::IndexOutOfRange { index: x.one_based(), n });
            }
            if position[x.index()] != usize::MAX {
                return Err(Error::NotALinearExtension);
            }
            position[x.index()] = pos;
        }
        Ok(Self { order, position })
    }

    /// Wraps an order already known to be a permutation of `0..n`.
    pub(crate) fn from_order_unchecked(order: Vec<ElementId>) -> Self {
        let mut position = vec![0; order.len()];
        for (pos, x) in order.iter().enumerate() {
            position[x.index()] = pos;
        }
        Self { order, position }
    }

    pub fn order(&self) -> &[ElementId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 0-based position of `x`.
    pub fn position(&self, x: ElementId) -> usize {
        self.position[x.index()]
    }

    pub fn at(&self, pos: usize) -> ElementId {
        self.order[pos]
    }

    pub fn precedes(&self, x: ElementId, y: ElementId) -> bool {
        self.position[x.index()] < self.position[y.index()]
    }

    /// Number of pairs ordered differently by `self` and `other`.
    pub fn reversals(&self, other: &Self) -> usize {
        let n = self.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                let (x, y) = (self.order[a], self.order[b]);
                if other.precedes(y, x) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.order.iter().map(|x| x.one_based()).collect()
    }
}

impl fmt::Debug for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_based())
    }
}

/// A transitive orientation of the incomparability graph: each incomparable
/// pair becomes an arc `from -> to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    succ: Vec<ElementSet>,
}

impl Orientation {
    pub fn arcs(&self) -> Vec<(ElementId, ElementId)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.ids().map(move |y| (ElementId::new(x), y)))
            .collect()
    }

    pub fn points_to(&self, x: ElementId, y: ElementId) -> bool {
        self.succ[x.index()].contains(y.index())
    }

    pub fn is_transitive(&self) -> bool {
        self.succ.iter().all(|row| row.iter().all(|y| self.succ[y].is_subset(row)))
    }
}

/// Transitive orientation of the incomparability graph of `p` by
/// implication-class forcing.
///
/// Repeatedly takes the lexicographically least unoriented pair `{a, b}`,
/// orients it `a -> b`, and propagates the forcing relation inside the graph
/// of still-unoriented pairs: an arc `u -> v` forces `u -> w` whenever `uw`
/// is an edge but `vw` is not, and `w -> v` whenever `wv` is an edge but
/// `uw` is not. A class that forces both directions of some edge proves the
/// graph is not a comparability graph, i.e. `p` has dimension at least 3.
pub fn transitive_orientation(p: &Poset) -> Result<Orientation> {
    let n = p.len();
    let mut remaining: Vec<ElementSet> = p.elements().map(|x| p.incomparable_to(x)).collect();
    let mut succ = vec![ElementSet::empty(n); n];
    let mut in_class = vec![ElementSet::empty(n); n];

    for a in 0..n {
        loop {
            let Some(b) = remaining[a].iter().find(|&b| b > a) else { break };
            let mut class = vec![(a, b)];
            in_class[a].insert(b);
            let mut head = 0;
            while head < class.len() {
                let (u, v) = class[head];
                head += 1;
                let mut forced = Vec::new();
                for w in remaining[u].iter() {
                    if w != v && !remaining[v].contains(w) {
                        forced.push((u, w));
                    }
                }
                for w in remaining[v].iter() {
                    if w != u && !remaining[u].contains(w) {
                        forced.push((w, v));
                    }
                }
                for (x, y) in forced {
                    if in_class[y].contains(x) {
                        return Err(Error::NotTwoDimensional);
                    }
                    if in_class[x].insert(y) {
                        class.push((x, y));
                    }
                }
            }
            for &(x, y) in &class {
                succ[x].insert(y);
                remaining[x].remove(y);
                remaining[y].remove(x);
                in_class[x].remove(y);
            }
        }
    }

    let orientation = Orientation { succ };
    if !orientation.is_transitive() {
        return Err(Error::NotTwoDimensional);
    }
    Ok(orientation)
}

/// Topological order of `p` plus `extra` arcs, smallest index first among
/// the available elements. `None` if the union has a cycle.
fn topological_order(p: &Poset, extra: &[(ElementId, ElementId)]) -> Option<Vec<ElementId>> {
    let n = p.len();
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for (x, y) in p.relations().into_iter().chain(extra.iter().copied()) {
        succ[x.index()].push(y.index());
        indeg[y.index()] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = ready.pop_first() {
        order.push(ElementId::new(u));
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.insert(v);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A pair of linear extensions whose intersection is the poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realizer2D {
    pub sigma: LinearExtension,
    pub sigma_bar: LinearExtension,
}

impl Realizer2D {
    pub fn swapped(&self) -> Self {
        Self { sigma: self.sigma_bar.clone(), sigma_bar: self.sigma.clone() }
    }
}

/// A realizer `(sigma, sigma_bar)` of a 2-dimensional poset.
///
/// `sigma` is the topological order of `p` together with the transitive
/// orientation of its incomparability graph; `sigma_bar` uses the reversed
/// orientation.
pub fn realizer(p: &Poset) -> Result<Realizer2D> {
    let orientation = transitive_orientation(p)?;
    let arcs = orientation.arcs();
    let reversed: Vec<_> = arcs.iter().map(|&(x, y)| (y, x)).collect();
    let (Some(sigma), Some(sigma_bar)) = (topological_order(p, &arcs), topological_order(p, &reversed))
    else {
        return Err(Error::NotTwoDimensional);
    };
    let sigma = LinearExtension::new(p, sigma)?;
    let sigma_bar = LinearExtension::new(p, sigma_bar)?;
    let r = Realizer2D { sigma, sigma_bar };
    if !is_realizer(p, &r) {
        return Err(Error::InvariantViolated("orientation does not yield a realizer".into()));
    }
    Ok(r)
}

/// Whether the two extensions intersect to exactly `p`.
pub fn is_realizer(p: &Poset, r: &Realizer2D) -> bool {
    p.incomparable_pairs()
        .into_iter()
        .all(|(x, y)| r.sigma.precedes(x, y) != r.sigma_bar.precedes(x, y))
}

/// Whether `p` is 2-dimensional (dimension at most 2).
pub fn is_two_dimensional(p: &Poset) -> bool {
    transitive_orientation(p).is_ok()
}

/// Whether `pi` is non-separating: no comparable pair `u < v` has an element
/// incomparable to both positioned strictly between them.
pub fn is_non_separating(p: &Poset, pi: &LinearExtension) -> Result<bool> {
    if pi.len() != p.len() || p.relations().iter().any(|&(x, y)| !pi.precedes(x, y)) {
        return Err(Error::NotALinearExtension);
    }
    let n = p.len();
    // Incomparability rows re-indexed by position in `pi`.
    let inc_by_pos: Vec<ElementSet> = (0..n)
        .map(|pos| {
            let x = pi.at(pos);
            ElementSet::from_indices(n, p.incomparable_to(x).iter().map(|y| pi.position(ElementId::new(y))))
        })
        .collect();
    for pu in 0..n {
        let u = pi.at(pu);
        for v in p.above(u).ids() {
            let pv = pi.position(v);
            let both = inc_by_pos[pu].intersection(&inc_by_pos[pv]);
            if both.iter().any(|pos| pos > pu && pos < pv) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The linear extension reversing every incomparable pair of `sigma`.
///
/// Exists exactly when `sigma` is non-separating.
pub fn complement(p: &Poset, sigma: &LinearExtension) -> Result<LinearExtension> {
    if !is_non_separating(p, sigma)? {
        return Err(Error::SeparatingExtension);
    }
    let arcs: Vec<_> = p
        .incomparable_pairs()
        .into_iter()
        .map(|(x, y)| if sigma.precedes(x, y) { (y, x) } else { (x, y) })
        .collect();
    let order = topological_order(p, &arcs).ok_or(Error::SeparatingExtension)?;
    LinearExtension::new(p, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().map(|&k| ElementId::from_one_based(k).unwrap()).collect()
    }

    #[test]
    fn orientation_examples() {
        assert!(transitive_orientation(&Poset::chain(4)).unwrap().arcs().is_empty());

        let o = transitive_orientation(&Poset::antichain(3)).unwrap();
        let arcs: Vec<_> = o.arcs().iter().map(|&(x, y)| (x.one_based(), y.one_based())).collect();
        assert_eq!(arcs, vec![(1, 2), (1, 3), (2, 3)]);

        assert_eq!(transitive_orientation(&generate::chevron()), Err(Error::NotTwoDimensional));
        assert_eq!(realizer(&generate::chevron()), Err(Error::NotTwoDimensional));
    }

    #[test]
    fn realizer_examples() {
        let r = realizer(&Poset::antichain(2)).unwrap();
        assert_eq!(r.sigma.order(), ids(&[1, 2]));
        assert_eq!(r.sigma_bar.order(), ids(&[2, 1]));

        let r = realizer(&Poset::chain(3)).unwrap();
        assert_eq!(r.sigma.order(), ids(&[1, 2, 3]));
        assert_eq!(r.sigma_bar, r.sigma);

        let p = Poset::chain_union(&[2, 1]);
        let r = realizer(&p).unwrap();
        for (x, y) in p.incomparable_pairs() {
            assert_ne!(r.sigma.precedes(x, y), r.sigma_bar.precedes(x, y));
        }
        for (x, y) in p.relations() {
            assert!(r.sigma.precedes(x, y) && r.sigma_bar.precedes(x, y));
        }
    }

    #[test]
    fn non_separating_examples() {
        let a = Poset::antichain(3);
        let pi = LinearExtension::from_one_based(&a, &[3, 1, 2]).unwrap();
        assert!(is_non_separating(&a, &pi).unwrap());

        // u = 1 < v = 2, x = 3 incomparable to both, placed in between.
        let p = Poset::from_one_based(3, &[(1, 2)]).unwrap();
        let pi = LinearExtension::from_one_based(&p, &[1, 3, 2]).unwrap();
        assert!(!is_non_separating(&p, &pi).unwrap());
        assert_eq!(complement(&p, &pi), Err(Error::SeparatingExtension));

        let bad = LinearExtension::from_order_unchecked(ids(&[2, 1, 3]));
        assert_eq!(is_non_separating(&p, &bad), Err(Error::NotALinearExtension));
        assert!(LinearExtension::from_one_based(&p, &[2, 1, 3]).is_err());
        assert!(LinearExtension::from_one_based(&p, &[1, 1, 3]).is_err());
    }

    #[test]
    fn realizers_of_all_small_posets() {
        for n in 0..=5 {
            for p in generate::all_posets(n) {
                let r = realizer(&p).unwrap();
                assert!(is_realizer(&p, &r));
                assert_eq!(r.sigma.reversals(&r.sigma_bar), p.inc());
                assert!(is_non_separating(&p, &r.sigma).unwrap());
                assert!(is_non_separating(&p, &r.sigma_bar).unwrap());
                assert_eq!(complement(&p, &r.sigma).unwrap(), r.sigma_bar);
            }
        }
    }

    #[test]
    fn realizer_is_deterministic() {
        let p = Poset::from_permutation(&[4, 1, 6, 0, 3, 5, 2]);
        let text = p.to_text();
        let a = realizer(&Poset::parse(&text).unwrap()).unwrap();
        let b = realizer(&Poset::parse(&text).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
