//! Finite posets, antichains, downsets and downset lattices.
//!
//! A [`Poset`] stores its strict order transitively closed, as one bit-set row
//! of strict successors and one of strict predecessors per element, so every
//! comparability test is a single bit lookup.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Default bound on the number of antichains, downsets or lattice elements
/// an enumerating operation may produce.
pub const DEFAULT_CAP: usize = 1 << 20;

/// An element of a poset.
///
/// Stores the 0-based index; [`fmt::Display`] and serialization use the
/// 1-based numbering of the text format.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(usize);

impl ElementId {
    pub const fn new(index: usize) -> Self {
        Self(index)
    }

    /// `None` for `0`.
    pub fn from_one_based(k: usize) -> Option<Self> {
        k.checked_sub(1).map(Self)
    }

    pub const fn index(self) -> usize {
        self.0
    }

    pub const fn one_based(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0 + 1)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

impl Serialize for ElementId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.one_based() as u64)
    }
}

/// A set of pairwise incomparable elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Antichain(ElementSet);

/// A downward closed set of elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Downset(ElementSet);

macro_rules! set_wrapper {
    ($t:ident) => {
        impl $t {
            pub fn set(&self) -> &ElementSet {
                &self.0
            }

            pub fn into_set(self) -> ElementSet {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, x: ElementId) -> bool {
                self.0.contains(x.index())
            }

            pub fn members(&self) -> Vec<ElementId> {
                self.0.ids().collect()
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

set_wrapper!(Antichain);
set_wrapper!(Downset);

/// A finite strict partial order on the elements `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    labels: Option<Vec<String>>,
}

/// An induced subposet together with the map from its elements back to the
/// ambient poset. `map` is increasing, so relative index order is kept.
#[derive(Clone, Debug)]
pub struct Induced {
    pub poset: Poset,
    pub map: Vec<ElementId>,
}

/// The downset lattice of a poset, materialized as an explicit poset.
#[derive(Clone, Debug)]
pub struct DownsetLattice {
    /// Strict inclusion order; element `k` is `downsets[k]`.
    pub poset: Poset,
    /// All downsets in increasing numeric order of their bit patterns.
    pub downsets: Vec<Downset>,
}

impl DownsetLattice {
    pub fn index_of(&self, d: &ElementSet) -> Option<usize> {
        self.downsets.binary_search_by(|x| x.set().cmp(d)).ok()
    }
}

impl Poset {
    pub fn empty() -> Self {
        Self::antichain(0)
    }

    /// The `n`-element antichain.
    pub fn antichain(n: usize) -> Self {
        Self {
            n,
            up: vec![ElementSet::empty(n); n],
            down: vec![ElementSet::empty(n); n],
            labels: None,
        }
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::chain_union(&[n])
    }

    /// Disjoint union of chains of the given lengths, numbered chain after
    /// chain with each chain increasing in index.
    pub fn chain_union(lengths: &[usize]) -> Self {
        let n = lengths.iter().sum();
        let mut p = Self::antichain(n);
        let mut start = 0;
        for &len in lengths {
            for i in start..start + len {
                for j in i + 1..start + len {
                    p.up[i].insert(j);
                    p.down[j].insert(i);
                }
            }
            start += len;
        }
        p
    }

    /// The 2-dimensional poset with `i < j` iff `i < j` and `tau[i] < tau[j]`.
    ///
    /// The identity and the order sorting by decreasing `tau` form a realizer.
    pub fn from_permutation(tau: &[usize]) -> Self {
        let n = tau.len();
        let mut p = Self::antichain(n);
        for i in 0..n {
            for j in i + 1..n {
                if tau[i] < tau[j] {
                    p.up[i].insert(j);
                    p.down[j].insert(i);
                }
            }
        }
        p
    }

    /// Transitive closure of `pairs`, each `(a, b)` meaning `a < b`.
    pub fn from_relations(n: usize, pairs: &[(ElementId, ElementId)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x.index() >= n {
                    return Err(Error::IndexOutOfRange { index: x.one_based(), n });
                }
            }
            if a == b {
                return Err(Error::CycleDetected { element: a.one_based() });
            }
            succ[a.index()].push(b.index());
            indeg[b.index()] += 1;
        }
        // Kahn's algorithm; leftover elements lie on a cycle.
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            topo.push(u);
            for &v in &succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if topo.len() < n {
            let element = (0..n).find(|&i| indeg[i] > 0).unwrap_or(0);
            return Err(Error::CycleDetected { element: element + 1 });
        }
        let mut p = Self::antichain(n);
        for &u in topo.iter().rev() {
            let mut row = ElementSet::empty(n);
            for &v in &succ[u] {
                row.insert(v);
                row.union_with(&p.up[v]);
            }
            p.up[u] = row;
        }
        for u in 0..n {
            for v in p.up[u].iter().collect::<Vec<_>>() {
                p.down[v].insert(u);
            }
        }
        Ok(p)
    }

    /// Like [`Poset::from_relations`] with 1-based element numbers.
    pub fn from_one_based(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let ids = pairs
            .iter()
            .map(|&(a, b)| {
                let id = |k: usize| {
                    ElementId::from_one_based(k).ok_or(Error::IndexOutOfRange { index: k, n })
                };
                Ok((id(a)?, id(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_relations(n, &ids)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn label(&self, x: ElementId) -> String {
        match &self.labels {
            Some(l) => l[x.index()].clone(),
            None => x.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n).map(ElementId::new)
    }

    #[inline]
    pub fn less(&self, x: ElementId, y: ElementId) -> bool {
        self.up[x.index()].contains(y.index())
    }

    #[inline]
    pub fn less_idx(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn comparable_idx(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y) || self.down[x].contains(y)
    }

    #[inline]
    pub fn incomparable_idx(&self, x: usize, y: usize) -> bool {
        x != y && !self.comparable_idx(x, y)
    }

    pub fn incomparable(&self, x: ElementId, y: ElementId) -> bool {
        self.incomparable_idx(x.index(), y.index())
    }

    /// Elements strictly above `x`.
    pub fn above(&self, x: ElementId) -> &ElementSet {
        &self.up[x.index()]
    }

    /// Elements strictly below `x`.
    pub fn below(&self, x: ElementId) -> &ElementSet {
        &self.down[x.index()]
    }

    /// Elements incomparable to `x` (excluding `x`).
    pub fn incomparable_to(&self, x: ElementId) -> ElementSet {
        let mut s = ElementSet::full(self.n).difference(&self.up[x.index()].union(&self.down[x.index()]));
        s.remove(x.index());
        s
    }

    /// All unordered incomparable pairs `(x, y)` with `x < y` by index.
    pub fn incomparable_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.comparable_idx(i, j) {
                    out.push((ElementId(i), ElementId(j)));
                }
            }
        }
        out
    }

    /// Number of incomparable pairs.
    pub fn inc(&self) -> usize {
        self.incomparable_pairs().len()
    }

    /// All strict relations `(x, y)` with `x < y`, in index order.
    pub fn relations(&self) -> Vec<(ElementId, ElementId)> {
        self.elements().flat_map(|x| self.up[x.index()].ids().map(move |y| (x, y))).collect()
    }

    /// Cover relations of the Hasse diagram.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        self.relations()
            .into_iter()
            .filter(|&(x, y)| self.up[x.index()].intersection(&self.down[y.index()]).is_empty())
            .collect()
    }

    /// Checks irreflexivity, antisymmetry and transitivity by a full scan.
    pub fn check_axioms(&self) -> Result<()> {
        for x in 0..self.n {
            if self.less_idx(x, x) {
                return Err(Error::InvariantViolated(format!("{} < {}", x + 1, x + 1)));
            }
            for y in 0..self.n {
                if self.less_idx(x, y) != self.down[y].contains(x) {
                    return Err(Error::InvariantViolated("up/down rows disagree".into()));
                }
                if self.less_idx(x, y) && self.less_idx(y, x) {
                    return Err(Error::InvariantViolated(format!("{} and {} form a cycle", x + 1, y + 1)));
                }
                if !self.less_idx(x, y) {
                    continue;
                }
                for z in 0..self.n {
                    if self.less_idx(y, z) && !self.less_idx(x, z) {
                        return Err(Error::InvariantViolated(format!(
                            "{} < {} < {} but not {} < {}",
                            x + 1,
                            y + 1,
                            z + 1,
                            x + 1,
                            z + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_subset(&self, s: &ElementSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::IndexOutOfRange { index: s.universe(), n: self.n });
        }
        Ok(())
    }

    /// Subposet induced by `s`, elements renumbered in increasing index order.
    pub fn induced(&self, s: &ElementSet) -> Result<Induced> {
        self.check_subset(s)?;
        let map: Vec<usize> = s.iter().collect();
        let m = map.len();
        let mut poset = Self::antichain(m);
        for (a, &x) in map.iter().enumerate() {
            for (b, &y) in map.iter().enumerate() {
                if self.less_idx(x, y) {
                    poset.up[a].insert(b);
                    poset.down[b].insert(a);
                }
            }
        }
        if let Some(labels) = &self.labels {
            poset.labels = Some(map.iter().map(|&x| labels[x].clone()).collect());
        }
        Ok(Induced { poset, map: map.into_iter().map(ElementId).collect() })
    }

    /// Connected components of the comparability graph, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<ElementSet> {
        self.components_of(&ElementSet::full(self.n))
    }

    /// Connected components of the comparability graph of the subposet
    /// induced by `s`, ordered by smallest member.
    pub fn components_of(&self, s: &ElementSet) -> Vec<ElementSet> {
        let mut seen = ElementSet::empty(self.n);
        let mut out = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = ElementSet::empty(self.n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                let nbrs = self.up[u].union(&self.down[u]).intersection(s);
                for v in nbrs.iter() {
                    if seen.insert(v) {
                        stack.push(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Maximal elements of the subposet induced by `s`.
    pub fn max_of(&self, s: &ElementSet) -> Antichain {
        Antichain(ElementSet::from_indices(
            self.n,
            s.iter().filter(|&x| self.up[x].is_disjoint(s)),
        ))
    }

    /// Minimal elements of the subposet induced by `s`.
    pub fn min_of(&self, s: &ElementSet) -> Antichain {
        Antichain(ElementSet::from_indices(
            self.n,
            s.iter().filter(|&x| self.down[x].is_disjoint(s)),
        ))
    }

    pub fn is_antichain(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.up[x].is_disjoint(s))
    }

    pub fn is_downset(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    pub fn to_antichain(&self, s: ElementSet) -> Result<Antichain> {
        self.check_subset(&s)?;
        for x in s.iter() {
            if let Some(y) = self.up[x].intersection(&s).iter().next() {
                return Err(Error::NotAnAntichain(x + 1, y + 1));
            }
        }
        Ok(Antichain(s))
    }

    pub fn to_downset(&self, s: ElementSet) -> Result<Downset> {
        self.check_subset(&s)?;
        for x in s.iter() {
            if let Some(y) = self.down[x].difference(&s).iter().next() {
                return Err(Error::NotADownset { lower: y + 1, upper: x + 1 });
            }
        }
        Ok(Downset(s))
    }

    /// The downset generated by `s`: `s` together with everything below it.
    pub fn down_closure(&self, s: &ElementSet) -> ElementSet {
        let mut d = s.clone();
        for x in s.iter() {
            d.union_with(&self.down[x]);
        }
        d
    }

    /// The downset generated by an antichain.
    pub fn downset_of(&self, a: &Antichain) -> Result<Downset> {
        let a = self.to_antichain(a.0.clone())?;
        Ok(Downset(self.down_closure(&a.0)))
    }

    /// The antichain of maxima of a downset; inverse of [`Poset::downset_of`].
    pub fn maxima_of_downset(&self, d: &Downset) -> Result<Antichain> {
        let d = self.to_downset(d.0.clone())?;
        Ok(self.max_of(&d.0))
    }

    /// All antichains, the empty one included, in increasing numeric order.
    pub fn enumerate_antichains(&self, cap: usize) -> Result<Vec<Antichain>> {
        let mut out = Vec::new();
        let mut current = ElementSet::empty(self.n);
        let mut allowed = ElementSet::full(self.n);
        self.antichain_dfs(0, &mut current, &mut allowed, &mut out, cap)?;
        out.sort();
        Ok(out.into_iter().map(Antichain).collect())
    }

    fn antichain_dfs(
        &self,
        from: usize,
        current: &mut ElementSet,
        allowed: &mut ElementSet,
        out: &mut Vec<ElementSet>,
        cap: usize,
    ) -> Result<()> {
        if out.len() >= cap {
            return Err(Error::CapExceeded { cap, what: "antichains" });
        }
        out.push(current.clone());
        for x in from..self.n {
            if !allowed.contains(x) {
                continue;
            }
            let saved = allowed.clone();
            current.insert(x);
            *allowed = allowed.difference(&self.up[x]).difference(&self.down[x]);
            self.antichain_dfs(x + 1, current, allowed, out, cap)?;
            current.remove(x);
            *allowed = saved;
        }
        Ok(())
    }

    /// All downsets in increasing numeric order.
    pub fn enumerate_downsets(&self, cap: usize) -> Result<Vec<Downset>> {
        let mut out: Vec<Downset> = self
            .enumerate_antichains(cap)?
            .into_iter()
            .map(|a| Downset(self.down_closure(&a.0)))
            .collect();
        out.sort();
        Ok(out)
    }

    /// The downset lattice ordered by inclusion, as an explicit poset.
    ///
    /// Memory is quadratic in the number of downsets.
    pub fn downset_lattice(&self, cap: usize) -> Result<DownsetLattice> {
        let downsets = self.enumerate_downsets(cap)?;
        let m = downsets.len();
        let mut poset = Self::antichain(m);
        for a in 0..m {
            for b in 0..m {
                if a != b && downsets[a].0.is_subset(&downsets[b].0) {
                    poset.up[a].insert(b);
                    poset.down[b].insert(a);
                }
            }
        }
        Ok(DownsetLattice { poset, downsets })
    }

    /// Renames element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut p = Self::antichain(self.n);
        for (x, y) in self.relations() {
            let (a, b) = (perm[x.index()], perm[y.index()]);
            p.up[a].insert(b);
            p.down[b].insert(a);
        }
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); self.n];
            for (i, s) in labels.iter().enumerate() {
                l[perm[i]] = s.clone();
            }
            p.labels = Some(l);
        }
        p
    }

    /// The order-dual poset.
    pub fn dual(&self) -> Self {
        Self { n: self.n, up: self.down.clone(), down: self.up.clone(), labels: self.labels.clone() }
    }

    /// Parses the line-based text format:
    ///
    /// ```text
    /// # comment
    /// poset 3
    /// 1 < 2
    /// 2 < 3
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| Error::Parse { line: line_no, message: message.to_string() };
            let Some(size) = n else {
                let rest = line.strip_prefix("poset").ok_or_else(|| err("expected `poset <n>` header"))?;
                let size: usize = rest.trim().parse().map_err(|_| err("invalid element count"))?;
                n = Some(size);
                continue;
            };
            let (lhs, rhs) = line.split_once('<').ok_or_else(|| err("expected `<i> < <j>`"))?;
            let parse_idx = |s: &str| -> Result<usize> {
                let k: usize = s.trim().parse().map_err(|_| err("invalid element index"))?;
                if k == 0 || k > size {
                    return Err(Error::IndexOutOfRange { index: k, n: size });
                }
                Ok(k)
            };
            pairs.push((parse_idx(lhs)?, parse_idx(rhs)?));
        }
        let n = n.ok_or(Error::Parse { line: 0, message: "missing `poset <n>` header".into() })?;
        Self::from_one_based(n, &pairs)
    }

    /// Serializes to the text format, listing cover relations only.
    pub fn to_text(&self) -> String {
        let mut s = format!("poset {}\n", self.n);
        for (x, y) in self.covers() {
            s.push_str(&format!("{x} < {y}\n"));
        }
        s
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset").field("n", &self.n).field("covers", &self.covers()).finish()
    }
}
