//! Closed subsets of a root system.
//!
//! Sets of roots are bitsets over root indices; every supported root system
//! has at most 128 roots (B8 and C8), so a `u128` suffices.

use std::fmt;


use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, WeylElement, DEFAULT_WEYL_CAP};

/// Largest root system scanned by brute force over all subsets.
pub const SCAN_MAX_ROOTS: usize = 14;

/// Cap on the number of closed subsets produced by pruned enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn full(rs: &RootSystem) -> RootSet {
        let n = rs.num_roots();
        if n == 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> RootSet {
        indices.into_iter().fold(RootSet::EMPTY, |s, i| s.with(i))
    }

    pub fn from_roots(rs: &RootSystem, roots: &[Root]) -> Result<RootSet> {
        let mut s = RootSet::EMPTY;
        for r in roots {
            s.insert(rs.root_index(r)?);
        }
        Ok(s)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> RootSet {
        RootSet(self.0 | 1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn negated(self, rs: &RootSystem) -> RootSet {
        RootSet::from_indices(self.iter().map(|i| rs.negative(i)))
    }

    pub fn image(self, w: &WeylElement) -> RootSet {
        RootSet::from_indices(self.iter().map(|i| w.apply(i)))
    }

    pub fn roots(self, rs: &RootSystem) -> Vec<Root> {
        self.iter().map(|i| rs.root(i).clone()).collect()
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Closedness on index sets.
pub fn set_is_closed(rs: &RootSystem, s: RootSet) -> bool {
    for x in s.iter() {
        for y in s.iter() {
            if let Some(z) = rs.sum(x, y) {
                if !s.contains(z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Closure on index sets: repeated passes over pair sums until stable.
pub fn set_closure(rs: &RootSystem, s: RootSet) -> RootSet {
    let mut cur = s;
    loop {
        let mut next = cur;
        for x in cur.iter() {
            for y in cur.iter() {
                if let Some(z) = rs.sum(x, y) {
                    next.insert(z);
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// A closed subset together with its symmetric part `T^r = T ∩ −T` and
/// special part `T^u = T \ T^r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedSubset {
    roots: RootSet,
    symmetric: RootSet,
    special: RootSet,
}

impl ClosedSubset {
    pub fn new(rs: &RootSystem, s: RootSet) -> Result<ClosedSubset> {
        if !set_is_closed(rs, s) {
            return Err(Error::NotClosed);
        }
        Ok(Self::new_unchecked(rs, s))
    }

    pub(crate) fn new_unchecked(rs: &RootSystem, s: RootSet) -> ClosedSubset {
        let symmetric = s.intersection(s.negated(rs));
        ClosedSubset {
            roots: s,
            symmetric,
            special: s.difference(symmetric),
        }
    }

    pub fn from_roots(rs: &RootSystem, roots: &[Root]) -> Result<ClosedSubset> {
        Self::new(rs, RootSet::from_roots(rs, roots)?)
    }

    pub fn empty() -> ClosedSubset {
        ClosedSubset {
            roots: RootSet::EMPTY,
            symmetric: RootSet::EMPTY,
            special: RootSet::EMPTY,
        }
    }

    pub fn all(rs: &RootSystem) -> ClosedSubset {
        Self::new_unchecked(rs, RootSet::full(rs))
    }

    pub fn positive(rs: &RootSystem) -> ClosedSubset {
        Self::new_unchecked(rs, RootSet::from_indices(rs.positive_roots().iter().copied()))
    }

    pub fn set(&self) -> RootSet {
        self.roots
    }

    pub fn symmetric_part(&self) -> RootSet {
        self.symmetric
    }

    pub fn special_part(&self) -> RootSet {
        self.special
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.roots.roots(rs)
    }

    pub fn image(&self, rs: &RootSystem, w: &WeylElement) -> ClosedSubset {
        Self::new_unchecked(rs, self.roots.image(w))
    }

    /// JSON array of root coordinate arrays, in root order.
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::Value::Array(
            self.roots
                .iter()
                .map(|i| serde_json::json!(rs.root(i).0))
                .collect(),
        )
    }

    pub fn from_json(rs: &RootSystem, value: &serde_json::Value) -> Result<ClosedSubset> {
        let roots: Vec<Root> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("closed subset: {e}")))?;
        Self::from_roots(rs, &roots)
    }
}

impl fmt::Debug for ClosedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClosedSubset({:?})", self.roots)
    }
}

pub fn is_closed(rs: &RootSystem, roots: &[Root]) -> Result<bool> {
    Ok(set_is_closed(rs, RootSet::from_roots(rs, roots)?))
}

/// The smallest closed subset containing `roots`.
pub fn closure(rs: &RootSystem, roots: &[Root]) -> Result<ClosedSubset> {
    let s = RootSet::from_roots(rs, roots)?;
    Ok(ClosedSubset::new_unchecked(rs, set_closure(rs, s)))
}

/// `[T ∪ −T]`.
pub fn symmetrized_closure(rs: &RootSystem, t: &ClosedSubset) -> ClosedSubset {
    let s = t.set().union(t.set().negated(rs));
    ClosedSubset::new_unchecked(rs, set_closure(rs, s))
}

/// Whether `[T ∪ −T] = Φ`.
pub fn is_full(rs: &RootSystem, t: &ClosedSubset) -> bool {
    symmetrized_closure(rs, t).set() == RootSet::full(rs)
}

/// A Weyl element `w` with `w(T1) = T2`, scanning `weyl` in order.
pub fn weyl_conjugating_element<'w>(
    weyl: &'w [WeylElement],
    t1: &ClosedSubset,
    t2: &ClosedSubset,
) -> Option<&'w WeylElement> {
    if t1.len() != t2.len() {
        return None;
    }
    weyl.iter().find(|w| t1.set().image(w) == t2.set())
}

pub fn are_weyl_conjugate(
    rs: &RootSystem,
    t1: &ClosedSubset,
    t2: &ClosedSubset,
) -> Result<Option<WeylElement>> {
    if t1.len() != t2.len() {
        return Ok(None);
    }
    let weyl = rs.weyl_elements(DEFAULT_WEYL_CAP)?;
    Ok(weyl_conjugating_element(&weyl, t1, t2).cloned())
}

/// The lexicographically smallest image of `t` under `weyl`, as a bitset.
pub fn orbit_representative(weyl: &[WeylElement], t: &ClosedSubset) -> RootSet {
    weyl.iter()
        .map(|w| t.set().image(w))
        .min_by_key(|s| canonical_key(*s))
        .unwrap_or(t.set())
}

fn canonical_key(s: RootSet) -> (usize, Vec<usize>) {
    (s.len(), s.iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Filter all `2^|Φ|` subsets; only for `|Φ| ≤ SCAN_MAX_ROOTS`.
    Scan,
    /// Depth-first growth with closure propagation and pruning.
    Pruned,
}

impl EnumerationMode {
    pub fn default_for(rs: &RootSystem) -> EnumerationMode {
        if rs.num_roots() <= 8 {
            EnumerationMode::Scan
        } else {
            EnumerationMode::Pruned
        }
    }
}

/// Every closed subset of `Φ`, each once, ordered by cardinality and then
/// by the sorted list of root indices.
pub fn enumerate_closed_subsets(rs: &RootSystem) -> Result<Vec<ClosedSubset>> {
    enumerate_closed_subsets_with(rs, EnumerationMode::default_for(rs), DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_closed_subsets_with(
    rs: &RootSystem,
    mode: EnumerationMode,
    cap: usize,
) -> Result<Vec<ClosedSubset>> {
    let n = rs.num_roots();
    let mut sets = match mode {
        EnumerationMode::Scan => {
            if n > SCAN_MAX_ROOTS {
                return Err(Error::EnumerationTooLarge {
                    roots: n,
                    cap: SCAN_MAX_ROOTS,
                });
            }
            (0u128..1 << n)
                .map(RootSet)
                .filter(|&s| set_is_closed(rs, s))
                .collect::<Vec<_>>()
        }
        EnumerationMode::Pruned => {
            let mut out = Vec::new();
            let mut state = vec![Decision::Open; n];
            grow(rs, &mut state, RootSet::EMPTY, 0, &mut out, cap)?;
            out
        }
    };
    if sets.len() > cap {
        return Err(Error::ResultTooLarge { cap });
    }
    sets.sort_by_cached_key(|s| canonical_key(*s));
    Ok(sets
        .into_iter()
        .map(|s| ClosedSubset::new_unchecked(rs, s))
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Decision {
    Open,
    In,
    Out,
}

/// Include `x` and everything it forces. Returns the grown set, or `None`
/// when a forced root was already excluded. `state` is updated in place;
/// the caller restores it.
fn include(rs: &RootSystem, state: &mut [Decision], set: RootSet, x: usize, touched: &mut Vec<usize>) -> Option<RootSet> {
    let mut set = set;
    let mut work = vec![x];
    state[x] = Decision::In;
    touched.push(x);
    set.insert(x);
    while let Some(a) = work.pop() {
        for b in set.iter() {
            for z in [rs.sum(a, b), rs.sum(b, a)].into_iter().flatten() {
                match state[z] {
                    Decision::In => {}
                    Decision::Out => return None,
                    Decision::Open => {
                        state[z] = Decision::In;
                        touched.push(z);
                        set.insert(z);
                        work.push(z);
                    }
                }
            }
        }
    }
    Some(set)
}

fn grow(
    rs: &RootSystem,
    state: &mut Vec<Decision>,
    set: RootSet,
    from: usize,
    out: &mut Vec<RootSet>,
    cap: usize,
) -> Result<()> {
    let Some(x) = (from..state.len()).find(|&i| state[i] == Decision::Open) else {
        debug_assert!(set_is_closed(rs, set));
        out.push(set);
        if out.len() > cap {
            return Err(Error::ResultTooLarge { cap });
        }
        return Ok(());
    };

    let mut touched = Vec::new();
    if let Some(grown) = include(rs, state, set, x, &mut touched) {
        grow(rs, state, grown, x + 1, out, cap)?;
    }
    for i in touched {
        state[i] = Decision::Open;
    }

    state[x] = Decision::Out;
    grow(rs, state, set, x + 1, out, cap)?;
    state[x] = Decision::Open;
    Ok(())
}
