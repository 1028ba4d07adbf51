//! Finite subsets of `{1, ..., n}` and the intervals `[A, B]` between them.
//!
//! A [`VertexSet`] is packed into a single machine word, so the ambient
//! dimension of any cubical complex is capped at [`MAX_AMBIENT`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_AMBIENT: usize = 64;

/// A subset of `{1, ..., n}`, stored as a bit set (element `i` is bit `i - 1`).
///
/// The ordering is the canonical linear extension of inclusion used for
/// triangulation labels: first by cardinality, then lexicographically on the
/// ascending element lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_AMBIENT, "ambient dimension {n} exceeds {MAX_AMBIENT}");
        if n == MAX_AMBIENT {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// `{lo, ..., hi}` (empty when `lo > hi`).
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).fold(VertexSet::EMPTY, |s, i| s.with(i))
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet::EMPTY.with(i)
    }

    /// Builds a set from 1-based elements, rejecting zero, out-of-range and
    /// duplicate entries.
    pub fn try_from_elements(elements: &[usize], ambient: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > ambient || e > MAX_AMBIENT {
                return Err(Error::invalid(format!("element {e} outside 1..={ambient}")));
            }
            let bit = 1u64 << (e - 1);
            if bits & bit != 0 {
                return Err(Error::invalid(format!("duplicate element {e}")));
            }
            bits |= bit;
        }
        Ok(VertexSet(bits))
    }

    pub fn with(self, i: usize) -> Self {
        assert!((1..=MAX_AMBIENT).contains(&i), "element {i} out of range");
        VertexSet(self.0 | (1u64 << (i - 1)))
    }

    pub fn without(self, i: usize) -> Self {
        assert!((1..=MAX_AMBIENT).contains(&i), "element {i} out of range");
        VertexSet(self.0 & !(1u64 << (i - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_AMBIENT).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Cardinality; this is the size functor `t(F) = |F|`.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_element(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i + 1)
            }
        })
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bit order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some(cur.wrapping_sub(mask) & mask) };
            Some(VertexSet(cur))
        })
    }
}

/// The size functor on vertices: `F ↦ |F|`.
pub fn size(f: VertexSet) -> usize {
    f.len()
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the smallest differing element belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, |s, i| s.with(i))
    }
}

/// A cell `[A, B] = { F | A ⊆ F ⊆ B }` of the ambient cube.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lower: VertexSet,
    pub upper: VertexSet,
}

impl Interval {
    pub fn new(lower: VertexSet, upper: VertexSet) -> Result<Self> {
        if !lower.is_subset(upper) {
            return Err(Error::invalid(format!("lower not contained in upper: [{lower}, {upper}]")));
        }
        Ok(Interval { lower, upper })
    }

    /// The degenerate cell `[F, F]`.
    pub fn point(f: VertexSet) -> Self {
        Interval { lower: f, upper: f }
    }

    pub fn dimension(&self) -> usize {
        self.upper.len() - self.lower.len()
    }

    /// Coordinates that vary across the cell, `B \ A`.
    pub fn free(&self) -> VertexSet {
        self.upper.difference(self.lower)
    }

    pub fn contains_vertex(&self, f: VertexSet) -> bool {
        self.lower.is_subset(f) && f.is_subset(self.upper)
    }

    /// `self ⊆ other` as intervals.
    pub fn is_subinterval_of(&self, other: &Interval) -> bool {
        other.lower.is_subset(self.lower) && self.upper.is_subset(other.upper)
    }

    pub fn members(&self) -> impl Iterator<Item = VertexSet> {
        let lower = self.lower;
        self.free().subsets().map(move |s| lower.union(s))
    }
}

/// All vertices of a cell; there are `2^dim` of them.
pub fn interval_members(cell: &Interval) -> Vec<VertexSet> {
    let mut v: Vec<_> = cell.members().collect();
    v.sort();
    v
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}
