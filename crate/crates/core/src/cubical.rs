//! Finite cubical complexes `K ⊆ □^n`, stored as their maximal cells.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::vertex_set::{Interval, VertexSet, MAX_AMBIENT};

/// A subcomplex of the standard `n`-cell.
///
/// Only maximal cells are stored; an arbitrary interval belongs to the
/// complex iff it is a subinterval of some maximal cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicalComplex {
    ambient: usize,
    maximal_cells: BTreeSet<Interval>,
}

impl CubicalComplex {
    /// Builds a complex from any generating list of cells. Cells contained in
    /// other cells are dropped.
    pub fn new(ambient: usize, cells: impl IntoIterator<Item = Interval>) -> Result<Self> {
        if ambient > MAX_AMBIENT {
            return Err(Error::invalid(format!(
                "ambient dimension {ambient} exceeds the supported maximum {MAX_AMBIENT}"
            )));
        }
        let full = VertexSet::full(ambient);
        let mut all = Vec::new();
        for cell in cells {
            if !cell.lower.is_subset(cell.upper) {
                return Err(Error::invalid(format!("lower not contained in upper: {cell}")));
            }
            if !cell.upper.is_subset(full) {
                return Err(Error::invalid(format!("cell {cell} references elements outside 1..={ambient}")));
            }
            all.push(cell);
        }
        Ok(CubicalComplex { ambient, maximal_cells: maximalize(all) })
    }

    /// The standard cell `□^n = [∅, {1..n}]`.
    pub fn standard_cell(n: usize) -> Self {
        CubicalComplex::new(n, [Interval::new(VertexSet::EMPTY, VertexSet::full(n)).unwrap()])
            .expect("standard cell is valid")
    }

    pub fn empty(ambient: usize) -> Self {
        CubicalComplex::new(ambient, []).expect("empty complex is valid")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn maximal_cells(&self) -> impl ExactSizeIterator<Item = &Interval> + '_ {
        self.maximal_cells.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.maximal_cells.is_empty()
    }

    /// Decides membership of an arbitrary interval.
    pub fn contains(&self, cell: &Interval) -> Result<bool> {
        let full = VertexSet::full(self.ambient);
        if !cell.upper.is_subset(full) || !cell.lower.is_subset(cell.upper) {
            return Err(Error::invalid(format!("{cell} is not a cell of the ambient {}-cube", self.ambient)));
        }
        Ok(self.maximal_cells.iter().any(|m| cell.is_subinterval_of(m)))
    }

    pub fn contains_vertex(&self, f: VertexSet) -> bool {
        self.maximal_cells.iter().any(|m| m.contains_vertex(f))
    }

    /// All vertices, in canonical order.
    pub fn vertices(&self) -> Vec<VertexSet> {
        let set: BTreeSet<VertexSet> = self.maximal_cells.iter().flat_map(|c| c.members()).collect();
        set.into_iter().collect()
    }

    /// Number of maximal cells containing each vertex.
    pub fn incidence_counts(&self) -> BTreeMap<VertexSet, usize> {
        let mut counts = BTreeMap::new();
        for cell in &self.maximal_cells {
            for f in cell.members() {
                *counts.entry(f).or_insert(0) += 1;
            }
        }
        counts
    }

    /// The maximal cells that contain `f`.
    pub fn cells_containing(&self, f: VertexSet) -> Vec<Interval> {
        self.maximal_cells.iter().filter(|c| c.contains_vertex(f)).copied().collect()
    }

    /// Subcomplex of all cells that avoid `x` as a vertex.
    pub fn without_vertex(&self, x: VertexSet) -> CubicalComplex {
        let mut cells = Vec::new();
        for cell in &self.maximal_cells {
            if !cell.contains_vertex(x) {
                cells.push(*cell);
                continue;
            }
            // Maximal subintervals of [A, B] avoiding x are the facets
            // [A, B \ {i}] for i ∈ x and [A ∪ {i}, B] for i ∉ x, i ∈ B \ A.
            for i in cell.free().iter() {
                let facet = if x.contains(i) {
                    Interval { lower: cell.lower, upper: cell.upper.without(i) }
                } else {
                    Interval { lower: cell.lower.with(i), upper: cell.upper }
                };
                cells.push(facet);
            }
        }
        CubicalComplex { ambient: self.ambient, maximal_cells: maximalize(cells) }
    }

    /// Cells of dimension at most `k`, re-maximalized.
    pub fn skeleton(&self, k: usize) -> CubicalComplex {
        let mut cells = Vec::new();
        for cell in &self.maximal_cells {
            if cell.dimension() <= k {
                cells.push(*cell);
                continue;
            }
            for lower_extra in cell.free().subsets() {
                let lower = cell.lower.union(lower_extra);
                for span in cell.free().difference(lower_extra).subsets().filter(|s| s.len() == k) {
                    cells.push(Interval { lower, upper: lower.union(span) });
                }
            }
        }
        CubicalComplex { ambient: self.ambient, maximal_cells: maximalize(cells) }
    }
}

/// Keeps only the intervals not strictly contained in another one.
pub(crate) fn maximalize(cells: Vec<Interval>) -> BTreeSet<Interval> {
    let mut cells: Vec<Interval> = cells.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    // larger cells first so containment only needs to look backwards
    cells.sort_by(|a, b| b.dimension().cmp(&a.dimension()).then(a.cmp(b)));
    let mut kept: Vec<Interval> = Vec::new();
    for c in cells {
        if !kept.iter().any(|k| c.is_subinterval_of(k)) {
            kept.push(c);
        }
    }
    kept.into_iter().collect()
}

/// Validates a raw list of cells against the invariants of [`CubicalComplex`].
pub fn validate_cells(ambient: usize, cells: &[(Vec<usize>, Vec<usize>)]) -> Vec<String> {
    let mut violations = Vec::new();
    if ambient > MAX_AMBIENT {
        violations.push(format!("ambient dimension {ambient} exceeds the supported maximum {MAX_AMBIENT}"));
        return violations;
    }
    let mut parsed = Vec::new();
    for (k, (a, b)) in cells.iter().enumerate() {
        let mut ok = true;
        for (name, list) in [("A", a), ("B", b)] {
            if list.windows(2).any(|w| w[0] == w[1]) {
                violations.push(format!("cell {k}: duplicate element in {name}"));
                ok = false;
            } else if list.windows(2).any(|w| w[0] > w[1]) {
                violations.push(format!("cell {k}: {name} is not sorted ascending"));
                ok = false;
            }
            if let Some(e) = list.iter().find(|&&e| e == 0 || e > ambient) {
                violations.push(format!("cell {k}: element {e} outside 1..={ambient}"));
                ok = false;
            }
        }
        if !ok {
            continue;
        }
        let lower: VertexSet = a.iter().copied().collect();
        let upper: VertexSet = b.iter().copied().collect();
        if !lower.is_subset(upper) {
            violations.push(format!("cell {k}: lower not contained in upper"));
            continue;
        }
        parsed.push((k, Interval { lower, upper }));
    }
    for (i, (ki, ci)) in parsed.iter().enumerate() {
        for (kj, cj) in parsed.iter().skip(i + 1) {
            if ci == cj {
                violations.push(format!("cells {ki} and {kj} are equal"));
            } else if ci.is_subinterval_of(cj) {
                violations.push(format!("cell {ki} is contained in cell {kj}; not maximal"));
            } else if cj.is_subinterval_of(ci) {
                violations.push(format!("cell {kj} is contained in cell {ki}; not maximal"));
            }
        }
    }
    violations
}

/// Validates a constructed complex (always empty for values built through
/// [`CubicalComplex::new`]).
pub fn validate(k: &CubicalComplex) -> Vec<String> {
    let raw: Vec<_> = k.maximal_cells().map(|c| (c.lower.elements(), c.upper.elements())).collect();
    validate_cells(k.ambient(), &raw)
}
