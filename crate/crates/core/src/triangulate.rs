//! The triangulation `|K|` of a cubical complex: each cell `[A, B]`
//! contributes the nerve of the poset `[A, B]`, diagonals included.

use std::collections::HashMap;

use crate::cubical::CubicalComplex;
use crate::simplicial::{SimplicialComplex, Vertex};
use crate::vertex_set::{Interval, VertexSet};

/// A triangulated cubical complex together with its vertex labelling.
///
/// Labels follow the canonical order on [`VertexSet`] (cardinality, then
/// lexicographic), which is a linear extension of inclusion, so every
/// 1-simplex runs from a smaller to a larger label.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub complex: SimplicialComplex,
    labels: Vec<VertexSet>,
    index: HashMap<VertexSet, Vertex>,
}

impl Triangulation {
    pub fn label(&self, f: VertexSet) -> Option<Vertex> {
        self.index.get(&f).copied()
    }

    pub fn vertex_set(&self, label: Vertex) -> Option<VertexSet> {
        self.labels.get(label).copied()
    }

    /// Vertex sets indexed by label.
    pub fn labels(&self) -> &[VertexSet] {
        &self.labels
    }

    pub fn path_to_sets(&self, path: &[Vertex]) -> Vec<VertexSet> {
        path.iter().map(|&v| self.labels[v]).collect()
    }
}

/// Triangulates `k`, keeping simplices of dimension at most `max_dim`.
pub fn triangulate(k: &CubicalComplex, max_dim: usize) -> Triangulation {
    let labels = k.vertices();
    let index: HashMap<VertexSet, Vertex> = labels.iter().enumerate().map(|(i, &f)| (f, i)).collect();

    let mut simplices = Vec::new();
    for cell in k.maximal_cells() {
        let len = cell.dimension().min(max_dim) + 1;
        for chain in chains(cell, len) {
            simplices.push(chain.iter().map(|f| index[f]).collect());
        }
    }
    let complex = SimplicialComplex::new(0..labels.len(), simplices).expect("chains are strictly increasing");
    Triangulation { complex, labels, index }
}

/// `|K|` restricted to its 2-skeleton, which is all the path category needs.
pub fn triangulate_sk2(k: &CubicalComplex) -> Triangulation {
    triangulate(k, 2)
}

/// Strict chains `F_0 ⊊ ... ⊊ F_{len-1}` inside a cell.
pub(crate) fn chains(cell: &Interval, len: usize) -> Vec<Vec<VertexSet>> {
    fn extend(top: VertexSet, len: usize, cur: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().unwrap();
        for step in top.difference(last).subsets().skip(1) {
            cur.push(last.union(step));
            extend(top, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    for start in cell.free().subsets() {
        let mut cur = vec![cell.lower.union(start)];
        extend(cell.upper, len, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> VertexSet {
        e.iter().copied().collect()
    }

    #[test]
    fn interval_chain_counts() {
        // chains of length 3 in P({1,2}) : only ∅ ⊊ {i} ⊊ {1,2}
        let sq = Interval::new(VertexSet::EMPTY, set(&[1, 2])).unwrap();
        assert_eq!(chains(&sq, 3).len(), 2);
        assert_eq!(chains(&sq, 2).len(), 5);
        assert_eq!(chains(&sq, 1).len(), 4);
    }

    #[test]
    fn one_cube() {
        let t = triangulate_sk2(&CubicalComplex::standard_cell(1));
        assert_eq!(t.complex.vertices().len(), 2);
        assert_eq!(t.complex.count(1), 1);
        assert_eq!(t.complex.count(2), 0);
    }

    #[test]
    fn square_has_one_diagonal() {
        let t = triangulate_sk2(&CubicalComplex::standard_cell(2));
        assert_eq!(t.complex.vertices().len(), 4);
        assert_eq!(t.complex.count(1), 5);
        assert_eq!(t.complex.count(2), 2);
        let diag = (t.label(VertexSet::EMPTY).unwrap(), t.label(set(&[1, 2])).unwrap());
        assert!(t.complex.edges().contains(&diag));
    }

    #[test]
    fn chain_of_edges_has_no_diagonal() {
        let k = CubicalComplex::new(
            2,
            [Interval::new(set(&[]), set(&[1])).unwrap(), Interval::new(set(&[1]), set(&[1, 2])).unwrap()],
        )
        .unwrap();
        let t = triangulate_sk2(&k);
        assert_eq!(t.complex.vertices().len(), 3);
        assert_eq!(t.complex.count(1), 2);
        assert_eq!(t.complex.count(2), 0);
    }

    #[test]
    fn labels_extend_inclusion() {
        let t = triangulate_sk2(&CubicalComplex::standard_cell(4));
        assert_eq!(t.labels().len(), 16);
        for (a, b) in t.complex.edges() {
            assert!(a < b);
            assert!(t.vertex_set(a).unwrap().is_proper_subset(t.vertex_set(b).unwrap()));
        }
    }
}
