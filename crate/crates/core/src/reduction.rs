//! Complexity-reduction passes. Each produces a subcomplex whose inclusion
//! induces a fully faithful functor on path categories, so hom sets between
//! surviving vertices can be computed on the smaller complex.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cubical::CubicalComplex;
use crate::engine::PathEngine;
use crate::error::{Error, Result};
use crate::simplicial::{SimplicialComplex, Vertex};
use crate::vertex_set::VertexSet;

/// Audit trail of a reduction pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport<V> {
    pub pass: String,
    /// Removed vertices, in removal order.
    pub removed: Vec<V>,
    pub iterations: usize,
    pub input_size: usize,
    pub output_size: usize,
}

/// Whether `l0` is a full subcomplex of `l`: path-closed, and containing
/// every simplex of `l` whose vertices all lie in `l0`.
pub fn is_full_subcomplex(l0: &SimplicialComplex, l: &SimplicialComplex) -> Result<bool> {
    if !l0.is_subcomplex_of(l) {
        return Err(Error::invalid("the candidate is not a subcomplex"));
    }
    let inside = l0.vertices();
    let engine = PathEngine::new(l);

    // a vertex outside l0 both reachable from l0 and reaching l0 sits on a
    // path between two vertices of l0
    let mut from_inside = BTreeSet::new();
    let mut to_inside = BTreeSet::new();
    for &v in inside {
        for &s in engine.successors(v) {
            from_inside.extend(engine.reachable_from(s));
        }
        for &p in engine.predecessors(v) {
            to_inside.extend(engine.reaching(p));
        }
    }
    if from_inside.intersection(&to_inside).any(|x| !inside.contains(x)) {
        return Ok(false);
    }

    // every face of σ with vertices in l0 is a face of σ ∩ l0
    Ok(l.maximal_simplices().all(|s| {
        let restricted: Vec<Vertex> = s.iter().copied().filter(|v| inside.contains(v)).collect();
        l0.contains(&restricted)
    }))
}

/// `L[i, j]`: simplices with every vertex in `i..=j`.
pub fn interval_restriction(l: &SimplicialComplex, i: Vertex, j: Vertex) -> Result<SimplicialComplex> {
    if i > j {
        return Err(Error::invalid(format!("empty vertex interval [{i}, {j}]")));
    }
    Ok(l.induced(|v| (i..=j).contains(&v)))
}

/// `(sources, sinks)`: vertices without incoming, resp. outgoing, edges.
pub fn sources_and_sinks(l: &SimplicialComplex) -> (BTreeSet<Vertex>, BTreeSet<Vertex>) {
    let edges = l.edges();
    let has_in: BTreeSet<Vertex> = edges.iter().map(|&(_, b)| b).collect();
    let has_out: BTreeSet<Vertex> = edges.iter().map(|&(a, _)| a).collect();
    let sources = l.vertices().iter().copied().filter(|v| !has_in.contains(v)).collect();
    let sinks = l.vertices().iter().copied().filter(|v| !has_out.contains(v)).collect();
    (sources, sinks)
}

/// `L(−S)`: simplices with no vertex in `S`.
pub fn delete_vertices(l: &SimplicialComplex, s: &BTreeSet<Vertex>) -> SimplicialComplex {
    l.induced(|v| !s.contains(&v))
}

/// `L(v, w)` computed directly: the subcomplex on vertices lying on some
/// path `v → w` (empty when there is none).
pub fn path_subcomplex(l: &SimplicialComplex, v: Vertex, w: Vertex) -> SimplicialComplex {
    let on = PathEngine::new(l).on_path_vertices(v, w);
    l.induced(|x| on.contains(&x))
}

/// Starting from `L[v, w]`, repeatedly deletes every source and sink other
/// than `v` and `w`. At the fixed point the result is `L(v, w)`; when no
/// path `v → w` exists the endpoints are dropped too, leaving the empty
/// complex.
pub fn minimal_path_subcomplex(
    l: &SimplicialComplex,
    v: Vertex,
    w: Vertex,
) -> Result<(SimplicialComplex, ReductionReport<Vertex>)> {
    for x in [v, w] {
        if !l.has_vertex(x) {
            return Err(Error::UnknownVertex(x.to_string()));
        }
    }
    let mut cur = interval_restriction(l, v, w)?;
    let input_size = l.vertices().len();
    let mut removed = Vec::new();
    let mut iterations = 0;
    loop {
        let (sources, sinks) = sources_and_sinks(&cur);
        let s: BTreeSet<Vertex> = sources.union(&sinks).copied().filter(|&x| x != v && x != w).collect();
        if s.is_empty() {
            break;
        }
        removed.extend(s.iter().copied());
        cur = delete_vertices(&cur, &s);
        iterations += 1;
    }
    // Only {v, w} can remain without an edge between them, in which case
    // no path exists.
    if v != w && !cur.contains(&[v, w]) && cur.vertices().len() == 2 {
        removed.extend([v, w]);
        cur = SimplicialComplex::default();
        iterations += 1;
    }
    let report = ReductionReport {
        pass: "source-sink".into(),
        removed,
        iterations,
        input_size,
        output_size: cur.vertices().len(),
    };
    Ok((cur, report))
}

/// Vertices that belong to exactly one maximal cell.
pub fn corners(k: &CubicalComplex) -> BTreeSet<VertexSet> {
    k.incidence_counts().into_iter().filter(|&(_, n)| n == 1).map(|(f, _)| f).collect()
}

/// `K_x`: the cells that avoid the corner `x`.
pub fn remove_corner(k: &CubicalComplex, x: VertexSet) -> Result<CubicalComplex> {
    match k.cells_containing(x).len() {
        1 => Ok(k.without_vertex(x)),
        0 => Err(Error::invalid(format!("{x} is not a vertex of the complex"))),
        n => Err(Error::invalid(format!("{x} is not a corner: it lies in {n} maximal cells"))),
    }
}

/// Removes unprotected corners one at a time, smallest first in canonical
/// order, until every corner is protected.
pub fn corner_reduce(
    k: &CubicalComplex,
    protected: &BTreeSet<VertexSet>,
) -> (CubicalComplex, ReductionReport<VertexSet>) {
    let input_size = k.vertices().len();
    let mut cur = k.clone();
    let mut removed = Vec::new();
    while let Some(x) = corners(&cur).into_iter().find(|x| !protected.contains(x)) {
        cur = cur.without_vertex(x);
        removed.push(x);
    }
    let report = ReductionReport {
        pass: "corner".into(),
        iterations: removed.len(),
        removed,
        input_size,
        output_size: cur.vertices().len(),
    };
    (cur, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{hypercube, necklace, source_sink_example, swiss_flag, GridSpec};
    use crate::vertex_set::Interval;

    fn set(e: &[usize]) -> VertexSet {
        e.iter().copied().collect()
    }

    #[test]
    fn face_of_horn_is_full() {
        let horn = SimplicialComplex::horn(3, 0);
        let face = SimplicialComplex::new([1, 2, 3], [vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert!(is_full_subcomplex(&face, &horn).unwrap());
        assert!(is_full_subcomplex(&horn, &horn).unwrap());
    }

    #[test]
    fn missing_edge_breaks_fullness() {
        let d2 = SimplicialComplex::simplex(2);
        let ends = SimplicialComplex::new([0, 2], Vec::<Vec<usize>>::new()).unwrap();
        assert!(!is_full_subcomplex(&ends, &d2).unwrap());
        let not_sub = SimplicialComplex::from_simplices([vec![0, 5]]).unwrap();
        assert!(is_full_subcomplex(&not_sub, &d2).is_err());
    }

    #[test]
    fn path_closure_is_checked() {
        // 0 → 1 → 2 with {0, 2} but not 1
        let l = SimplicialComplex::from_simplices([vec![0, 1], vec![1, 2]]).unwrap();
        let ends = SimplicialComplex::new([0, 2], Vec::<Vec<usize>>::new()).unwrap();
        assert!(!is_full_subcomplex(&ends, &l).unwrap());
    }

    #[test]
    fn interval_restrictions() {
        let first_bead = interval_restriction(&necklace(3), 0, 2).unwrap();
        assert_eq!(first_bead, SimplicialComplex::boundary(2));
        let d2 = SimplicialComplex::simplex(2);
        assert_eq!(interval_restriction(&d2, 0, 2).unwrap(), d2);
        let single = interval_restriction(&d2, 1, 1).unwrap();
        assert_eq!(single.vertices().iter().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(single.maximal_simplices().count(), 0);
        assert!(interval_restriction(&d2, 2, 1).is_err());
    }

    #[test]
    fn sources_sinks_of_examples() {
        let (src, _) = sources_and_sinks(&SimplicialComplex::horn(3, 0));
        assert!(src.contains(&0));

        let ex = source_sink_example();
        let [v0, v1, v2, v3, v4] = ex.labels;
        let (src, snk) = sources_and_sinks(&ex.complex);
        assert!(src.contains(&v1) && snk.contains(&v3));

        let s = BTreeSet::from([v1, v3]);
        let reduced = delete_vertices(&ex.complex, &s);
        assert_eq!(reduced.maximal_simplices().count(), 0);
        assert_eq!(reduced.vertices(), &BTreeSet::from([v0, v2, v4]));

        let point = SimplicialComplex::new([7], Vec::<Vec<usize>>::new()).unwrap();
        let (src, snk) = sources_and_sinks(&point);
        assert!(src.contains(&7) && snk.contains(&7));
    }

    #[test]
    fn delete_from_boundary() {
        let b = SimplicialComplex::boundary(2);
        assert_eq!(delete_vertices(&b, &BTreeSet::new()), b);
        let e = delete_vertices(&b, &BTreeSet::from([1]));
        assert_eq!(e, SimplicialComplex::from_simplices([vec![0, 2]]).unwrap());
    }

    #[test]
    fn minimal_subcomplex_of_worked_example_is_empty() {
        let ex = source_sink_example();
        let [v0, _, v2, _, v4] = ex.labels;
        let (l, report) = minimal_path_subcomplex(&ex.complex, v0, v4).unwrap();
        assert!(l.is_empty());
        assert_eq!(report.iterations, 2);
        assert_eq!(report.removed[0], v2);
    }

    #[test]
    fn minimal_subcomplex_of_horn() {
        let (l, _) = minimal_path_subcomplex(&SimplicialComplex::horn(3, 0), 1, 3).unwrap();
        let face = SimplicialComplex::from_simplices([vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(l, face);
        let d2 = SimplicialComplex::simplex(2);
        assert_eq!(minimal_path_subcomplex(&d2, 0, 2).unwrap().0, d2);
    }

    #[test]
    fn corners_of_simple_complexes() {
        assert_eq!(corners(&hypercube(3)).len(), 8);
        let two = CubicalComplex::new(
            3,
            [Interval::new(set(&[]), set(&[1, 2])).unwrap(), Interval::new(set(&[1]), set(&[1, 2, 3])).unwrap()],
        )
        .unwrap();
        let c = corners(&two);
        // 6 vertices, 2 of them shared
        assert_eq!(c.len(), 4);
        assert!(!c.contains(&set(&[1])) && !c.contains(&set(&[1, 2])));
    }

    #[test]
    fn swiss_flag_corners() {
        let c = corners(&swiss_flag());
        assert_eq!(c.len(), 8);
        let g = crate::generators::swiss_flag_spec();
        for (i, j) in [(1, 1), (2, 1), (1, 2), (2, 2), (0, 0), (3, 3), (3, 0), (0, 3)] {
            assert!(c.contains(&g.vertex(i, j)), "({i},{j}) should be a corner");
        }
    }

    #[test]
    fn corner_removal() {
        let k = remove_corner(&hypercube(1), set(&[1])).unwrap();
        assert_eq!(k.vertices(), vec![VertexSet::EMPTY]);
        let k = remove_corner(&hypercube(2), set(&[1])).unwrap();
        assert_eq!(k.maximal_cells().count(), 2);
        let g = GridSpec::new(2, 1);
        let k = g.build().unwrap();
        assert!(remove_corner(&k, g.vertex(1, 0)).is_err());
        assert!(remove_corner(&k, set(&[2])).is_err());
    }

    #[test]
    fn corner_reduce_respects_protection() {
        let all: BTreeSet<VertexSet> = hypercube(2).vertices().into_iter().collect();
        let (k, report) = corner_reduce(&hypercube(2), &all);
        assert_eq!(k, hypercube(2));
        assert!(report.removed.is_empty());

        let ends = BTreeSet::from([VertexSet::EMPTY, set(&[1, 2])]);
        let (k, report) = corner_reduce(&hypercube(2), &ends);
        assert!(report.removed.iter().all(|x| !ends.contains(x)));
        assert!(k.contains_vertex(VertexSet::EMPTY) && k.contains_vertex(set(&[1, 2])));
    }
}
