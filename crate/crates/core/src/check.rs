//! Brute-force verification of the reduction contracts.
//!
//! Each checker computes hom sets on both sides of an inclusion (or a
//! decomposition) with the enumeration engine and confirms that the induced
//! map on morphism classes is a bijection. Vertex pairs that fail are
//! reported with both counts.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cubical::CubicalComplex;
use crate::engine::{EdgePath, PathEngine};
use crate::error::Result;
use crate::frontier::{frontier_hom, level_triangulation_iso_check};
use crate::reduction::{
    corner_reduce, corners, delete_vertices, interval_restriction, minimal_path_subcomplex, path_subcomplex,
    remove_corner, sources_and_sinks,
};
use crate::refinement::{refine, PosetMono};
use crate::simplicial::{SimplicialComplex, Vertex};
use crate::triangulate::{triangulate, triangulate_sk2, Triangulation};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub context: String,
    pub from: String,
    pub to: String,
    /// `|hom|` on the reduced (or decomposed) side.
    pub reduced: usize,
    /// `|hom|` from direct computation on the full complex.
    pub direct: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.pairs_checked += other.pairs_checked;
        self.mismatches.extend(other.mismatches);
    }
}

/// Compares `hom_sub(v, w)` with `hom_full(map v, map w)` for each pair,
/// mapping every class representative across and checking the image
/// classes are distinct and exhaust the target.
pub fn inclusion_bijection(
    sub: &PathEngine,
    full: &PathEngine,
    map: impl Fn(Vertex) -> Vertex,
    pairs: impl IntoIterator<Item = (Vertex, Vertex)>,
    context: &str,
    name: impl Fn(Vertex) -> String,
) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for (v, w) in pairs {
        report.pairs_checked += 1;
        let small = sub.hom_set(v, w)?;
        let big = full.hom_set(map(v), map(w))?;
        let images: BTreeSet<Option<usize>> = small.representatives().map(|p| big.class_of(&p.map(&map))).collect();
        let bijective = small.len() == big.len() && images.len() == small.len() && !images.contains(&None);
        if !bijective {
            report.mismatches.push(Mismatch {
                context: context.to_string(),
                from: name(v),
                to: name(w),
                reduced: small.len(),
                direct: big.len(),
            });
        }
    }
    Ok(report)
}

fn ordered_pairs(vs: &BTreeSet<Vertex>) -> Vec<(Vertex, Vertex)> {
    let v: Vec<Vertex> = vs.iter().copied().collect();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i..v.len() {
            out.push((v[i], v[j]));
        }
    }
    out
}

/// Every interval restriction `L[i, j]`, all pairs inside it.
pub fn check_interval_restriction(l: &SimplicialComplex) -> Result<CheckReport> {
    let full = PathEngine::new(l);
    let mut report = CheckReport::default();
    for (i, j) in ordered_pairs(l.vertices()) {
        let sub = interval_restriction(l, i, j)?;
        let engine = PathEngine::new(&sub);
        report.merge(inclusion_bijection(
            &engine,
            &full,
            |x| x,
            ordered_pairs(sub.vertices()),
            &format!("L[{i},{j}]"),
            |x| x.to_string(),
        )?);
    }
    Ok(report)
}

/// Deleting all sources and sinks at once, plus the per-pair iterated
/// deletion against both the direct count and the direct `L(v, w)`.
pub fn check_source_sink(l: &SimplicialComplex) -> Result<CheckReport> {
    let full = PathEngine::new(l);
    let (sources, sinks) = sources_and_sinks(l);
    let s: BTreeSet<Vertex> = sources.union(&sinks).copied().collect();
    let reduced = delete_vertices(l, &s);
    let mut report = inclusion_bijection(
        &PathEngine::new(&reduced),
        &full,
        |x| x,
        ordered_pairs(reduced.vertices()),
        "L(-S)",
        |x| x.to_string(),
    )?;
    for (v, w) in ordered_pairs(l.vertices()) {
        let (minimal, _) = minimal_path_subcomplex(l, v, w)?;
        let direct = path_subcomplex(l, v, w);
        let direct_count = full.hom_set(v, w)?.len();
        if minimal.is_empty() {
            report.pairs_checked += 1;
            if direct_count != 0 || !direct.is_empty() {
                report.mismatches.push(Mismatch {
                    context: "L(v,w) empty".into(),
                    from: v.to_string(),
                    to: w.to_string(),
                    reduced: 0,
                    direct: direct_count,
                });
            }
            continue;
        }
        let mut r =
            inclusion_bijection(&PathEngine::new(&minimal), &full, |x| x, [(v, w)], "L(v,w)", |x| x.to_string())?;
        if minimal != direct {
            r.mismatches.push(Mismatch {
                context: "iterated deletion differs from direct L(v,w)".into(),
                from: v.to_string(),
                to: w.to_string(),
                reduced: minimal.vertices().len(),
                direct: direct.vertices().len(),
            });
        }
        report.merge(r);
    }
    Ok(report)
}

/// Inclusion `|K'| → |K|` between cubical complexes, pairs given as vertex
/// sets of `K'`.
fn cubical_inclusion(
    sub: &CubicalComplex,
    full_tri: &Triangulation,
    full: &PathEngine,
    pairs: impl IntoIterator<Item = (VertexSet, VertexSet)>,
    context: &str,
) -> Result<CheckReport> {
    let sub_tri = triangulate_sk2(sub);
    let engine = PathEngine::new(&sub_tri.complex);
    let label_pairs: Vec<(Vertex, Vertex)> =
        pairs.into_iter().map(|(a, b)| (sub_tri.label(a).unwrap(), sub_tri.label(b).unwrap())).collect();
    inclusion_bijection(
        &engine,
        full,
        |x| full_tri.label(sub_tri.vertex_set(x).unwrap()).unwrap(),
        label_pairs,
        context,
        |x| sub_tri.vertex_set(x).unwrap().to_string(),
    )
}

fn vertex_pairs(k: &CubicalComplex) -> Vec<(VertexSet, VertexSet)> {
    let vs = k.vertices();
    let mut out = Vec::new();
    for &a in &vs {
        for &b in &vs {
            if a.is_subset(b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Removing each corner on its own.
pub fn check_corners(k: &CubicalComplex) -> Result<CheckReport> {
    let tri = triangulate_sk2(k);
    let full = PathEngine::new(&tri.complex);
    let mut report = CheckReport::default();
    for x in corners(k) {
        let kx = remove_corner(k, x)?;
        report.merge(cubical_inclusion(&kx, &tri, &full, vertex_pairs(&kx), &format!("K_{x}"))?);
    }
    Ok(report)
}

/// `corner_reduce` with the given protected set.
pub fn check_corner_reduce(k: &CubicalComplex, protected: &BTreeSet<VertexSet>) -> Result<CheckReport> {
    let tri = triangulate_sk2(k);
    let full = PathEngine::new(&tri.complex);
    let (reduced, _) = corner_reduce(k, protected);
    cubical_inclusion(&reduced, &tri, &full, vertex_pairs(&reduced), "corner_reduce")
}

/// `α_*: P(K)(A, B) → P(K_α)(α(A), α(B))` for all vertex pairs of `K`.
pub fn check_refinement(k: &CubicalComplex, alpha: &PosetMono) -> Result<CheckReport> {
    let ka = refine(k, alpha)?;
    let (t, ta) = (triangulate_sk2(k), triangulate_sk2(&ka));
    let (e, ea) = (PathEngine::new(&t.complex), PathEngine::new(&ta.complex));
    let pairs: Vec<(Vertex, Vertex)> =
        vertex_pairs(k).into_iter().map(|(a, b)| (t.label(a).unwrap(), t.label(b).unwrap())).collect();
    inclusion_bijection(
        &e,
        &ea,
        |x| ta.label(alpha.apply(t.vertex_set(x).unwrap())).unwrap(),
        pairs,
        "K -> K_alpha",
        |x| t.vertex_set(x).unwrap().to_string(),
    )
}

/// Frontier coequalizer against direct hom sets: counts and canonical
/// representatives must agree. `cuts = None` means every cut.
pub fn check_frontier(
    k: &CubicalComplex,
    cuts: Option<&[usize]>,
    pair: Option<(VertexSet, VertexSet)>,
) -> Result<CheckReport> {
    let tri = triangulate_sk2(k);
    let full = PathEngine::new(&tri.complex);
    let all_cuts: Vec<usize> = (0..k.ambient()).collect();
    let cuts = cuts.unwrap_or(&all_cuts);
    let mut report = CheckReport::default();
    let vs = k.vertices();
    for &m in cuts {
        let pairs: Vec<(VertexSet, VertexSet)> = match pair {
            Some(p) => vec![p],
            None => vs
                .iter()
                .flat_map(|&u| vs.iter().map(move |&v| (u, v)))
                .filter(|(u, v)| u.len() <= m && m < v.len() && u.is_subset(*v))
                .collect(),
        };
        for (u, v) in pairs {
            report.pairs_checked += 1;
            let f = frontier_hom(k, m, u, v)?;
            let direct = full.hom_set(tri.label(u).unwrap(), tri.label(v).unwrap())?;
            let reps_f: Vec<&EdgePath> = f.hom.representatives().collect();
            let reps_d: Vec<&EdgePath> = direct.representatives().collect();
            if reps_f != reps_d {
                report.mismatches.push(Mismatch {
                    context: format!("cut {m}"),
                    from: u.to_string(),
                    to: v.to_string(),
                    reduced: f.hom.len(),
                    direct: direct.len(),
                });
            }
        }
    }
    Ok(report)
}

/// Hom sets of the 2-skeletal triangulation against one extended with
/// 3-simplices.
pub fn check_skeleton(k: &CubicalComplex) -> Result<CheckReport> {
    let t2 = triangulate_sk2(k);
    let t3 = triangulate(k, 3);
    let pairs = ordered_pairs(t2.complex.vertices());
    inclusion_bijection(
        &PathEngine::new(&t2.complex),
        &PathEngine::new(&t3.complex),
        |x| x,
        pairs,
        "sk2 |K| vs |K| with 3-simplices",
        |x| t2.vertex_set(x).unwrap().to_string(),
    )
}

/// Same comparison for a simplicial complex against its 2-skeleton.
pub fn check_simplicial_skeleton(l: &SimplicialComplex) -> Result<CheckReport> {
    let l2 = crate::simplicial::sk2(l);
    inclusion_bijection(
        &PathEngine::new(&l2),
        &PathEngine::new(l),
        |x| x,
        ordered_pairs(l.vertices()),
        "sk2(L) vs L",
        |x| x.to_string(),
    )
}

/// Level-subcomplex triangulation checks for all `r ≤ s`.
pub fn check_levels(k: &CubicalComplex) -> CheckReport {
    let mut report = CheckReport::default();
    let n = k.ambient();
    for r in 0..=n {
        for s in r..=n {
            report.pairs_checked += 1;
            if !level_triangulation_iso_check(k, r, s) {
                report.mismatches.push(Mismatch {
                    context: "level triangulation".into(),
                    from: r.to_string(),
                    to: s.to_string(),
                    reduced: 0,
                    direct: 0,
                });
            }
        }
    }
    report
}
