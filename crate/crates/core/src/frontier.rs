//! Size-level subcomplexes and the frontier split.
//!
//! Cutting `K` at size `M` gives vertex-disjoint full subcomplexes
//! `A = K(0, M)` and `B = K(M+1, n)`. Every path `u → v` with `u ∈ A`,
//! `v ∈ B` crosses from `A` to `B` along exactly one edge `x → y`, so
//! `P(K)(u, v)` is a quotient of `⊔_{x→y} P(A)(u, x) × P(B)(y, v)`. The
//! quotient is generated by the crossing triangles `a < b < c`:
//!
//! * `a, b ∈ A`: `(b→c, p·(a→b), q) ~ (a→c, p, q)`
//! * `b, c ∈ B`: `(a→b, p, (b→c)·q) ~ (a→c, p, q)`
//!
//! Square-shaped relations factor through the square's diagonal as two of
//! these, so both presentations generate the same equivalence.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cubical::CubicalComplex;
use crate::engine::union_find::UnionFind;
use crate::engine::{EdgePath, HomSet, Morphism, PathEngine};
use crate::error::{Error, Result};
use crate::reduction::is_full_subcomplex;
use crate::triangulate::{triangulate_sk2, Triangulation};
use crate::vertex_set::{Interval, VertexSet};

/// `K(r, s)`: cells all of whose vertices have size in `r..=s`.
pub fn level_subcomplex(k: &CubicalComplex, r: usize, s: usize) -> Result<CubicalComplex> {
    if r > s {
        return Err(Error::invalid(format!("empty size range {r}..={s}")));
    }
    let mut cells = Vec::new();
    for cell in k.maximal_cells() {
        let lo = cell.lower.len().max(r);
        let hi = cell.upper.len().min(s);
        if lo > hi {
            continue;
        }
        let free = cell.free();
        for add_low in free.subsets().filter(|x| x.len() == lo - cell.lower.len()) {
            let lower = cell.lower.union(add_low);
            for add_high in free.difference(add_low).subsets().filter(|x| x.len() == hi - lo) {
                cells.push(Interval { lower, upper: lower.union(add_high) });
            }
        }
    }
    CubicalComplex::new(k.ambient(), cells)
}

/// Checks that `|K(r,s)|` equals the full subcomplex of `|K|` on vertices
/// of size `r..=s`, compared as sets of simplices of vertex sets, and that
/// the latter is full in `|K|`.
pub fn level_triangulation_iso_check(k: &CubicalComplex, r: usize, s: usize) -> bool {
    let Ok(level) = level_subcomplex(k, r, s) else { return false };
    let whole = triangulate_sk2(k);
    let part = triangulate_sk2(&level);
    let in_range = |f: VertexSet| (r..=s).contains(&f.len());
    let restricted = whole.complex.induced(|x| in_range(whole.vertex_set(x).unwrap()));

    let as_sets = |t: &Triangulation, c: &crate::simplicial::SimplicialComplex| -> BTreeSet<Vec<VertexSet>> {
        c.faces(2).iter().map(|s| t.path_to_sets(s)).collect()
    };
    if as_sets(&part, &part.complex) != as_sets(&whole, &restricted) {
        return false;
    }
    is_full_subcomplex(&restricted, &whole.complex).unwrap_or(false)
}

/// A two-block split of `K` at size `cut`.
#[derive(Clone, Debug)]
pub struct FrontierDecomposition {
    pub cut: usize,
    /// `A = K(0, cut)`.
    pub lower: CubicalComplex,
    /// `B = K(cut + 1, n)`.
    pub upper: CubicalComplex,
    /// Edges `x → y` of `|K|` with `|x| ≤ cut < |y|`, diagonals included.
    pub crossing_edges: Vec<(VertexSet, VertexSet)>,
    /// Triangles `a < b < c` of `|K|` with `|a| ≤ cut < |c|`.
    pub relation_generators: Vec<(VertexSet, VertexSet, VertexSet)>,
    pub triangulation: Triangulation,
}

pub fn frontier_split(k: &CubicalComplex, cut: usize) -> Result<FrontierDecomposition> {
    let n = k.ambient();
    if cut >= n {
        return Err(Error::invalid(format!("cut {cut} outside 0..{n}")));
    }
    let lower = level_subcomplex(k, 0, cut)?;
    let upper = level_subcomplex(k, cut + 1, n)?;
    let t = triangulate_sk2(k);
    let set = |x| t.vertex_set(x).unwrap();
    let crossing_edges = t
        .complex
        .edges()
        .into_iter()
        .map(|(x, y)| (set(x), set(y)))
        .filter(|(x, y)| x.len() <= cut && cut < y.len())
        .collect();
    let relation_generators = t
        .complex
        .triangles()
        .into_iter()
        .map(|(a, b, c)| (set(a), set(b), set(c)))
        .filter(|(a, _, c)| a.len() <= cut && cut < c.len())
        .collect();
    Ok(FrontierDecomposition { cut, lower, upper, crossing_edges, relation_generators, triangulation: t })
}

/// Cut with the fewest crossing edges among those separating `u` from `v`
/// (smallest such cut on ties).
pub fn best_cut(k: &CubicalComplex, u: VertexSet, v: VertexSet) -> Option<usize> {
    let t = triangulate_sk2(k);
    let edges: Vec<(usize, usize)> = t
        .complex
        .edges()
        .into_iter()
        .map(|(x, y)| (t.vertex_set(x).unwrap().len(), t.vertex_set(y).unwrap().len()))
        .collect();
    (u.len()..v.len().min(k.ambient())).min_by_key(|&m| edges.iter().filter(|&&(a, b)| a <= m && m < b).count())
}

/// Execution order of the two independent sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    Parallel,
    LowerFirst,
    UpperFirst,
}

/// Per-crossing-edge sizes of `P(A)(u, x)` and `P(B)(y, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandStats {
    pub edge: (VertexSet, VertexSet),
    pub a_count: usize,
    pub b_count: usize,
}

/// Result of [`frontier_hom`]. The hom set is labelled by the vertices of
/// `triangulate_sk2(K)`; its index covers the summand representatives.
#[derive(Clone, Debug)]
pub struct FrontierHom {
    pub hom: HomSet,
    pub summands: Vec<SummandStats>,
    pub lower_time: Duration,
    pub upper_time: Duration,
    pub decomposition: FrontierDecomposition,
}

struct Side {
    tri: Triangulation,
    homs: BTreeMap<VertexSet, HomSet>,
    elapsed: Duration,
}

impl Side {
    /// Side hom sets keyed by the far endpoint.
    fn compute(
        complex: &CubicalComplex,
        fixed: VertexSet,
        others: &BTreeSet<VertexSet>,
        fixed_is_source: bool,
    ) -> Result<Side> {
        let start = Instant::now();
        let tri = triangulate_sk2(complex);
        let engine = PathEngine::new(&tri.complex);
        let fixed_label = tri.label(fixed).ok_or_else(|| Error::UnknownVertex(fixed.to_string()))?;
        let mut homs = BTreeMap::new();
        for &x in others {
            let x_label = tri.label(x).expect("frontier endpoints lie in their side");
            let h = if fixed_is_source {
                engine.hom_set(fixed_label, x_label)?
            } else {
                engine.hom_set(x_label, fixed_label)?
            };
            homs.insert(x, h);
        }
        Ok(Side { tri, homs, elapsed: start.elapsed() })
    }

    fn class_of(&self, x: VertexSet, path: &[VertexSet]) -> usize {
        let labels: Vec<usize> = path.iter().map(|&f| self.tri.label(f).unwrap()).collect();
        self.homs[&x].class_of(&EdgePath::new(labels)).expect("composite is a path of the side")
    }

    fn rep(&self, x: VertexSet, class: usize) -> Vec<VertexSet> {
        self.tri.path_to_sets(self.homs[&x].classes[class].representative.vertices())
    }
}

/// `P(K)(u, v)` assembled from `P(A)` and `P(B)` across the cut.
pub fn frontier_hom(k: &CubicalComplex, cut: usize, u: VertexSet, v: VertexSet) -> Result<FrontierHom> {
    frontier_hom_with(k, cut, u, v, Schedule::Parallel)
}

pub fn frontier_hom_with(
    k: &CubicalComplex,
    cut: usize,
    u: VertexSet,
    v: VertexSet,
    schedule: Schedule,
) -> Result<FrontierHom> {
    for x in [u, v] {
        if !k.contains_vertex(x) {
            return Err(Error::UnknownVertex(x.to_string()));
        }
    }
    if !(u.len() <= cut && cut < v.len()) {
        return Err(Error::CutDoesNotSeparate { cut, from: u.to_string(), to: v.to_string() });
    }
    let dec = frontier_split(k, cut)?;

    let xs: BTreeSet<VertexSet> = dec.crossing_edges.iter().map(|e| e.0).collect();
    let ys: BTreeSet<VertexSet> = dec.crossing_edges.iter().map(|e| e.1).collect();
    let lower_job = || Side::compute(&dec.lower, u, &xs, true);
    let upper_job = || Side::compute(&dec.upper, v, &ys, false);
    let (lower, upper) = match schedule {
        Schedule::Parallel => rayon::join(lower_job, upper_job),
        Schedule::LowerFirst => {
            let a = lower_job();
            (a, upper_job())
        }
        Schedule::UpperFirst => {
            let b = upper_job();
            (lower_job(), b)
        }
    };
    let (lower, upper) = (lower?, upper?);

    // summand element (edge, p, q) ↦ offset[edge] + p * |hom_B(y, v)| + q
    let edge_index: HashMap<(VertexSet, VertexSet), usize> =
        dec.crossing_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut offsets = Vec::with_capacity(dec.crossing_edges.len());
    let mut summands = Vec::with_capacity(dec.crossing_edges.len());
    let mut total = 0;
    for &(x, y) in &dec.crossing_edges {
        let (a, b) = (lower.homs[&x].len(), upper.homs[&y].len());
        offsets.push(total);
        total += a * b;
        summands.push(SummandStats { edge: (x, y), a_count: a, b_count: b });
    }
    let element = |e: (VertexSet, VertexSet), p: usize, q: usize| {
        let i = edge_index[&e];
        offsets[i] + p * summands[i].b_count + q
    };

    let mut uf = UnionFind::new(total);
    for &(a, b, c) in &dec.relation_generators {
        let (pa, qc) = (lower.homs.get(&a), upper.homs.get(&c));
        let (Some(pa), Some(qc)) = (pa, qc) else { continue };
        for p in 0..pa.len() {
            for q in 0..qc.len() {
                if b.len() <= cut {
                    let mut path = lower.rep(a, p);
                    path.push(b);
                    let pb = lower.class_of(b, &path);
                    uf.union(element((b, c), pb, q), element((a, c), p, q));
                } else {
                    let mut path = vec![b];
                    path.extend(upper.rep(c, q));
                    let qb = upper.class_of(b, &path);
                    uf.union(element((a, b), p, qb), element((a, c), p, q));
                }
            }
        }
    }

    let t = &dec.triangulation;
    let (n, comp) = uf.components();
    let mut paths: Vec<EdgePath> = Vec::with_capacity(total);
    for &(x, y) in &dec.crossing_edges {
        for p in 0..lower.homs[&x].len() {
            for q in 0..upper.homs[&y].len() {
                let mut sets = lower.rep(x, p);
                sets.extend(upper.rep(y, q));
                paths.push(EdgePath::new(sets.iter().map(|&f| t.label(f).unwrap()).collect()));
            }
        }
    }
    let mut best: Vec<Option<usize>> = vec![None; n];
    for (i, &c) in comp.iter().enumerate() {
        if best[c].is_none_or(|b| paths[i] < paths[b]) {
            best[c] = Some(i);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| paths[best[x].unwrap()].cmp(&paths[best[y].unwrap()]));
    let mut class_id = vec![0; n];
    for (id, &c) in order.iter().enumerate() {
        class_id[c] = id;
    }
    let (us, vs) = (t.label(u).unwrap(), t.label(v).unwrap());
    let classes = order
        .iter()
        .enumerate()
        .map(|(id, &c)| Morphism {
            source: us,
            target: vs,
            class_id: id,
            representative: paths[best[c].unwrap()].clone(),
        })
        .collect();
    let index = paths.into_iter().enumerate().map(|(i, p)| (p, class_id[comp[i]])).collect();

    Ok(FrontierHom {
        hom: HomSet::from_parts(us, vs, classes, index),
        summands,
        lower_time: lower.elapsed,
        upper_time: upper.elapsed,
        decomposition: dec,
    })
}
