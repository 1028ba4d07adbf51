//! Brute-force path categories.
//!
//! Morphisms `v → w` are directed edge-paths modulo the elementary homotopies
//! generated by 2-simplices: a triangle `{a, b, c}` identifies the edge
//! `a → c` with the composite `a → b → c`. Hom sets are computed by
//! enumerating every path and taking connected components of the homotopy
//! graph with a union-find.

mod category;
mod count;
mod path;
pub(crate) mod union_find;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

pub use category::{compose, path_category, PathCategory};
pub use path::EdgePath;

use crate::error::{Error, Result};
use crate::simplicial::{SimplicialComplex, Vertex};
use union_find::UnionFind;

/// One morphism class of a hom set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub source: Vertex,
    pub target: Vertex,
    pub class_id: usize,
    /// Lexicographically least vertex sequence in the class.
    pub representative: EdgePath,
}

/// The morphisms `source → target`, with an index from paths to classes.
#[derive(Clone, Debug)]
pub struct HomSet {
    pub source: Vertex,
    pub target: Vertex,
    pub classes: Vec<Morphism>,
    index: HashMap<EdgePath, usize>,
}

impl HomSet {
    pub(crate) fn from_parts(
        source: Vertex,
        target: Vertex,
        classes: Vec<Morphism>,
        index: HashMap<EdgePath, usize>,
    ) -> Self {
        HomSet { source, target, classes, index }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class id of an indexed path.
    pub fn class_of(&self, path: &EdgePath) -> Option<usize> {
        self.index.get(path).copied()
    }

    pub fn morphism_of(&self, path: &EdgePath) -> Option<&Morphism> {
        self.class_of(path).map(|id| &self.classes[id])
    }

    /// Number of indexed paths (every path `source → target` for hom sets
    /// computed by enumeration).
    pub fn indexed_paths(&self) -> usize {
        self.index.len()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &EdgePath> + '_ {
        self.classes.iter().map(|m| &m.representative)
    }
}

/// Adjacency and triangle index over the 2-skeleton of a simplicial complex.
///
/// Immutable once built; hom sets for different pairs can be computed from
/// shared references on any number of threads.
#[derive(Clone, Debug)]
pub struct PathEngine {
    vertices: BTreeSet<Vertex>,
    succ: BTreeMap<Vertex, Vec<Vertex>>,
    pred: BTreeMap<Vertex, Vec<Vertex>>,
    /// `(a, c) ↦ [b]` for every triangle `a < b < c`.
    middles: HashMap<(Vertex, Vertex), Vec<Vertex>>,
    triangles: HashSet<(Vertex, Vertex, Vertex)>,
}

impl PathEngine {
    pub fn new(l: &SimplicialComplex) -> Self {
        let vertices = l.vertices().clone();
        let mut succ: BTreeMap<Vertex, Vec<Vertex>> = vertices.iter().map(|&v| (v, Vec::new())).collect();
        let mut pred = succ.clone();
        for (a, b) in l.edges() {
            succ.get_mut(&a).unwrap().push(b);
            pred.get_mut(&b).unwrap().push(a);
        }
        let mut middles: HashMap<(Vertex, Vertex), Vec<Vertex>> = HashMap::new();
        let mut triangles = HashSet::new();
        for (a, b, c) in l.triangles() {
            middles.entry((a, c)).or_default().push(b);
            triangles.insert((a, b, c));
        }
        // BTreeSet iteration keeps all adjacency lists ascending
        PathEngine { vertices, succ, pred, middles, triangles }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.succ.get(&a).is_some_and(|s| s.binary_search(&b).is_ok())
    }

    pub fn has_triangle(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        self.triangles.contains(&(a, b, c))
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        self.succ.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        self.pred.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.vertices.contains(&v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// Vertices reachable from `v` (including `v`).
    pub fn reachable_from(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.search(v, &self.succ)
    }

    /// Vertices from which `w` is reachable (including `w`).
    pub fn reaching(&self, w: Vertex) -> BTreeSet<Vertex> {
        self.search(w, &self.pred)
    }

    fn search(&self, start: Vertex, adj: &BTreeMap<Vertex, Vec<Vertex>>) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::new();
        if !self.vertices.contains(&start) {
            return seen;
        }
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Vertices lying on some path `v → w`.
    pub fn on_path_vertices(&self, v: Vertex, w: Vertex) -> BTreeSet<Vertex> {
        let fwd = self.reachable_from(v);
        let back = self.reaching(w);
        fwd.intersection(&back).copied().collect()
    }

    /// Calls `visit` on every path `v → w` in depth-first order, trying
    /// successors in ascending order.
    pub fn for_each_path(&self, v: Vertex, w: Vertex, mut visit: impl FnMut(&[Vertex])) -> Result<()> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        let live = self.reaching(w);
        if !live.contains(&v) {
            return Ok(());
        }
        let mut stack = vec![v];
        self.dfs(w, &live, &mut stack, &mut visit);
        Ok(())
    }

    fn dfs(&self, w: Vertex, live: &BTreeSet<Vertex>, stack: &mut Vec<Vertex>, visit: &mut impl FnMut(&[Vertex])) {
        let x = *stack.last().unwrap();
        if x == w {
            visit(stack);
            return;
        }
        for &y in &self.succ[&x] {
            if y <= w && live.contains(&y) {
                stack.push(y);
                self.dfs(w, live, stack, visit);
                stack.pop();
            }
        }
    }

    pub fn enumerate_paths(&self, v: Vertex, w: Vertex) -> Result<Vec<EdgePath>> {
        let mut out = Vec::new();
        self.for_each_path(v, w, |p| out.push(EdgePath::new(p.to_vec())))?;
        Ok(out)
    }

    /// Paths one elementary homotopy away from `p`: expansions `a→c` ⇒
    /// `a→b→c` and contractions `a→b→c` ⇒ `a→c`, for triangles `{a,b,c}`.
    pub fn elementary_homotopies(&self, p: &EdgePath) -> Vec<EdgePath> {
        let vs = p.vertices();
        let mut out = BTreeSet::new();
        for i in 0..vs.len().saturating_sub(1) {
            let (a, c) = (vs[i], vs[i + 1]);
            for &b in self.middles.get(&(a, c)).into_iter().flatten() {
                let mut q = Vec::with_capacity(vs.len() + 1);
                q.extend_from_slice(&vs[..=i]);
                q.push(b);
                q.extend_from_slice(&vs[i + 1..]);
                out.insert(EdgePath::new(q));
            }
        }
        for i in 0..vs.len().saturating_sub(2) {
            if self.triangles.contains(&(vs[i], vs[i + 1], vs[i + 2])) {
                let mut q = vs.to_vec();
                q.remove(i + 1);
                out.insert(EdgePath::new(q));
            }
        }
        out.into_iter().collect()
    }

    /// The hom set `P(L)(v, w)`.
    pub fn hom_set(&self, v: Vertex, w: Vertex) -> Result<HomSet> {
        let paths = self.enumerate_paths(v, w)?;
        let index: HashMap<EdgePath, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut uf = UnionFind::new(paths.len());
        // contractions are inverse expansions, so expansions alone generate
        // the relation on the (complete) path set
        for (i, p) in paths.iter().enumerate() {
            let vs = p.vertices();
            for k in 0..vs.len().saturating_sub(1) {
                let Some(mids) = self.middles.get(&(vs[k], vs[k + 1])) else { continue };
                for &b in mids {
                    let mut q = Vec::with_capacity(vs.len() + 1);
                    q.extend_from_slice(&vs[..=k]);
                    q.push(b);
                    q.extend_from_slice(&vs[k + 1..]);
                    let j = index[&EdgePath::new(q)];
                    uf.union(i, j);
                }
            }
        }
        let (n, comp) = uf.components();
        let mut reps: Vec<Option<usize>> = vec![None; n];
        for (i, &c) in comp.iter().enumerate() {
            if reps[c].is_none_or(|r| paths[i] < paths[r]) {
                reps[c] = Some(i);
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| paths[reps[x].unwrap()].cmp(&paths[reps[y].unwrap()]));
        let mut class_id = vec![0; n];
        for (id, &c) in order.iter().enumerate() {
            class_id[c] = id;
        }
        let classes = order
            .iter()
            .enumerate()
            .map(|(id, &c)| Morphism {
                source: v,
                target: w,
                class_id: id,
                representative: paths[reps[c].unwrap()].clone(),
            })
            .collect();
        let index = index.into_iter().map(|(p, i)| (p, class_id[comp[i]])).collect();
        Ok(HomSet::from_parts(v, w, classes, index))
    }
}

pub fn enumerate_paths(l: &SimplicialComplex, v: Vertex, w: Vertex) -> Result<Vec<EdgePath>> {
    PathEngine::new(l).enumerate_paths(v, w)
}

pub fn elementary_homotopies(l: &SimplicialComplex, p: &EdgePath) -> Vec<EdgePath> {
    PathEngine::new(l).elementary_homotopies(p)
}

pub fn hom_set(l: &SimplicialComplex, v: Vertex, w: Vertex) -> Result<HomSet> {
    PathEngine::new(l).hom_set(v, w)
}
