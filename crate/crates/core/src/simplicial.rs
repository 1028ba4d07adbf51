//! Finite ordered simplicial complexes `L ⊆ Δ^N`.
//!
//! Vertices are integer labels; a simplex is a strictly increasing label
//! tuple, so every 1-simplex `(a, b)` is directed from `a` to `b`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SimplicialComplex {
    vertices: BTreeSet<Vertex>,
    /// Maximal simplices of dimension ≥ 1. Isolated vertices live only in
    /// `vertices`.
    maximal: BTreeSet<Vec<Vertex>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `simplices` plus the listed vertices.
    /// Each simplex is sorted; repeated labels inside a simplex are rejected.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        simplices: impl IntoIterator<Item = Vec<Vertex>>,
    ) -> Result<Self> {
        let mut vs: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut gens = Vec::new();
        for mut s in simplices {
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("degenerate simplex {s:?}")));
            }
            vs.extend(s.iter().copied());
            gens.push(s);
        }
        Ok(SimplicialComplex { vertices: vs, maximal: maximalize(gens) })
    }

    pub fn from_simplices(simplices: impl IntoIterator<Item = Vec<Vertex>>) -> Result<Self> {
        Self::new([], simplices)
    }

    /// The full simplex `Δ^n` on vertices `0..=n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_simplices([(0..=n).collect()]).unwrap()
    }

    /// The boundary `∂Δ^n`.
    pub fn boundary(n: usize) -> Self {
        let faces = (0..=n).map(|skip| (0..=n).filter(|&v| v != skip).collect());
        Self::new(0..=n, faces).unwrap()
    }

    /// The horn `Λ^n_k`: all faces of `Δ^n` except the top cell and the
    /// face opposite `k`.
    pub fn horn(n: usize, k: usize) -> Self {
        let faces = (0..=n).filter(|&skip| skip != k).map(|skip| (0..=n).filter(|&v| v != skip).collect());
        Self::new(0..=n, faces).unwrap()
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Maximal simplices of dimension ≥ 1.
    pub fn maximal_simplices(&self) -> impl Iterator<Item = &Vec<Vertex>> + '_ {
        self.maximal.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            None
        } else {
            Some(self.maximal.iter().map(|s| s.len() - 1).max().unwrap_or(0))
        }
    }

    /// Membership of an arbitrary simplex (given in any order).
    pub fn contains(&self, simplex: &[Vertex]) -> bool {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        s.dedup();
        match s.len() {
            0 => true,
            1 => self.vertices.contains(&s[0]),
            _ => self.maximal.iter().any(|m| is_sorted_subset(&s, m)),
        }
    }

    pub fn edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    out.insert((m[i], m[j]));
                }
            }
        }
        out
    }

    pub fn triangles(&self) -> BTreeSet<(Vertex, Vertex, Vertex)> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    for k in j + 1..m.len() {
                        out.insert((m[i], m[j], m[k]));
                    }
                }
            }
        }
        out
    }

    /// Every simplex of dimension ≤ `max_dim` (closure of the maximal
    /// simplices). Exponential in the dimension; meant for small complexes.
    pub fn faces(&self, max_dim: usize) -> BTreeSet<Vec<Vertex>> {
        let mut out: BTreeSet<Vec<Vertex>> = self.vertices.iter().map(|&v| vec![v]).collect();
        for m in &self.maximal {
            let k = m.len();
            for mask in 1u64..(1u64 << k) {
                if mask.count_ones() as usize > max_dim + 1 || mask.count_ones() < 2 {
                    continue;
                }
                out.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| m[i]).collect());
            }
        }
        out
    }

    /// Number of simplices of exactly dimension `dim`.
    pub fn count(&self, dim: usize) -> usize {
        self.faces(dim).iter().filter(|s| s.len() == dim + 1).count()
    }

    /// The `k`-skeleton.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let mut gens = Vec::new();
        for m in &self.maximal {
            if m.len() <= k + 1 {
                gens.push(m.clone());
            } else {
                subsets_of_size(m, k + 1, &mut gens);
            }
        }
        SimplicialComplex { vertices: self.vertices.clone(), maximal: maximalize(gens) }
    }

    /// The subcomplex of simplices whose vertices all satisfy `keep`.
    pub fn induced(&self, keep: impl Fn(Vertex) -> bool) -> SimplicialComplex {
        let vertices: BTreeSet<Vertex> = self.vertices.iter().copied().filter(|&v| keep(v)).collect();
        let gens = self.maximal.iter().map(|m| m.iter().copied().filter(|&v| keep(v)).collect::<Vec<_>>()).collect();
        SimplicialComplex { vertices, maximal: maximalize(gens) }
    }

    /// `true` iff every simplex of `self` is a simplex of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.vertices.is_subset(&other.vertices) && self.maximal.iter().all(|m| other.contains(m))
    }
}

/// The 2-skeleton; the path category only sees simplices up to dimension 2.
pub fn sk2(l: &SimplicialComplex) -> SimplicialComplex {
    l.skeleton(2)
}

fn subsets_of_size(m: &[Vertex], k: usize, out: &mut Vec<Vec<Vertex>>) {
    fn rec(m: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m.len() {
            if m.len() - i < k - cur.len() {
                break;
            }
            cur.push(m[i]);
            rec(m, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut Vec::with_capacity(k), out);
}

fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn maximalize(gens: Vec<Vec<Vertex>>) -> BTreeSet<Vec<Vertex>> {
    let mut gens: Vec<Vec<Vertex>> =
        gens.into_iter().filter(|s| s.len() >= 2).collect::<BTreeSet<_>>().into_iter().collect();
    gens.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Vec<Vertex>> = Vec::new();
    for s in gens {
        if !kept.iter().any(|k| is_sorted_subset(&s, k)) {
            kept.push(s);
        }
    }
    kept.into_iter().collect()
}

/// Validates raw vertex and simplex lists against the complex invariants.
pub fn validate_simplices(vertices: &[Vertex], simplices: &[Vec<Vertex>]) -> Vec<String> {
    let mut violations = Vec::new();
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        violations.push("duplicate vertex label".to_string());
    } else if vertices.windows(2).any(|w| w[0] > w[1]) {
        violations.push("vertex labels are not sorted ascending".to_string());
    }
    let known: BTreeSet<Vertex> = vertices.iter().copied().collect();
    let mut clean = Vec::new();
    for (k, s) in simplices.iter().enumerate() {
        if s.is_empty() {
            violations.push(format!("simplex {k} is empty"));
            continue;
        }
        if s.windows(2).any(|w| w[0] == w[1]) {
            let what = if s.len() == 2 { "degenerate edge" } else { "degenerate simplex" };
            violations.push(format!("{what} {s:?}"));
            continue;
        }
        if s.windows(2).any(|w| w[0] > w[1]) {
            violations.push(format!("simplex {s:?} is not strictly increasing"));
            continue;
        }
        if let Some(v) = s.iter().find(|v| !known.contains(v)) {
            violations.push(format!("simplex {s:?} uses unlisted vertex {v}"));
        }
        clean.push((k, s));
    }
    for (i, (ki, si)) in clean.iter().enumerate() {
        for (kj, sj) in clean.iter().skip(i + 1) {
            if si == sj {
                violations.push(format!("simplices {ki} and {kj} are equal"));
            } else if is_sorted_subset(si, sj) {
                violations.push(format!("simplex {ki} is a face of simplex {kj}; not maximal"));
            } else if is_sorted_subset(sj, si) {
                violations.push(format!("simplex {kj} is a face of simplex {ki}; not maximal"));
            }
        }
    }
    violations
}

pub fn validate(l: &SimplicialComplex) -> Vec<String> {
    let vs: Vec<Vertex> = l.vertices().iter().copied().collect();
    let ss: Vec<Vec<Vertex>> = l.maximal_simplices().cloned().collect();
    validate_simplices(&vs, &ss)
}
