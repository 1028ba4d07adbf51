//! Refinement along meet- and join-preserving monomorphisms
//! `α: P({1..m}) → P({1..n})`.

use crate::cubical::CubicalComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{Interval, VertexSet};

/// A lattice monomorphism given by its values on `∅` and on singletons; the
/// value on `A` is `α(∅) ∪ ⋃_{i ∈ A} α({i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMono {
    pub source_dim: usize,
    pub target_dim: usize,
    pub image_of_empty: VertexSet,
    /// `singleton_images[i - 1] = α({i})`.
    pub singleton_images: Vec<VertexSet>,
}

impl PosetMono {
    pub fn new(m: usize, n: usize, image_of_empty: VertexSet, singleton_images: Vec<VertexSet>) -> Self {
        PosetMono { source_dim: m, target_dim: n, image_of_empty, singleton_images }
    }

    pub fn identity(n: usize) -> Self {
        PosetMono::new(n, n, VertexSet::EMPTY, (1..=n).map(VertexSet::singleton).collect())
    }

    /// The generated map on vertices.
    pub fn apply(&self, a: VertexSet) -> VertexSet {
        a.iter().fold(self.image_of_empty, |acc, i| acc.union(self.singleton_images[i - 1]))
    }

    fn block(&self, i: usize) -> VertexSet {
        self.singleton_images[i - 1].difference(self.image_of_empty)
    }

    /// `β ∘ α` (first `self`, then `beta`).
    pub fn then(&self, beta: &PosetMono) -> Result<PosetMono> {
        if self.target_dim != beta.source_dim {
            return Err(Error::invalid(format!(
                "cannot compose P({}) → P({}) with P({}) → P({})",
                self.source_dim, self.target_dim, beta.source_dim, beta.target_dim
            )));
        }
        Ok(PosetMono::new(
            self.source_dim,
            beta.target_dim,
            beta.apply(self.image_of_empty),
            self.singleton_images.iter().map(|&s| beta.apply(s)).collect(),
        ))
    }
}

/// Largest source dimension checked exhaustively by [`validate_mono`].
const EXHAUSTIVE_LIMIT: usize = 4;

/// Structural checks (nonempty, pairwise disjoint blocks over `α(∅)`), plus
/// an exhaustive meet/join/injectivity check for small `m`.
pub fn validate_mono(alpha: &PosetMono) -> Vec<String> {
    let mut v = Vec::new();
    let (m, n) = (alpha.source_dim, alpha.target_dim);
    if n > crate::vertex_set::MAX_AMBIENT {
        v.push(format!("target dimension {n} exceeds the supported maximum"));
        return v;
    }
    if alpha.singleton_images.len() != m {
        v.push(format!("expected {m} singleton images, found {}", alpha.singleton_images.len()));
        return v;
    }
    let full = VertexSet::full(n);
    if !alpha.image_of_empty.is_subset(full) {
        v.push(format!("α(∅) = {} lies outside P({n})", alpha.image_of_empty));
    }
    for i in 1..=m {
        let s = alpha.singleton_images[i - 1];
        if !s.is_subset(full) {
            v.push(format!("α({{{i}}}) = {s} lies outside P({n})"));
        }
        if !alpha.image_of_empty.is_subset(s) {
            v.push(format!("α(∅) is not contained in α({{{i}}})"));
        }
        if alpha.block(i).is_empty() {
            v.push(format!("α({{{i}}}) adds nothing to α(∅); not injective"));
        }
        for j in i + 1..=m {
            if !alpha.block(i).is_disjoint(alpha.block(j)) {
                v.push(format!("blocks of {i} and {j} intersect; meets are not preserved"));
            }
        }
    }
    if v.is_empty() && m <= EXHAUSTIVE_LIMIT {
        v.extend(exhaustive_violations(alpha));
    }
    v
}

fn exhaustive_violations(alpha: &PosetMono) -> Vec<String> {
    let all: Vec<VertexSet> = VertexSet::full(alpha.source_dim).subsets().collect();
    let mut v = Vec::new();
    for &a in &all {
        for &b in &all {
            let (fa, fb) = (alpha.apply(a), alpha.apply(b));
            if alpha.apply(a.intersection(b)) != fa.intersection(fb) {
                v.push(format!("α({a} ∩ {b}) ≠ α({a}) ∩ α({b})"));
            }
            if alpha.apply(a.union(b)) != fa.union(fb) {
                v.push(format!("α({a} ∪ {b}) ≠ α({a}) ∪ α({b})"));
            }
            if a != b && fa == fb {
                v.push(format!("α({a}) = α({b}); not injective"));
            }
        }
    }
    v
}

fn require_valid(alpha: &PosetMono) -> Result<()> {
    match validate_mono(alpha).first() {
        None => Ok(()),
        Some(msg) => Err(Error::invalid(format!("invalid poset monomorphism: {msg}"))),
    }
}

/// `[A, B] ↦ [α(A), α(B)]`.
pub fn apply_mono(alpha: &PosetMono, cell: &Interval) -> Result<Interval> {
    require_valid(alpha)?;
    if !cell.upper.is_subset(VertexSet::full(alpha.source_dim)) {
        return Err(Error::invalid(format!("{cell} is not a cell of □^{}", alpha.source_dim)));
    }
    Ok(Interval { lower: alpha.apply(cell.lower), upper: alpha.apply(cell.upper) })
}

/// `K_α`: the complex generated by the images of the cells of `K`.
pub fn refine(k: &CubicalComplex, alpha: &PosetMono) -> Result<CubicalComplex> {
    require_valid(alpha)?;
    if k.ambient() != alpha.source_dim {
        return Err(Error::invalid(format!(
            "complex lives in □^{} but α starts at P({})",
            k.ambient(),
            alpha.source_dim
        )));
    }
    let cells: Vec<Interval> =
        k.maximal_cells().map(|c| Interval { lower: alpha.apply(c.lower), upper: alpha.apply(c.upper) }).collect();
    CubicalComplex::new(alpha.target_dim, cells)
}

/// Whether `K_α ⊆ L`.
pub fn is_refinement(k: &CubicalComplex, alpha: &PosetMono, l: &CubicalComplex) -> Result<bool> {
    if l.ambient() != alpha.target_dim {
        return Ok(false);
    }
    let ka = refine(k, alpha)?;
    for c in ka.maximal_cells() {
        if !l.contains(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> VertexSet {
        e.iter().copied().collect()
    }

    fn doubling() -> PosetMono {
        PosetMono::new(1, 2, VertexSet::EMPTY, vec![set(&[1, 2])])
    }

    fn chain2() -> CubicalComplex {
        CubicalComplex::new(
            2,
            [Interval::new(set(&[]), set(&[1])).unwrap(), Interval::new(set(&[1]), set(&[1, 2])).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn validity() {
        assert!(validate_mono(&doubling()).is_empty());
        assert!(validate_mono(&PosetMono::identity(4)).is_empty());
        let bad = PosetMono::new(2, 2, VertexSet::EMPTY, vec![set(&[1]), set(&[1, 2])]);
        assert!(!validate_mono(&bad).is_empty());
        let constant = PosetMono::new(1, 2, set(&[1]), vec![set(&[1])]);
        assert!(!validate_mono(&constant).is_empty());
    }

    #[test]
    fn applying_to_cells() {
        let edge = Interval::new(set(&[]), set(&[1])).unwrap();
        assert_eq!(apply_mono(&PosetMono::identity(1), &edge).unwrap(), edge);
        assert_eq!(apply_mono(&doubling(), &edge).unwrap(), Interval::new(set(&[]), set(&[1, 2])).unwrap());
        let shifted = PosetMono::new(1, 3, set(&[3]), vec![set(&[1, 3])]);
        assert_eq!(apply_mono(&shifted, &edge).unwrap().lower, set(&[3]));
        assert_eq!(apply_mono(&shifted, &Interval::point(VertexSet::EMPTY)).unwrap(), Interval::point(set(&[3])));
    }

    #[test]
    fn refining_complexes() {
        let sq1 = CubicalComplex::standard_cell(1);
        assert_eq!(refine(&sq1, &doubling()).unwrap(), CubicalComplex::standard_cell(2));
        assert_eq!(refine(&chain2(), &PosetMono::identity(2)).unwrap(), chain2());

        let incl = PosetMono::new(2, 3, VertexSet::EMPTY, vec![set(&[1]), set(&[2])]);
        let r = refine(&chain2(), &incl).unwrap();
        assert_eq!(r.ambient(), 3);
        assert_eq!(
            r.maximal_cells().copied().collect::<Vec<_>>(),
            chain2().maximal_cells().copied().collect::<Vec<_>>()
        );

        assert!(refine(&chain2(), &doubling()).is_err());
    }

    #[test]
    fn refinement_relation() {
        let sq1 = CubicalComplex::standard_cell(1);
        let ka = refine(&sq1, &doubling()).unwrap();
        assert!(is_refinement(&sq1, &doubling(), &ka).unwrap());
        assert!(!is_refinement(&sq1, &doubling(), &chain2()).unwrap());
        let incl = PosetMono::new(1, 2, VertexSet::EMPTY, vec![set(&[1])]);
        assert!(is_refinement(&sq1, &incl, &chain2()).unwrap());
    }

    #[test]
    fn composition_is_generated() {
        let a = PosetMono::new(1, 2, VertexSet::EMPTY, vec![set(&[1, 2])]);
        let b = PosetMono::new(2, 3, set(&[3]), vec![set(&[1, 3]), set(&[2, 3])]);
        let ab = a.then(&b).unwrap();
        for s in VertexSet::full(1).subsets() {
            assert_eq!(ab.apply(s), b.apply(a.apply(s)));
        }
        assert!(b.then(&a).is_err());
    }
}
