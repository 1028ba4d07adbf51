//! Fixture families and seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cubical::CubicalComplex;
use crate::error::{Error, Result};
use crate::refinement::PosetMono;
use crate::simplicial::{SimplicialComplex, Vertex};
use crate::vertex_set::{Interval, VertexSet};

/// `k` copies of `∂Δ²` glued end to end on vertices `0..=2k`.
pub fn necklace(k: usize) -> SimplicialComplex {
    let beads = (0..k).flat_map(|i| {
        let a = 2 * i;
        [vec![a, a + 1], vec![a + 1, a + 2], vec![a, a + 2]]
    });
    SimplicialComplex::new(0..=2 * k, beads).unwrap()
}

/// `□^n`.
pub fn hypercube(n: usize) -> CubicalComplex {
    CubicalComplex::standard_cell(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// `(i, j) → (i + 1, j)`
    Horizontal,
    /// `(i, j) → (i, j + 1)`
    Vertical,
}

/// A grid edge, named by its initial vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    pub i: usize,
    pub j: usize,
    pub dir: Direction,
}

/// A `w × h` grid of unit squares with some squares left empty and some
/// edges deleted (a deleted edge also deletes the squares it bounds).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridSpec {
    pub width: usize,
    pub height: usize,
    pub holes: Vec<(usize, usize)>,
    pub missing_edges: Vec<GridEdge>,
}

impl GridSpec {
    pub fn new(width: usize, height: usize) -> Self {
        GridSpec { width, height, ..Default::default() }
    }

    /// Embedding `(i, j) ↦ {1..i} ∪ {w+1..w+j}` into `P({1..w+h})`.
    pub fn vertex(&self, i: usize, j: usize) -> VertexSet {
        VertexSet::range(1, i).union(VertexSet::range(self.width + 1, self.width + j))
    }

    pub fn build(&self) -> Result<CubicalComplex> {
        let (w, h) = (self.width, self.height);
        for &(i, j) in &self.holes {
            if i >= w || j >= h {
                return Err(Error::invalid(format!("hole ({i},{j}) outside the {w}x{h} grid")));
            }
        }
        for e in &self.missing_edges {
            let ok = match e.dir {
                Direction::Horizontal => e.i < w && e.j <= h,
                Direction::Vertical => e.i <= w && e.j < h,
            };
            if !ok {
                return Err(Error::invalid(format!("edge {e:?} outside the {w}x{h} grid")));
            }
        }
        let missing = |i, j, dir| self.missing_edges.contains(&GridEdge { i, j, dir });
        let mut cells = Vec::new();
        for i in 0..=w {
            for j in 0..=h {
                cells.push(Interval::point(self.vertex(i, j)));
                if i < w && !missing(i, j, Direction::Horizontal) {
                    cells.push(Interval::new(self.vertex(i, j), self.vertex(i + 1, j))?);
                }
                if j < h && !missing(i, j, Direction::Vertical) {
                    cells.push(Interval::new(self.vertex(i, j), self.vertex(i, j + 1))?);
                }
                let square_edges_present = i < w
                    && j < h
                    && !missing(i, j, Direction::Horizontal)
                    && !missing(i, j, Direction::Vertical)
                    && !missing(i + 1, j, Direction::Vertical)
                    && !missing(i, j + 1, Direction::Horizontal);
                if square_edges_present && !self.holes.contains(&(i, j)) {
                    cells.push(Interval::new(self.vertex(i, j), self.vertex(i + 1, j + 1))?);
                }
            }
        }
        CubicalComplex::new(w + h, cells)
    }
}

pub fn grid(width: usize, height: usize) -> CubicalComplex {
    GridSpec::new(width, height).build().unwrap()
}

/// The Swiss flag: a 3×3 grid whose four corner squares are filled, whose
/// four side squares are hollow, and whose centre square has no boundary.
pub fn swiss_flag_spec() -> GridSpec {
    use Direction::*;
    GridSpec {
        width: 3,
        height: 3,
        holes: vec![(0, 1), (1, 0), (1, 1), (2, 1), (1, 2)],
        missing_edges: vec![
            GridEdge { i: 1, j: 1, dir: Horizontal },
            GridEdge { i: 1, j: 1, dir: Vertical },
            GridEdge { i: 2, j: 1, dir: Vertical },
            GridEdge { i: 1, j: 2, dir: Horizontal },
        ],
    }
}

pub fn swiss_flag() -> CubicalComplex {
    swiss_flag_spec().build().unwrap()
}

/// The five-vertex complex with edges `v1→v0, v1→v2, v2→v3, v4→v3`,
/// labelled by a linear extension of its edge order.
pub struct SourceSinkExample {
    pub complex: SimplicialComplex,
    /// `labels[i]` is the integer label of `v_i`.
    pub labels: [Vertex; 5],
}

pub fn source_sink_example() -> SourceSinkExample {
    // v1 = 0, v0 = 1, v2 = 2, v4 = 3, v3 = 4
    let labels = [1, 0, 2, 4, 3];
    let [v0, v1, v2, v3, v4] = labels;
    let complex = SimplicialComplex::new(0..5, [vec![v1, v0], vec![v1, v2], vec![v2, v3], vec![v4, v3]]).unwrap();
    SourceSinkExample { complex, labels }
}

/// A random complex on `1..=max_vertices` vertices generated by a few random
/// simplices of dimension ≤ 3.
pub fn random_simplicial<R: Rng>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let verts: Vec<Vertex> = (0..n).collect();
    let count = rng.gen_range(1..=6);
    let gens: Vec<Vec<Vertex>> = (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=n.min(4));
            let mut s: Vec<Vertex> = verts.choose_multiple(rng, k).copied().collect();
            s.sort_unstable();
            s
        })
        .collect();
    SimplicialComplex::new(verts, gens).unwrap()
}

/// A random cubical complex in `□^n`, `1 ≤ n ≤ max_ambient`, generated by a
/// few random intervals.
pub fn random_cubical<R: Rng>(rng: &mut R, max_ambient: usize) -> CubicalComplex {
    let n = rng.gen_range(1..=max_ambient.max(1));
    let count = rng.gen_range(1..=4);
    let cells: Vec<Interval> = (0..count)
        .map(|_| {
            let (mut lower, mut upper) = (VertexSet::EMPTY, VertexSet::EMPTY);
            for i in 1..=n {
                match rng.gen_range(0..3) {
                    0 => {}
                    1 => {
                        lower = lower.with(i);
                        upper = upper.with(i);
                    }
                    _ => upper = upper.with(i),
                }
            }
            Interval { lower, upper }
        })
        .collect();
    CubicalComplex::new(n, cells).unwrap()
}

/// A random meet/join-preserving monomorphism `P(m) → P(n)`.
pub fn random_mono<R: Rng>(rng: &mut R, m: usize, n: usize) -> PosetMono {
    assert!(m <= n, "no monomorphism P({m}) → P({n})");
    let mut coords: Vec<usize> = (1..=n).collect();
    coords.shuffle(rng);
    let mut empty = VertexSet::EMPTY;
    let mut blocks = vec![VertexSet::EMPTY; m];
    for (k, &c) in coords.iter().enumerate() {
        if k < m {
            blocks[k] = blocks[k].with(c);
            continue;
        }
        match rng.gen_range(0..4) {
            0 => empty = empty.with(c),
            1 => {}
            _ if m > 0 => {
                let b = rng.gen_range(0..m);
                blocks[b] = blocks[b].with(c);
            }
            _ => {}
        }
    }
    let singletons = blocks.into_iter().map(|b| b.union(empty)).collect();
    PosetMono::new(m, n, empty, singletons)
}

/// Named cubical fixtures used across the test suites.
pub fn cubical_fixtures() -> Vec<(String, CubicalComplex)> {
    let mut out: Vec<(String, CubicalComplex)> = (1..=4).map(|n| (format!("cube{n}"), hypercube(n))).collect();
    out.push(("swiss-flag".into(), swiss_flag()));
    out.push(("grid-2x2".into(), grid(2, 2)));
    out.push(("grid-3x3".into(), grid(3, 3)));
    out.push(("grid-4x4".into(), grid(4, 4)));
    let mut holey = GridSpec::new(3, 2);
    holey.holes = vec![(1, 0), (1, 1)];
    out.push(("grid-3x2-holes".into(), holey.build().unwrap()));
    let s = |e: &[usize]| -> VertexSet { e.iter().copied().collect() };
    out.push((
        "edge-chain".into(),
        CubicalComplex::new(2, [Interval::new(s(&[]), s(&[1])).unwrap(), Interval::new(s(&[1]), s(&[1, 2])).unwrap()])
            .unwrap(),
    ));
    out.push((
        "two-squares".into(),
        CubicalComplex::new(
            3,
            [Interval::new(s(&[]), s(&[1, 2])).unwrap(), Interval::new(s(&[1]), s(&[1, 3])).unwrap()],
        )
        .unwrap(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_shape() {
        let l = necklace(3);
        assert_eq!(l.vertices().len(), 7);
        assert_eq!(l.count(1), 9);
        assert_eq!(l.count(2), 0);
    }

    #[test]
    fn grid_embedding_is_monotone() {
        let g = GridSpec::new(2, 2);
        let k = g.build().unwrap();
        assert_eq!(k.ambient(), 4);
        assert_eq!(k.maximal_cells().count(), 4);
        assert!(k.maximal_cells().all(|c| c.dimension() == 2));
        for i in 0..2 {
            for j in 0..=2 {
                assert!(g.vertex(i, j).is_proper_subset(g.vertex(i + 1, j)));
                assert!(g.vertex(j, i).is_proper_subset(g.vertex(j, i + 1)));
            }
        }
    }

    #[test]
    fn swiss_flag_cells() {
        let k = swiss_flag();
        assert_eq!(k.ambient(), 6);
        assert_eq!(k.vertices().len(), 16);
        let squares = k.maximal_cells().filter(|c| c.dimension() == 2).count();
        let edges = k.maximal_cells().filter(|c| c.dimension() == 1).count();
        assert_eq!((squares, edges), (4, 4));
    }

    #[test]
    fn bad_grid_specs() {
        let mut g = GridSpec::new(2, 2);
        g.holes.push((2, 0));
        assert!(g.build().is_err());
    }
}
