//! A deliberately naive hom-set oracle, written without the engine: paths
//! are listed by plain recursion and classes found by breadth-first search
//! over single-triangle moves.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use pathcat_core::{SimplicialComplex, Vertex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct Oracle {
    edges: BTreeSet<(Vertex, Vertex)>,
    triangles: BTreeSet<(Vertex, Vertex, Vertex)>,
}

impl Oracle {
    pub fn new(l: &SimplicialComplex) -> Self {
        Oracle { edges: l.edges(), triangles: l.triangles() }
    }

    pub fn paths(&self, v: Vertex, w: Vertex) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut cur = vec![v];
        self.extend(&mut cur, w, &mut out);
        out
    }

    fn extend(&self, cur: &mut Vec<Vertex>, w: Vertex, out: &mut Vec<Vec<Vertex>>) {
        let last = *cur.last().unwrap();
        if last == w {
            out.push(cur.clone());
            return;
        }
        for &(a, b) in &self.edges {
            if a == last && b <= w {
                cur.push(b);
                self.extend(cur, w, out);
                cur.pop();
            }
        }
    }

    fn neighbours(&self, p: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        for i in 0..p.len().saturating_sub(2) {
            if self.triangles.contains(&(p[i], p[i + 1], p[i + 2])) {
                let mut q = p.to_vec();
                q.remove(i + 1);
                out.push(q);
            }
        }
        for i in 0..p.len().saturating_sub(1) {
            for &(a, b, c) in &self.triangles {
                if a == p[i] && c == p[i + 1] {
                    let mut q = p.to_vec();
                    q.insert(i + 1, b);
                    out.push(q);
                }
            }
        }
        out
    }

    /// Classes of `v → w`, each as a sorted list of paths; classes sorted by
    /// their least path.
    pub fn classes(&self, v: Vertex, w: Vertex) -> Vec<Vec<Vec<Vertex>>> {
        let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
        let mut classes = Vec::new();
        for p in self.paths(v, w) {
            if seen.contains(&p) {
                continue;
            }
            let mut class = vec![p.clone()];
            seen.insert(p.clone());
            let mut queue = VecDeque::from([p]);
            while let Some(q) = queue.pop_front() {
                for r in self.neighbours(&q) {
                    if seen.insert(r.clone()) {
                        class.push(r.clone());
                        queue.push_back(r);
                    }
                }
            }
            class.sort();
            classes.push(class);
        }
        classes.sort();
        classes
    }

    pub fn count(&self, v: Vertex, w: Vertex) -> usize {
        self.classes(v, w).len()
    }
}
