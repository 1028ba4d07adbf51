//! Count-only hom sets with bounded memory.
//!
//! Every path `v → w` passes through each *mandatory* vertex (one whose
//! removal disconnects `v` from `w`). A triangle cannot straddle a mandatory
//! vertex `c` without its long edge bypassing `c`, so all relations live on
//! one side of `c` and `P(v, w) ≅ P(v, c) × P(c, w)`. Each segment between
//! consecutive mandatory vertices is counted by path dynamic programming when
//! no triangle lies on it (classes are then single paths), and by
//! enumeration otherwise.

use std::collections::BTreeSet;

use super::PathEngine;
use crate::error::{Error, Result};
use crate::simplicial::Vertex;

impl PathEngine {
    /// `|P(L)(v, w)|`.
    pub fn hom_count(&self, v: Vertex, w: Vertex) -> Result<u64> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Ok(1);
        }
        let on = self.on_path_vertices(v, w);
        if !on.contains(&v) {
            return Ok(0);
        }
        let mut cuts = vec![v];
        cuts.extend(on.iter().copied().filter(|&c| c != v && c != w && self.is_mandatory(v, w, c, &on)));
        cuts.push(w);

        cuts.windows(2)
            .try_fold(1u64, |acc, seg| acc.checked_mul(self.segment_count(seg[0], seg[1])?).ok_or(Error::CountOverflow))
    }

    /// Mandatory vertices of `v → w`, excluding the endpoints.
    pub fn mandatory_vertices(&self, v: Vertex, w: Vertex) -> Vec<Vertex> {
        let on = self.on_path_vertices(v, w);
        on.iter().copied().filter(|&c| c != v && c != w && self.is_mandatory(v, w, c, &on)).collect()
    }

    fn is_mandatory(&self, v: Vertex, w: Vertex, c: Vertex, on: &BTreeSet<Vertex>) -> bool {
        let mut seen = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            if x == w {
                return false;
            }
            for &y in self.successors(x) {
                if y != c && on.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        true
    }

    fn segment_count(&self, s: Vertex, t: Vertex) -> Result<u64> {
        let on = self.on_path_vertices(s, t);
        let related = self.triangles.iter().any(|&(a, b, c)| on.contains(&a) && on.contains(&b) && on.contains(&c));
        if related {
            return Ok(self.hom_set(s, t)?.len() as u64);
        }
        count_paths(self, s, t, &on)
    }
}

/// Number of directed paths `s → t` through `on` (ascending labels are a
/// topological order).
fn count_paths(engine: &PathEngine, s: Vertex, t: Vertex, on: &BTreeSet<Vertex>) -> Result<u64> {
    let order: Vec<Vertex> = on.iter().copied().collect();
    let mut ways = std::collections::HashMap::with_capacity(order.len());
    ways.insert(s, 1u64);
    for &x in &order {
        let here = ways.get(&x).copied().unwrap_or(0);
        if here == 0 {
            continue;
        }
        for &y in engine.successors(x) {
            if on.contains(&y) {
                let slot = ways.entry(y).or_insert(0);
                *slot = slot.checked_add(here).ok_or(Error::CountOverflow)?;
            }
        }
    }
    Ok(ways.get(&t).copied().unwrap_or(0))
}
