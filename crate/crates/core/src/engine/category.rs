use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{HomSet, Morphism, PathEngine};
use crate::error::{Error, Result};
use crate::simplicial::{SimplicialComplex, Vertex};

/// A fully materialized path category.
#[derive(Clone, Debug)]
pub struct PathCategory {
    pub objects: Vec<Vertex>,
    homs: BTreeMap<(Vertex, Vertex), HomSet>,
}

impl PathCategory {
    /// `hom(v, w)`; `None` when `w < v` (empty) or either vertex is unknown.
    pub fn hom(&self, v: Vertex, w: Vertex) -> Option<&HomSet> {
        self.homs.get(&(v, w))
    }

    pub fn hom_len(&self, v: Vertex, w: Vertex) -> usize {
        self.hom(v, w).map_or(0, HomSet::len)
    }

    pub fn homs(&self) -> impl Iterator<Item = &HomSet> + '_ {
        self.homs.values()
    }

    pub fn identity(&self, v: Vertex) -> Option<&Morphism> {
        self.hom(v, v).and_then(|h| h.classes.first())
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> + '_ {
        self.homs.values().flat_map(|h| h.classes.iter())
    }

    /// `g ∘ f`: first `f`, then `g`.
    pub fn compose(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::invalid(format!(
                "morphisms are not composable: {} → {} then {} → {}",
                f.source, f.target, g.source, g.target
            )));
        }
        let path = f.representative.concat(&g.representative).expect("endpoints agree");
        let hom = self.hom(f.source, g.target).ok_or_else(|| Error::invalid("composite lies outside the category"))?;
        hom.morphism_of(&path)
            .cloned()
            .ok_or_else(|| Error::invalid(format!("path {path:?} is not a path of the complex")))
    }
}

impl PathEngine {
    /// Computes every hom set `v ≤ w`, in parallel over pairs.
    pub fn path_category(&self) -> PathCategory {
        let objects: Vec<Vertex> = self.vertices().iter().copied().collect();
        let pairs: Vec<(Vertex, Vertex)> =
            objects.iter().enumerate().flat_map(|(i, &v)| objects[i..].iter().map(move |&w| (v, w))).collect();
        let homs = pairs
            .par_iter()
            .map(|&(v, w)| ((v, w), self.hom_set(v, w).expect("vertices are known")))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        PathCategory { objects, homs }
    }
}

pub fn path_category(l: &SimplicialComplex) -> PathCategory {
    PathEngine::new(l).path_category()
}

pub fn compose(c: &PathCategory, f: &Morphism, g: &Morphism) -> Result<Morphism> {
    c.compose(f, g)
}
