//! JSON encodings of complexes, path categories and poset monomorphisms.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cubical::{validate_cells, CubicalComplex};
use crate::engine::HomSet;
use crate::error::{Error, Result};
use crate::refinement::{validate_mono, PosetMono};
use crate::simplicial::{validate_simplices, SimplicialComplex, Vertex};
use crate::vertex_set::{Interval, VertexSet, MAX_AMBIENT};

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(d)?;
        VertexSet::try_from_elements(&elements, MAX_AMBIENT).map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    #[serde(rename = "A")]
    pub lower: Vec<usize>,
    #[serde(rename = "B")]
    pub upper: Vec<usize>,
}

/// On-disk form of a complex, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ComplexJson {
    Cubical { ambient: usize, maximal_cells: Vec<CellJson> },
    Simplicial { vertices: Vec<Vertex>, maximal_simplices: Vec<Vec<Vertex>> },
}

/// A validated complex of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complex {
    Cubical(CubicalComplex),
    Simplicial(SimplicialComplex),
}

impl ComplexJson {
    pub fn validate(&self) -> Vec<String> {
        match self {
            ComplexJson::Cubical { ambient, maximal_cells } => {
                let raw: Vec<_> = maximal_cells.iter().map(|c| (c.lower.clone(), c.upper.clone())).collect();
                validate_cells(*ambient, &raw)
            }
            ComplexJson::Simplicial { vertices, maximal_simplices } => validate_simplices(vertices, maximal_simplices),
        }
    }

    pub fn into_complex(self) -> Result<Complex> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::invalid(violations.join("; ")));
        }
        Ok(match self {
            ComplexJson::Cubical { ambient, maximal_cells } => {
                let cells = maximal_cells.iter().map(|c| Interval {
                    lower: c.lower.iter().copied().collect(),
                    upper: c.upper.iter().copied().collect(),
                });
                Complex::Cubical(CubicalComplex::new(ambient, cells)?)
            }
            ComplexJson::Simplicial { vertices, maximal_simplices } => {
                Complex::Simplicial(SimplicialComplex::new(vertices, maximal_simplices)?)
            }
        })
    }
}

impl From<&CubicalComplex> for ComplexJson {
    fn from(k: &CubicalComplex) -> Self {
        ComplexJson::Cubical {
            ambient: k.ambient(),
            maximal_cells: k
                .maximal_cells()
                .map(|c| CellJson { lower: c.lower.elements(), upper: c.upper.elements() })
                .collect(),
        }
    }
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(l: &SimplicialComplex) -> Self {
        ComplexJson::Simplicial {
            vertices: l.vertices().iter().copied().collect(),
            maximal_simplices: l.maximal_simplices().cloned().collect(),
        }
    }
}

impl From<&Complex> for ComplexJson {
    fn from(c: &Complex) -> Self {
        match c {
            Complex::Cubical(k) => k.into(),
            Complex::Simplicial(l) => l.into(),
        }
    }
}

pub fn parse_complex(text: &str) -> Result<Complex> {
    let raw: ComplexJson =
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("malformed complex JSON: {e}")))?;
    raw.into_complex()
}

pub fn emit_complex(c: &Complex) -> String {
    serde_json::to_string(&ComplexJson::from(c)).expect("complex JSON serializes")
}

/// One hom set in category JSON. `representatives` is omitted in
/// count-only mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomJson<V> {
    pub from: V,
    pub to: V,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<V>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryJson<V> {
    pub objects: Vec<V>,
    pub homs: Vec<HomJson<V>>,
}

impl<V> HomJson<V> {
    /// Encodes a hom set, relabelling vertices through `name`.
    pub fn from_hom(h: &HomSet, name: impl Fn(Vertex) -> V) -> Self {
        HomJson {
            from: name(h.source),
            to: name(h.target),
            count: h.len() as u64,
            representatives: Some(
                h.representatives().map(|p| p.vertices().iter().map(|&x| name(x)).collect()).collect(),
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetMonoJson {
    pub m: usize,
    pub n: usize,
    pub empty: Vec<usize>,
    pub singletons: BTreeMap<usize, Vec<usize>>,
}

impl PosetMonoJson {
    pub fn into_mono(self) -> Result<PosetMono> {
        let empty = VertexSet::try_from_elements(&self.empty, self.n)?;
        let mut singletons = Vec::with_capacity(self.m);
        for i in 1..=self.m {
            let s =
                self.singletons.get(&i).ok_or_else(|| Error::invalid(format!("missing singleton image for {i}")))?;
            singletons.push(VertexSet::try_from_elements(s, self.n)?);
        }
        if let Some(extra) = self.singletons.keys().find(|&&i| i == 0 || i > self.m) {
            return Err(Error::invalid(format!("singleton key {extra} outside 1..={}", self.m)));
        }
        let alpha = PosetMono::new(self.m, self.n, empty, singletons);
        let v = validate_mono(&alpha);
        if !v.is_empty() {
            return Err(Error::invalid(v.join("; ")));
        }
        Ok(alpha)
    }
}

impl From<&PosetMono> for PosetMonoJson {
    fn from(a: &PosetMono) -> Self {
        PosetMonoJson {
            m: a.source_dim,
            n: a.target_dim,
            empty: a.image_of_empty.elements(),
            singletons: a.singleton_images.iter().enumerate().map(|(i, s)| (i + 1, s.elements())).collect(),
        }
    }
}

/// `{"edge":[x,y],"a_count":..,"b_count":..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub edge: [VertexSet; 2],
    pub a_count: usize,
    pub b_count: usize,
}

/// Frontier decomposition summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub cut: usize,
    pub crossing_edges: Vec<[VertexSet; 2]>,
    pub summands: Vec<SummandJson>,
}

impl From<&crate::frontier::FrontierHom> for DecompositionJson {
    fn from(f: &crate::frontier::FrontierHom) -> Self {
        DecompositionJson {
            cut: f.decomposition.cut,
            crossing_edges: f.decomposition.crossing_edges.iter().map(|&(x, y)| [x, y]).collect(),
            summands: f
                .summands
                .iter()
                .map(|s| SummandJson { edge: [s.edge.0, s.edge.1], a_count: s.a_count, b_count: s.b_count })
                .collect(),
        }
    }
}
