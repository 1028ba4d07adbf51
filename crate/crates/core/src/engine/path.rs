use std::fmt;

use serde::{Deserialize, Serialize};

use crate::simplicial::Vertex;

/// A directed edge-path `v_0 < v_1 < ... < v_k`; `k = 0` is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgePath(Vec<Vertex>);

impl EdgePath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        assert!(!vertices.is_empty(), "an edge-path visits at least one vertex");
        EdgePath(vertices)
    }

    pub fn identity(v: Vertex) -> Self {
        EdgePath(vec![v])
    }

    pub fn source(&self) -> Vertex {
        self.0[0]
    }

    pub fn target(&self) -> Vertex {
        *self.0.last().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_identity(&self) -> bool {
        self.0.len() == 1
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    /// `self` followed by `other`; `None` unless `self` ends where `other` starts.
    pub fn concat(&self, other: &EdgePath) -> Option<EdgePath> {
        if self.target() != other.source() {
            return None;
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0[1..]);
        Some(EdgePath(v))
    }

    /// Relabels every vertex.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> EdgePath {
        EdgePath(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Debug for EdgePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<Vertex>> for EdgePath {
    fn from(v: Vec<Vertex>) -> Self {
        EdgePath::new(v)
    }
}
