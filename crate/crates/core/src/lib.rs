//! Path categories of finite cubical and simplicial complexes.
//!
//! The [`engine`] computes hom sets by brute force: enumerate directed
//! edge-paths and identify those related by 2-simplices. The remaining
//! modules shrink the input before that step ([`reduction`]), embed complexes
//! into finer ones ([`refinement`]) and split a cubical complex by vertex
//! size so the two halves can be computed independently ([`frontier`]).

pub mod check;
pub mod cubical;
pub mod engine;
pub mod error;
pub mod frontier;
pub mod generators;
pub mod json;
pub mod reduction;
pub mod refinement;
pub mod simplicial;
pub mod triangulate;
pub mod vertex_set;

pub use cubical::CubicalComplex;
pub use engine::{EdgePath, HomSet, Morphism, PathCategory, PathEngine};
pub use error::{Error, Result};
pub use frontier::{frontier_hom, frontier_split, level_subcomplex, FrontierDecomposition, FrontierHom};
pub use json::Complex;
pub use reduction::ReductionReport;
pub use refinement::PosetMono;
pub use simplicial::{sk2, SimplicialComplex, Vertex};
pub use triangulate::{triangulate, triangulate_sk2, Triangulation};
pub use vertex_set::{interval_members, size, Interval, VertexSet};
