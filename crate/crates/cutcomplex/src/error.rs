use thiserror::Error;

use crate::vset::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("{0} vertices exceeds the word-width cap of {1}")]
    TooManyVertices(usize, usize),
    #[error("invalid family parameter: {0}")]
    BadFamily(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("operation `{0}` is undefined on the void complex")]
    VoidComplex(&'static str),
    #[error("operation `{0}` requires a pure complex")]
    NotPure(&'static str),
    #[error("skeleton dimension {0} is below -1")]
    BadSkeletonDim(i64),
    #[error("k = {k} is below the minimum {min} for `{op}`")]
    KTooSmall { op: &'static str, k: usize, min: usize },
    #[error("face count {faces} exceeds the cap of {cap}")]
    FaceCapExceeded { faces: u64, cap: u64 },
    #[error("facet count {facets} exceeds the cap of {cap}")]
    FacetCapExceeded { facets: usize, cap: usize },
    #[error("duplicate vertex {0} in matching schedule")]
    DuplicateScheduleVertex(usize),
    #[error("matched pair ({0}, {1}) is not a cover relation in the face poset")]
    NotACover(VertexSet, VertexSet),
    #[error("face {0} appears in more than one matched pair")]
    NotAMatching(VertexSet),
    #[error("matching is not acyclic")]
    NotAcyclic,
    #[error("ground sets disagree: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown table family `{0}`")]
    UnknownTableFamily(String),
    #[error("unknown conjecture `{0}`")]
    UnknownConjecture(String),
    #[error("required facet {0} has the wrong cardinality for n = {1}, k = {2}")]
    BadRequiredFacet(VertexSet, usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
