use crate::polygon::TaggedEdge;
use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} outside [1, {n}]")]
    VertexOutOfRange { vertex: i64, n: usize },
    #[error("malformed edge: {0}")]
    BadEdge(String),
    #[error("{0} is a side, where a tagged arc was expected")]
    SideNotAllowed(TaggedEdge),
    #[error("{0} is incident to the puncture")]
    PunctureIncident(TaggedEdge),
    #[error("arcs {0} and {1} are not compatible")]
    Incompatible(TaggedEdge, TaggedEdge),
    #[error("set is not maximal: {0} could be added")]
    NotMaximal(TaggedEdge),
    #[error("arc {0} listed twice")]
    Duplicate(TaggedEdge),
    #[error("arc {0} is not part of the triangulation")]
    NotInTriangulation(TaggedEdge),
    #[error("no replacement arc found when flipping {0}")]
    NoReplacement(TaggedEdge),
    #[error("several replacement arcs found when flipping {0}")]
    NonUniqueReplacement(TaggedEdge),
    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("{0} is projective")]
    Projective(String),
    #[error("object outside the index window: {0}")]
    WindowExceeded(String),
    #[error("degree bound {bound} violates the truncation margin {limit}")]
    DegreeBound { bound: i64, limit: i64 },
    #[error("no admissible base vertex for the lift")]
    NoLiftVertex,
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
