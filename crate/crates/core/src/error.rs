use thiserror::Error;

use crate::hypergraph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid uniformity k={0} (need k >= 2)")]
    InvalidUniformity(usize),
    #[error("invalid length {len}: {reason}")]
    InvalidLength { len: usize, reason: &'static str },
    #[error("edge has {found} vertices, expected {expected}")]
    WrongArity { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for {n_vertices} vertices")]
    VertexOutOfRange { vertex: Vertex, n_vertices: usize },
    #[error("repeated vertex {0}")]
    RepeatedVertex(Vertex),
    #[error("at most 64 vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid loose structure: {0}")]
    InvalidStructure(String),
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("path edge {0} does not have the requested color")]
    NotMonochromatic(usize),
    #[error("reservoir vertex {0} lies on the path")]
    ReservoirOverlap(Vertex),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no good configuration on edges {index},{next}: {diagnostic}")]
    ConfigurationNotFound {
        index: usize,
        next: usize,
        diagnostic: String,
    },
    #[error("no known value for {0}")]
    UnknownBound(String),
    #[error("internal validation defect: {0}")]
    Defect(String),
}
