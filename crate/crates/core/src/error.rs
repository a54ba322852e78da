use thiserror::Error;

use crate::metric::OrderedVertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, String),

    #[error("coordinate {coord:?} out of range for factors {sizes:?}")]
    CoordOutOfRange { coord: Vec<usize>, sizes: Vec<usize> },

    #[error("duplicate vertex {0} in ordered vertex set")]
    DuplicateVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exact solver supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },

    #[error("construction for {what} is not resolving: vertices {x} and {y} share a representation")]
    ConstructionFailed { what: String, set: OrderedVertexSet, x: usize, y: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
