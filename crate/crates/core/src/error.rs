use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs are limited to {max} vertices, got {n}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices { n: usize },

    #[error("part count must be at least 1")]
    ZeroParts,

    #[error("part sizes and multiplicities must be positive (entry {index} is zero)")]
    ZeroEntry { index: usize },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vertex counts differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cannot symmetrize vertex {0} to itself")]
    SameVertex(usize),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("line {line}: {error}")]
    AtLine { line: usize, error: Box<Error> },

    #[error("n = {n} exceeds the configured ceiling of {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
