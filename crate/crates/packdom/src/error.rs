use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {v} out of range for graph with {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex sequence is not a path: {0}")]
    NotAPath(String),

    #[error("path is not isometric")]
    NotIsometric,

    #[error("graph is not a cactus")]
    NotCactus,

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("search budget exceeded after {nodes} nodes; result inconclusive")]
    Inconclusive { nodes: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
