use thiserror::Error;

/// Broad classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    Domain,
    Capacity,
    Numeric,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("unknown symmetric function basis {0:?} (expected one of s, e, h, p, m)")]
    UnknownBasis(String),

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("invalid vertex {0}")]
    InvalidVertex(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("capacity exceeded for {what}: {requested} > limit {limit}")]
    Capacity {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Disconnected | Error::NotBipartite => ErrorKind::Domain,
            Error::Capacity { .. } => ErrorKind::Capacity,
            Error::NoConvergence { .. } => ErrorKind::Numeric,
            _ => ErrorKind::InvalidInput,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
