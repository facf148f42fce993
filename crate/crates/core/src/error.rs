use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The instance is larger than the algorithm is configured to handle.
    #[error("capacity exceeded: {what} has size {size}, limit is {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid rotation at vertex {vertex}: {message}")]
    Rotation { vertex: usize, message: String },

    #[error("vertex {vertex} is not balanced: in-degree {in_degree}, out-degree {out_degree}")]
    NotEulerian {
        vertex: usize,
        in_degree: usize,
        out_degree: usize,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// An identity that must hold by construction was violated.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_capacity(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::Capacity { what, size, limit })
    } else {
        Ok(())
    }
}
