//! Crate-wide error type. Protocol-level aborts (eavesdropper detected,
//! key sample failed, ...) are *values*, not errors; see
//! [`crate::registration::AbortReason`].

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("register capacity exceeded: {requested} qubits (max {max})")]
    Capacity { requested: usize, max: usize },

    #[error("unknown qubit id {0}")]
    UnknownQubit(u32),

    #[error("duplicate qubit target {0}")]
    DuplicateTarget(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: u16, n: u16 },

    #[error("configuration invalid: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
