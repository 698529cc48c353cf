//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, NetdimError>;

#[derive(Debug, Error)]
pub enum NetdimError {
    /// Malformed edge-list input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The input contained no usable edges.
    #[error("empty graph: {0}")]
    EmptyGraph(String),

    /// A node id outside `0..node_count`.
    #[error("node {node} out of range (graph has {count} nodes)")]
    NodeOutOfRange { node: u32, count: usize },

    /// Invalid argument to an operation (bad probability, empty seed set, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Bad experiment configuration (unknown method, malformed grid, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A regression or profile with too little information to be meaningful.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Iterative solver failed to reach tolerance. Carries the last iterate
    /// so callers can inspect how far it got.
    #[error("did not converge after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        last: Vec<f64>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl NetdimError {
    /// Process exit code the CLI maps this error to.
    ///
    /// 1 = usage/config, 2 = I/O, 3 = numerical/convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            NetdimError::Io(_) | NetdimError::Json(_) => 2,
            NetdimError::NonConvergence { .. } => 3,
            _ => 1,
        }
    }
}
