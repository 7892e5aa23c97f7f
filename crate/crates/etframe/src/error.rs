use thiserror::Error;

/// Reason a positive operator was rejected by the rank-one decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotDecomposableReason {
    /// Trace is not within tolerance of an integer at least the rank.
    Trace,
    /// Operator norm is below one and the operator is not a projection.
    Norm,
}

impl std::fmt::Display for NotDecomposableReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotDecomposableReason::Trace => write!(f, "trace"),
            NotDecomposableReason::Norm => write!(f, "norm"),
        }
    }
}

/// Error type shared by all library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("operator is not invertible: {0}")]
    NotInvertible(String),

    #[error("operator is not positive semidefinite: {0}")]
    NotPsd(String),

    #[error("not decomposable (reason: {reason}): {detail}")]
    NotDecomposable {
        reason: NotDecomposableReason,
        detail: String,
    },

    #[error("invalid case-2 state: {0}")]
    InvalidCase2State(String),

    #[error("infeasible prefix: only the first {max_feasible} entries can be scheduled")]
    InfeasiblePrefix { max_feasible: usize },

    #[error("end of stream: {0}")]
    EndOfStream(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
