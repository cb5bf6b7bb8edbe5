use thiserror::Error;

/// Errors raised by card construction, enumeration and simulation.
#[derive(Debug, Error)]
pub enum BingoError {
    #[error("invalid card spec: {0}")]
    InvalidSpec(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("{lines} lines exceed the enumeration limit of {limit}; use Monte Carlo simulation instead")]
    Capacity { lines: usize, limit: usize },

    #[error("instance too large for brute force: {0}")]
    OracleCapacity(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl BingoError {
    /// Process exit code: 1 usage/validation, 2 capacity, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            BingoError::InvalidSpec(_) | BingoError::Validation(_) => 1,
            BingoError::Capacity { .. } | BingoError::OracleCapacity(_) => 2,
            BingoError::Internal(_) | BingoError::Io(_) | BingoError::Json(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, BingoError>;
