use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied arguments outside an operation's contract.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("truncation degree mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },

    /// Input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("limit diverges: monomial {key} has exponent sum {exponent_sum} > {order}")]
    Divergence {
        key: String,
        exponent_sum: i64,
        order: i64,
    },

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// An internal invariant failed; always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
