use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of an operation (odd `n`, `s > r`, even `q > 2`, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid input: malformed PD code, unparsable expression, bad JSON.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A computation would exceed a hard resource cap.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A combinatorial identity that the caller promised did not hold.
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
