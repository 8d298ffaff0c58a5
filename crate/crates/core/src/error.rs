use thiserror::Error;

/// Errors raised by the coefficient routines.
///
/// Degenerate but well-formed inputs (a skew shape that does not exist, a
/// negative strip size) are answered with `0`; errors are reserved for
/// inputs that fall outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("{0} is not contained in {1}")]
    NotContained(String, String),

    #[error("input out of domain: {0}")]
    Domain(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    /// A computed value contradicts an identity that should hold for it.
    #[error("counterexample: {0}")]
    Counterexample(String),
}

pub type Result<T> = std::result::Result<T, Error>;
