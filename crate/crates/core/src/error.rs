use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Result not representable in the scalar type.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Potential parameters for which no minimum exists.
    #[error("no minimum: {0}")]
    NoMinimum(String),

    /// The blended centrifugal approximation violates its validity condition.
    #[error("approximation invalid for l = {l}: {reason}")]
    ApproximationInvalid { l: u32, reason: String },

    /// The requested state is not bound for these parameters.
    #[error("state (n_r = {n_r}, l = {l}) is not bound: {reason}")]
    NotBound { n_r: u32, l: u32, reason: String },

    /// Violated API contract (mixed bases, bad quantum numbers, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Eigenvalue search found no eigenvalue in the bracket.
    #[error("no eigenvalue found: {0}")]
    NotFound(String),

    /// Eigenvalue search converged to a state with the wrong node count.
    #[error("wrong state: expected {expected} nodes, found {found}")]
    WrongState { expected: u32, found: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
