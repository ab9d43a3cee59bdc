use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text that does not describe a partition.
    #[error("cannot parse partition at `{token}`: {reason}")]
    Parse { token: String, reason: String },
    /// A size exceeded the configured enumeration bound.
    #[error("size {size} exceeds the configured bound {bound}")]
    SizeBound { size: usize, bound: usize },
    /// Inputs outside an operation's domain (size mismatch, containment, ...).
    #[error("{0}")]
    Domain(String),
    /// The scalar type could not hold an intermediate value.
    #[error("arithmetic overflow in the scalar type")]
    Overflow,
    /// A mathematical invariant failed. Never expected to fire.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
