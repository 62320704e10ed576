use thiserror::Error;

/// Errors raised by the kernel, the polygon model and the verifiers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation was called outside of its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Raw polygon input failed validation.
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    /// A lemma configuration does not satisfy the lemma's hypotheses.
    #[error("configuration rejected: {0}")]
    Rejected(String),

    /// A scalar or document could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The generator could not produce a valid sample.
    #[error("generator error: {0}")]
    Generator(String),

    /// An interval evaluation could not separate a value from zero.
    #[error("degenerate sample: {0}")]
    Degenerate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
