//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on user-supplied data failed (bad index, size mismatch,
    /// non-refinement, unsupported basis pair, ...).
    #[error("{0}")]
    Invalid(String),

    /// Text that could not be parsed (polynomials, shapes, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),

    /// A computation exceeded a configured size cap.
    #[error("{0}")]
    CapExceeded(String),

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
