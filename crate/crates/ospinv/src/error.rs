//! Crate-wide error type.
//!
//! Recoverable failures (bad indices, mismatched rings, size caps) are
//! reported through [`Error`].  Violations of internal certificates — a
//! re-multiplication check failing, a nilpotency cap overrun, a rank
//! exceeding a proven dimension — indicate a bug in the engine itself and
//! panic with a diagnostic instead of returning an error.

use crate::ring::AlgebraSignature;

/// Recoverable error conditions surfaced by the public API.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two operands live in different coordinate rings.
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch {
        left: AlgebraSignature,
        right: AlgebraSignature,
    },
    /// A generator index `(a, t)` fell outside the signature's ranges.
    #[error("{what} index {value} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },
    /// An operation required `N = m` (square even matrix) or `N ≥ m`.
    #[error("operation requires {required} copies of V, signature has N = {found}")]
    WrongCopyCount { required: String, found: usize },
    /// A substitution image has the wrong parity for its generator.
    #[error(
        "image of generator (a={a}, t={t}) has parity {found}, generator has parity {expected}"
    )]
    ParityMismatch {
        a: usize,
        t: usize,
        expected: u8,
        found: u8,
    },
    /// A matrix operation met a non-square array.
    #[error("matrix is not square: {rows}×{cols}")]
    NotSquare { rows: usize, cols: usize },
    /// A determinant/adjugate input contained an entry of odd parity.
    #[error("matrix entry ({row},{col}) is not of even parity")]
    OddEntry { row: usize, col: usize },
    /// A group element is not invertible (or fails its claimed block shape).
    #[error("group element is not invertible")]
    NotInvertible,
    /// A configured size cap would be exceeded.
    #[error("{what} of size {size} exceeds the cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// A partition argument violated a precondition.
    #[error("invalid partition argument: {0}")]
    BadPartition(String),
    /// A serialized term record failed structural validation.
    #[error("invalid term record: {0}")]
    BadTermRecord(String),
    /// A verification-suite name is not in the catalogue.
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
