//! Error type shared across the library.
//!
//! Every fallible operation returns `Result<T, Error>`. Variants are coarse on
//! purpose: callers dispatch on *kind* (unsupported ring, singular system,
//! parse failure), and the display string carries the human detail.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Multiplicative inverse of zero requested.
    #[error("inversion of zero")]
    InversionOfZero,

    /// The ring has no finite coordinatization over its coordinate subfield
    /// (never raised by the four built-in rings, all of which are finite over K).
    #[error("ring has no finite coordinatization")]
    NoFiniteCoordinatization,

    /// The operation has no decision procedure or closed form for this ring.
    #[error("operation not supported for this ring: {0}")]
    UnsupportedRing(&'static str),

    /// Element enumeration requested on an infinite ring.
    #[error("ring is not enumerable")]
    NotEnumerable,

    /// Left division requires the twist to be invertible.
    #[error("sigma is not invertible for this ring")]
    SigmaNotInvertible,

    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,

    /// High-degree evaluation needs a modulus of degree at least 1.
    #[error("modulus degree too small for evaluation")]
    DegreeTooSmall,

    /// gcrd(0, 0) has no monic normalization.
    #[error("both operands are zero")]
    BothZero,

    /// The operation needs a nonzero polynomial.
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    /// Point-set operation on an empty set.
    #[error("empty point set")]
    EmptySet,

    /// Two point-set entries define the same skew polynomial.
    #[error("duplicate point-set entries (same associated polynomial)")]
    DuplicatePoint,

    /// Sequence operations need at least one point.
    #[error("empty sequence")]
    EmptySequence,

    /// The point tuple is not a multiplicity sequence.
    #[error("sequence is not a valid multiplicity sequence")]
    InvalidSequence,

    /// A sequence that must carry a validation mark does not.
    #[error("sequence has not been validated")]
    ValidationMissing,

    /// The point family is not P-independent (singular interpolation matrix).
    #[error("points are not P-independent")]
    NotPIndependent,

    /// Linear system dimensions do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Inconsistent linear system; the certificate is an equation (column) index.
    #[error("linear system has no solution (inconsistent at column {column})")]
    NoSolution { column: usize },

    /// Underdetermined linear system; the certificate is an equation (column) index.
    #[error("linear system is underdetermined (no pivot for column {column})")]
    NonUnique { column: usize },

    /// Mixing elements from different ring contexts.
    #[error("element does not belong to this ring context: {0}")]
    ContextMismatch(String),

    /// Ring construction from invalid data (composite characteristic,
    /// reducible modulus, zero derivation scale, ...).
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    /// Text that does not conform to the grammar. `position` is a byte offset.
    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },
}

impl Error {
    /// Convenience constructor used throughout the parser.
    pub fn parse(position: usize, expected: impl Into<String>) -> Self {
        Error::Parse { position, expected: expected.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
