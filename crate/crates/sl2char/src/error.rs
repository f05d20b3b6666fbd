//! Error type shared by the exact-arithmetic and group-enumeration layers.

use std::fmt;

/// Everything that can go wrong short of a failed verification verdict.
///
/// Failed *checks* (an identity that does not hold) are reported as data, not
/// as errors; `Error` covers violated preconditions, impossible arithmetic,
/// size-guard trips, and internal inconsistencies that indicate a bug in a
/// formula transcription rather than in the mathematics being tested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input violates a documented precondition (composite modulus,
    /// level below 2, a "nonresidue" that is actually a square, ...).
    InvalidInput(String),
    /// Two cyclotomic numbers living in different fields were combined.
    PrimeMismatch { left: u64, right: u64 },
    /// Inversion of zero.
    DivisionByZero,
    /// A cyclotomic number expected to lie in the quadratic subfield
    /// Q(sqrt(±p)) does not.
    NotInSubfield,
    /// A matrix expected in the kernel of reduction mod p^(r-1) is not.
    NotInKernel,
    /// An enumeration or table would exceed the size guard.
    TooLarge { size: u128, limit: u64 },
    /// An exact computation produced a value that contradicts something it
    /// is mathematically required to satisfy (non-integral multiplicity,
    /// mismatched twisted-sum split, ...). Always a bug, never user error.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::PrimeMismatch { left, right } => {
                write!(f, "cyclotomic prime mismatch: {left} vs {right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotInSubfield => {
                write!(f, "value does not lie in the quadratic subfield")
            }
            Error::NotInKernel => {
                write!(f, "matrix is not in the congruence kernel")
            }
            Error::TooLarge { size, limit } => {
                write!(f, "enumeration size {size} exceeds the guard {limit}")
            }
            Error::Inconsistent(msg) => write!(f, "internal consistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
