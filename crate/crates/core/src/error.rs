//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors raised by the combinatorial and group-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition was built from an empty (or all-zero) sequence.
    EmptyPartition,
    /// A partition part was negative.
    NegativePart(i64),
    /// Two partitions of different totals were compared.
    SizeMismatch { left: usize, right: usize },
    /// `ord` was applied to an all-zero sequence.
    ZeroSequence,
    /// The partition does not lie in any admissible `Pai(n, q)`.
    NotInPai,
    /// The partition is not a nilpotent Jordan type for the algebra.
    NotAJordanType { algebra: String },
    /// The rank/kind combination does not name a classical algebra.
    InvalidAlgebra(String),
    /// A precondition of a classification rule was violated.
    Precondition(String),
    /// The centralizer oracle refused to run above its rank cap.
    OracleCap { n: usize, cap: usize },
    /// The orbit admits no polarization, so there is no resolution graph.
    NoPolarizations,
    /// A node label was not found in the resolution graph.
    UnknownNode(String),
    /// Group closure exceeded the enumeration cap.
    ClosureCapExceeded { cap: usize },
    /// Division by zero in an exact field.
    DivisionByZero,
    /// Matrix dimensions incompatible with the requested operation.
    ShapeMismatch,
    /// A subspace of the wrong codimension was passed to a codim-2 query.
    WrongCodimension { expected: usize, got: usize },
    /// Internal consistency failure (an invariant the construction
    /// guarantees was observed to fail).
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyPartition => write!(f, "partition must have at least one positive part"),
            Error::NegativePart(v) => write!(f, "partition part {} is negative", v),
            Error::SizeMismatch { left, right } => {
                write!(f, "partitions of different totals: {} vs {}", left, right)
            }
            Error::ZeroSequence => write!(f, "sequence has no positive entry"),
            Error::NotInPai => write!(f, "partition lies in no admissible Pai(n, q)"),
            Error::NotAJordanType { algebra } => {
                write!(
                    f,
                    "partition is not a nilpotent Jordan type for {}",
                    algebra
                )
            }
            Error::InvalidAlgebra(msg) => write!(f, "invalid algebra: {}", msg),
            Error::Precondition(msg) => write!(f, "precondition violated: {}", msg),
            Error::OracleCap { n, cap } => {
                write!(
                    f,
                    "centralizer oracle capped at n <= {}, got n = {}",
                    cap, n
                )
            }
            Error::NoPolarizations => write!(f, "orbit admits no polarization"),
            Error::UnknownNode(label) => write!(f, "no graph node labelled {}", label),
            Error::ClosureCapExceeded { cap } => {
                write!(f, "group closure exceeded cap of {} elements", cap)
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ShapeMismatch => write!(f, "matrix shape mismatch"),
            Error::WrongCodimension { expected, got } => {
                write!(f, "expected codimension {}, got {}", expected, got)
            }
            Error::Inconsistency(msg) => write!(f, "internal consistency failure: {}", msg),
        }
    }
}

impl core::error::Error for Error {}
