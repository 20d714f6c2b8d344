//! Error type shared by every module of the crate.

use std::fmt;

/// Errors produced by the library.
///
/// The CLI maps these onto exit codes: parse errors are usage errors,
/// precondition and domain violations are caller mistakes, and
/// `Internal` signals an inconsistency that should never be reachable
/// from valid inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in operator text, with byte position and a hint.
    Parse { pos: usize, msg: String },
    /// An argument violated a documented precondition.
    Precondition(String),
    /// A value outside the mathematical domain of an operation
    /// (wrong order, out-of-range index, zero denominator, ...).
    Domain(String),
    /// A singularity the implementation does not handle
    /// (for example a pole of order two or more at the origin).
    UnsupportedSingularity(String),
    /// Holonomic enumeration hit a vanishing leading coefficient.
    SingularStep { step: i64 },
    /// No structural result exists (for example no order-5 relation
    /// for the wedge of a non-CY operator).
    Structural(String),
    /// The leading recursion coefficient does not reduce to a quadratic.
    NoSignature(String),
    /// Catalog lookup failed; carries near matches when available.
    NotFound { id: String, near: Vec<String> },
    /// An internal consistency check failed.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "parse error at byte {}: {}", pos, msg),
            Error::Precondition(m) => write!(f, "precondition violated: {}", m),
            Error::Domain(m) => write!(f, "domain error: {}", m),
            Error::UnsupportedSingularity(m) => write!(f, "unsupported singularity: {}", m),
            Error::SingularStep { step } => {
                write!(f, "singular leading coefficient at enumeration step {}", step)
            }
            Error::Structural(m) => write!(f, "structural error: {}", m),
            Error::NoSignature(m) => write!(f, "no signature: {}", m),
            Error::NotFound { id, near } => {
                if near.is_empty() {
                    write!(f, "catalog id not found: {}", id)
                } else {
                    write!(f, "catalog id not found: {} (near matches: {})", id, near.join(", "))
                }
            }
            Error::Internal(m) => write!(f, "internal inconsistency: {}", m),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
