//! Crate-wide error type.

use thiserror::Error;

/// Errors shared across modules. Every failure mode that callers are expected
/// to branch on gets its own variant; diagnostics carry enough context to
/// reproduce the failing computation.
#[derive(Debug, Error)]
pub enum Error {
    /// Arithmetic between scalars of different fields (or different primes).
    #[error("mixed fields: {0}")]
    MixedFields(String),

    /// A linear system that was expected to be solvable had no solution.
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),

    /// Exact division of Laurent polynomials left a remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// Finite-field point counts are not consistent with a single integer
    /// polynomial of the expected degree.
    #[error("non-polynomial point count: {0}")]
    NonPolynomialCount(String),

    /// Mutation closure exceeded the given bound (quiver not of finite type
    /// or the bound is too small).
    #[error("cluster-variable enumeration not closed: {0}")]
    NotClosed(String),

    /// Membership/expansion search failed within the degree bound.
    #[error("no expansion found: {0}")]
    NoExpansion(String),

    /// The requested cone is outside the supported class for this backend.
    #[error("unsupported cone: {0}")]
    UnsupportedCone(String),

    /// An operation hypothesis was violated (e.g. AR translate of a
    /// projective, non-rigid tilting data, wrong polygon).
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// The given initial values do not define a frieze.
    #[error("not a frieze: {0}")]
    NotAFrieze(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
