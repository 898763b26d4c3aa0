use thiserror::Error;

/// Errors raised by the algebra layer and the identity checks built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Division left a nonzero remainder; carries its rendering as a witness.
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },
    /// Input expected to be symmetric is not fixed by the swap of x_i and x_j.
    #[error("non-symmetric input: not fixed by the swap of x{i} and x{j}")]
    NonSymmetric { i: usize, j: usize },
    /// An internal invariant failed (e.g. a division that must be exact was not).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Eigenvalue collision in the triangular eigen-solver.
    #[error("degenerate eigenvalues: {0}")]
    Degeneracy(String),
    /// Unknown identity name, bad parameters and similar configuration errors.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
