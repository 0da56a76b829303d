//! Error type shared by all solver modules.

use thiserror::Error;

/// Errors surfaced by the approximation solvers and their numeric primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A square, symmetric matrix was required but the input deviates from
    /// symmetry by more than the allowed tolerance.
    #[error("matrix is not symmetric within tolerance (max asymmetry {max_asymmetry:.3e})")]
    NonSymmetric { max_asymmetry: f64 },

    /// An operation that needs a nonzero matrix received the zero matrix.
    #[error("matrix is identically zero")]
    ZeroMatrix,

    /// A rank-1 solver received a matrix of rank zero.
    #[error("matrix has rank zero; no rank-1 approximation exists with c != 0")]
    RankZero,

    /// Polynomial root finding was asked to factor the zero polynomial.
    #[error("polynomial is identically zero after trimming")]
    DegenerateZeroPolynomial,

    /// Parameter extraction requires a numerically rank-1 input.
    #[error("matrix is not numerically rank-1 (sigma1/sigma0 = {ratio:.3e})")]
    NotRank1 { ratio: f64 },

    /// Parameter extraction requires a Hankel input.
    #[error("matrix is not Hankel within tolerance (max anti-diagonal deviation {deviation:.3e})")]
    NotHankel { deviation: f64 },

    /// The secular function was evaluated at a pole with nonzero weight.
    #[error("secular function evaluated at a pole with weight {weight:.3e}")]
    PoleHit { weight: f64 },

    /// The diagonal-plus-rank-1 sign pattern matches neither supported
    /// semidefiniteness criterion.
    #[error("diagonal-plus-rank-1 sign pattern matches no supported criterion")]
    HypothesisMismatch,

    /// Degenerate dominant eigenvalue pair of opposite signs: no real rank-1
    /// Hankel matrix attains the optimal spectral error.
    #[error("degenerate dominant eigenvalues of opposite sign; no rank-1 Hankel solution")]
    NoRank1Solution,

    /// A square matrix was required.
    #[error("matrix must be square (got {rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// Matrix dimensions are too small for the requested solver.
    #[error("matrix dimensions {rows}x{cols} are too small (need at least {min} each)")]
    TooSmall { rows: usize, cols: usize, min: usize },

    /// An iterative routine failed to converge within its iteration budget.
    #[error("{what} did not converge within {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
