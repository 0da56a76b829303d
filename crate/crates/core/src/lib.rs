//! Optimal rank-1 Hankel and Toeplitz matrix approximation.
//!
//! This crate computes the *best* rank-1 Hankel approximation of a matrix —
//! not a heuristic — in two norms:
//!
//! * **Frobenius norm**, for arbitrary complex matrices
//!   ([`frobenius::solve_complex`]) or with parameters restricted to the
//!   reals ([`frobenius::solve_real`]). The problem reduces to maximizing
//!   the modulus of a rational function of the generator `z`, whose real
//!   critical points are polynomial roots.
//! * **Spectral norm**, for real symmetric matrices
//!   ([`spectral::solve_spectral`]). The optimal error level is
//!   characterized through a secular function of the eigendecomposition and
//!   found either at a joint eigenvector zero or by bisection.
//!
//! Every rank-1 Hankel matrix has the form `c·z_M z_Nᵀ` with `z_N(z)` the
//! normalized geometric vector `(1, z, …, z^{N−1})ᵀ` (or `c·e_M e_Nᵀ` in
//! the limit `z → ∞`), so a solution is always the pair `(c, z)` —
//! see [`hankel::Rank1HankelParams`]. Toeplitz problems reduce to Hankel
//! ones by column reversal ([`hankel::toeplitz_flip`]).
//!
//! The widely used Cadzow alternating-projection heuristic is provided as
//! an instrumented baseline ([`cadzow::cadzow_iterate`]); its iterates
//! provably converge, but typically to a suboptimal fixed point, and on
//! some inputs they collapse to zero.
//!
//! All numerical primitives (Jacobi eigendecomposition and SVD, Sturm
//! sequence root isolation, grid/golden-section maximization) are
//! self-contained dense implementations in [`numerics`], built for
//! determinism and robustness at desk scale.

// Indexed loops are the clearer idiom in the dense kernels here, which walk
// several arrays by row/column index at once.
#![allow(clippy::needless_range_loop)]

pub mod cadzow;
pub mod error;
pub mod frobenius;
pub mod hankel;
pub mod matrix;
pub mod numerics;
pub mod spectral;

pub use cadzow::{cadzow_iterate, fixed_point_residual, CadzowTerminal, CadzowTrace};
pub use error::{Error, Result};
pub use frobenius::{
    objective, solve_complex, solve_real, svd_coincidence_certificate, FrobeniusOptions,
    FrobeniusSolution, SearchMode,
};
pub use hankel::{
    antidiagonal_sums, build_rank1, extract_params, flip_both, hankel_deviation, hankel_project,
    is_hankel, normalizer, structured_vector, toeplitz_flip, AntiDiagonalSums, ExtendedScalar,
    Rank1HankelParams, StructuredVector,
};
pub use matrix::DenseMatrix;
pub use numerics::{
    eig_symmetric, maximize_1d, real_roots, spectral_norm, svd, RootSet, Svd, SymmetricEigen,
};
pub use spectral::{
    case1_test, degenerate_top, diag_rank1_det, psd_check, secular_eval, solve_spectral,
    DiagPlusRank1, RankOneSign, SpectralCase, SpectralOptions, SpectralSolution,
};
