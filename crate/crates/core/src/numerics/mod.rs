//! Decomposition and scalar-search primitives consumed by every solver:
//! symmetric eigendecomposition, singular value decomposition, real
//! polynomial root finding, and bounded 1-D maximization.
//!
//! All routines here are self-contained dense implementations tuned for
//! desk-scale problems (dimensions up to a few hundred): a cyclic Jacobi
//! method for symmetric eigenproblems, a one-sided Jacobi method for the
//! SVD, and Sturm-sequence bracketing for polynomial roots. Robustness and
//! determinism are the design goals, not speed.

mod eigen;
mod optimize;
mod roots;
mod svd;

pub use eigen::{eig_symmetric, SymmetricEigen};
pub use optimize::maximize_1d;
pub use roots::{real_roots, RootSet};
pub(crate) use roots::{poly_deriv, poly_mul, poly_scale, poly_sub};
pub use svd::{spectral_norm, svd, Svd};
