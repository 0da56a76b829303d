//! Symmetric eigendecomposition by the cyclic Jacobi method.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Eigendecomposition of a real symmetric matrix, ordered by non-increasing
/// eigenvalue modulus.
///
/// Ties in modulus are broken by placing the positive eigenvalue first, then
/// by original (pre-sort) index, so the ordering is deterministic.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues with |λ₀| ≥ |λ₁| ≥ …
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors (column j pairs with eigenvalue j),
    /// stored as row-major columns: `eigenvectors[j]` is the j-th column.
    pub eigenvectors: Vec<Vec<f64>>,
}

impl SymmetricEigen {
    /// Matrix order.
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// Computes the eigendecomposition of a real symmetric matrix by cyclic
/// Jacobi rotations.
///
/// `tol` bounds the accepted asymmetry relative to the Frobenius norm.
/// Eigenpairs come back ordered by non-increasing |λ|, with modulus ties
/// resolved positive-first; each eigenvector's largest-modulus component is
/// made non-negative so the output is fully deterministic.
pub fn eig_symmetric(a: &DenseMatrix, tol: f64) -> Result<SymmetricEigen> {
    a.check_real_symmetric(tol)?;
    let n = a.rows();

    // Work on a real copy; accumulate rotations in v (column-major columns).
    let mut m: Vec<f64> = a.real_entries();
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let idx = |i: usize, j: usize| i * n + j;
    let scale: f64 = m.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let stop = 1e-15 * scale;
    let max_sweeps = 60;
    let mut converged = false;

    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[idx(p, q)].abs();
            }
        }
        if off <= stop {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[idx(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = m[idx(p, p)];
                let aqq = m[idx(q, q)];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e150 {
                    // Avoid overflow in theta^2: rotation angle is tiny.
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Update rows/columns p and q of the symmetric matrix.
                for k in 0..n {
                    let mkp = m[idx(k, p)];
                    let mkq = m[idx(k, q)];
                    m[idx(k, p)] = c * mkp - s * mkq;
                    m[idx(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[idx(p, k)];
                    let mqk = m[idx(q, k)];
                    m[idx(p, k)] = c * mpk - s * mqk;
                    m[idx(q, k)] = s * mpk + c * mqk;
                }
                // Accumulate the rotation into the eigenvector matrix.
                for k in 0..n {
                    let vkp = v[idx(k, p)];
                    let vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - s * vkq;
                    v[idx(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "Jacobi eigendecomposition",
            iterations: max_sweeps,
        });
    }

    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|j| {
            let lam = m[idx(j, j)];
            let col: Vec<f64> = (0..n).map(|i| v[idx(i, j)]).collect();
            (lam, col)
        })
        .collect();

    // Non-increasing modulus; ties place the positive eigenvalue first,
    // then keep original index order (stable sort).
    pairs.sort_by(|a, b| {
        b.0.abs()
            .partial_cmp(&a.0.abs())
            .unwrap()
            .then_with(|| b.0.partial_cmp(&a.0).unwrap())
    });

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for (lam, mut col) in pairs {
        // Deterministic sign: make the largest-modulus component positive.
        let (mut best_i, mut best) = (0usize, 0.0f64);
        for (i, &x) in col.iter().enumerate() {
            if x.abs() > best {
                best = x.abs();
                best_i = i;
            }
        }
        if col[best_i] < 0.0 {
            for x in col.iter_mut() {
                *x = -*x;
            }
        }
        eigenvalues.push(lam);
        eigenvectors.push(col);
    }

    Ok(SymmetricEigen {
        eigenvalues,
        eigenvectors,
    })
}
