//! Singular value decomposition by the one-sided (Hestenes) Jacobi method,
//! extended to complex matrices via per-pair phase rotations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{vec_dot, vec_norm, DenseMatrix};

/// Economy-size singular value decomposition `A = U Σ V*` with
/// `min(M, N)` triplets and `σ₀ ≥ σ₁ ≥ … ≥ 0`.
///
/// When the largest singular value is repeated, the first pair returned is
/// the one of smallest original column index (stable ordering), and each
/// left vector's largest-modulus component is rotated to the positive real
/// axis, so the decomposition is deterministic.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Left singular vectors; `u[j]` has length M.
    pub u: Vec<Vec<Complex64>>,
    /// Singular values, non-increasing.
    pub sigma: Vec<f64>,
    /// Right singular vectors; `v[j]` has length N.
    pub v: Vec<Vec<Complex64>>,
}

impl Svd {
    /// Materializes the rank-1 piece `σ_j u_j v_j*`.
    pub fn rank1_term(&self, j: usize) -> DenseMatrix {
        let vc: Vec<Complex64> = self.v[j].iter().map(|x| x.conj()).collect();
        DenseMatrix::outer(&self.u[j], &vc).scale(Complex64::new(self.sigma[j], 0.0))
    }

    /// Reconstructs the full matrix `U Σ V*`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let mut acc = self.rank1_term(0);
        for j in 1..self.sigma.len() {
            acc = acc.add(&self.rank1_term(j));
        }
        acc
    }
}

/// Computes the SVD of a nonzero matrix.
pub fn svd(a: &DenseMatrix) -> Result<Svd> {
    if a.norm_fro() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    if a.rows() >= a.cols() {
        svd_tall(a)
    } else {
        // A = (A*)* : decompose the conjugate transpose and swap factors.
        let s = svd_tall(&a.conj_transpose())?;
        Ok(normalize_phases(Svd {
            u: s.v,
            sigma: s.sigma,
            v: s.u,
        }))
    }
}

/// One-sided Jacobi on a tall (M ≥ N) matrix: orthogonalize the columns of A
/// by plane rotations applied from the right, accumulating them into V.
fn svd_tall(a: &DenseMatrix) -> Result<Svd> {
    let m = a.rows();
    let n = a.cols();

    // Columns of the working matrix.
    let mut w: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..m).map(|i| a.get(i, j)).collect())
        .collect();
    // Accumulated right factor: columns of V.
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect();

    // Rounding noise in a length-m complex dot product is of order
    // sqrt(m)·2⁻⁵²·‖w_p‖‖w_q‖, so the stopping threshold must sit above it
    // or the sweep loop chases noise forever.
    let eps = 1e-13;
    let max_sweeps = 60;
    let mut converged = false;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = vec_norm(&w[p]).powi(2);
                let beta = vec_norm(&w[q]).powi(2);
                let gamma = vec_dot(&w[p], &w[q]);
                let g = gamma.norm();
                if g <= eps * (alpha * beta).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                // Absorb the phase of gamma into column q so the 2x2 Gram
                // block becomes real symmetric, then rotate as in the real
                // Jacobi method.
                // After scaling column q by conj(γ)/|γ| the new inner
                // product w_p* w_q equals |γ|, making the 2x2 Gram block
                // real symmetric.
                let phase = gamma.conj() / g;
                for x in w[q].iter_mut() {
                    *x *= phase;
                }
                for x in v[q].iter_mut() {
                    *x *= phase;
                }
                let tau = (beta - alpha) / (2.0 * g);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..m {
                    let wp = w[p][i];
                    let wq = w[q][i];
                    w[p][i] = c * wp - s * wq;
                    w[q][i] = s * wp + c * wq;
                }
                for i in 0..n {
                    let vp = v[p][i];
                    let vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "Jacobi SVD",
            iterations: max_sweeps,
        });
    }

    // Extract singular values and left vectors; stable sort keeps original
    // column order among equal singular values.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = w.iter().map(|col| vec_norm(col)).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let tol_zero = 1e-15 * norms.iter().cloned().fold(0.0, f64::max).max(1e-300);
    let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    let mut v_cols = Vec::with_capacity(n);
    for &j in &order {
        sigma.push(norms[j]);
        v_cols.push(v[j].clone());
        if norms[j] > tol_zero {
            u_cols.push(w[j].iter().map(|x| x / norms[j]).collect());
        } else {
            u_cols.push(vec![Complex64::new(0.0, 0.0); m]); // completed below
        }
    }

    // Orthonormal completion for zero singular values: Gram-Schmidt of
    // standard basis vectors against the accepted left vectors.
    for j in 0..n {
        if sigma[j] > tol_zero {
            continue;
        }
        sigma[j] = 0.0;
        'basis: for b in 0..m {
            let mut cand: Vec<Complex64> = (0..m)
                .map(|i| Complex64::new(if i == b { 1.0 } else { 0.0 }, 0.0))
                .collect();
            for k in 0..n {
                if k == j || (sigma[k] == 0.0 && k > j) {
                    continue;
                }
                let proj = vec_dot(&u_cols[k], &cand);
                for i in 0..m {
                    cand[i] -= proj * u_cols[k][i];
                }
            }
            let nrm = vec_norm(&cand);
            if nrm > 0.5 {
                for x in cand.iter_mut() {
                    *x /= nrm;
                }
                u_cols[j] = cand;
                break 'basis;
            }
        }
    }

    Ok(normalize_phases(Svd {
        u: u_cols,
        sigma,
        v: v_cols,
    }))
}

/// Rotates each (u_j, v_j) pair by a common unimodular phase so the
/// largest-modulus component of u_j is real positive. `u v*` is invariant
/// under this change, so the decomposition is unaffected.
fn normalize_phases(mut s: Svd) -> Svd {
    for j in 0..s.sigma.len() {
        let (mut best_i, mut best) = (0usize, 0.0f64);
        for (i, x) in s.u[j].iter().enumerate() {
            if x.norm() > best {
                best = x.norm();
                best_i = i;
            }
        }
        if best == 0.0 {
            continue;
        }
        let phase = s.u[j][best_i].conj() / best;
        for x in s.u[j].iter_mut() {
            *x *= phase;
        }
        for x in s.v[j].iter_mut() {
            *x *= phase;
        }
    }
    s
}

/// Spectral norm (largest singular value); zero for the zero matrix.
pub fn spectral_norm(a: &DenseMatrix) -> f64 {
    match svd(a) {
        Ok(s) => s.sigma[0],
        Err(_) => 0.0,
    }
}
