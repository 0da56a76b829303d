//! The Cadzow alternating-projection baseline for rank-1 Hankel
//! approximation.
//!
//! Starting from the best unstructured rank-1 approximation
//! `A₀ = σ₀u₀v₀*`, the iteration alternates the orthogonal projection `P`
//! onto the Hankel subspace (anti-diagonal averaging) with rank-1 SVD
//! truncation. The leading singular values `σⱼ` decrease monotonically, and
//! the iteration converges either to the zero matrix or to a rank-1 Hankel
//! fixed point — which is generally *not* the optimal approximation in
//! either norm. The full `σⱼ` trace is recorded for inspection.

use crate::error::{Error, Result};
use crate::hankel::{extract_params, hankel_project, Rank1HankelParams};
use crate::matrix::DenseMatrix;
use crate::numerics::{spectral_norm, svd};

/// How a Cadzow run terminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CadzowTerminal {
    /// The iterates collapse to the zero matrix.
    ZeroLimit,
    /// The iterates reached a rank-1 Hankel fixed point.
    Rank1HankelFixedPoint,
    /// The iteration budget was exhausted before either limit was reached.
    MaxIterations,
}

/// Per-iteration record of a Cadzow run.
#[derive(Debug, Clone)]
pub struct CadzowTrace {
    /// Largest singular value per iteration, starting with σ₀ of the input.
    pub sigmas: Vec<f64>,
    /// `‖Aⱼ − Aⱼ₋₁‖_F` per step.
    pub iterate_deltas: Vec<f64>,
    /// Terminal classification.
    pub terminal: CadzowTerminal,
    /// Extracted parameters on fixed-point termination.
    pub final_params: Option<Rank1HankelParams>,
    /// Number of iterations performed (excluding the initial truncation).
    pub iterations: usize,
    /// `‖A − A_final‖_F` against the input (the zero matrix for a zero
    /// limit).
    pub error_frobenius: f64,
    /// `‖A − A_final‖₂` against the input.
    pub error_spectral: f64,
    /// Final rank-1 iterate.
    pub final_matrix: DenseMatrix,
}

/// Runs the Cadzow iteration.
///
/// Stops when the iterate movement falls below `tol·‖A‖_F` (fixed point),
/// when the leading singular value falls below `tol_zero·‖A‖_F` (zero
/// limit), or after `max_iter` iterations. On a fixed point the parameters
/// are extracted from the limit.
///
/// A delta-stall is classified by the scale-free Hankel residual of the
/// current singular pair, `‖uv* − P(uv*)‖_F`: a genuine rank-1 Hankel fixed
/// point drives this residual to zero, while an iterate drifting along the
/// zero-collapse path stalls with a residual far above `tol`.
pub fn cadzow_iterate(
    a: &DenseMatrix,
    tol: f64,
    tol_zero: f64,
    max_iter: usize,
) -> Result<CadzowTrace> {
    let scale = a.norm_fro();
    if scale == 0.0 {
        return Err(Error::RankZero);
    }

    // Initial rank-1 truncation A₀ = σ₀ u₀ v₀*.
    let s = svd(a)?;
    let mut current = s.rank1_term(0);
    let mut sigmas = vec![s.sigma[0]];
    let mut deltas = Vec::new();

    let mut terminal = CadzowTerminal::MaxIterations;
    let mut iterations = 0usize;

    if s.sigma[0] <= tol_zero * scale {
        terminal = CadzowTerminal::ZeroLimit;
    } else {
        for j in 1..=max_iter {
            iterations = j;
            let projected = hankel_project(&current);
            let ps = match svd(&projected) {
                Ok(ps) => ps,
                Err(Error::ZeroMatrix) => {
                    terminal = CadzowTerminal::ZeroLimit;
                    current = projected;
                    sigmas.push(0.0);
                    break;
                }
                Err(e) => return Err(e),
            };
            let next = ps.rank1_term(0);
            let delta = next.sub(&current).norm_fro();
            sigmas.push(ps.sigma[0]);
            deltas.push(delta);

            // Scale-free Hankel residual of the current singular pair.
            let uv = next.scale(num_complex::Complex64::new(1.0 / ps.sigma[0], 0.0));
            let unit_residual = uv.sub(&hankel_project(&uv)).norm_fro();

            current = next;
            if ps.sigma[0] <= tol_zero * scale {
                terminal = CadzowTerminal::ZeroLimit;
                break;
            }
            if delta <= tol * scale {
                terminal = if unit_residual <= 10.0 * tol.max(1e-14) {
                    CadzowTerminal::Rank1HankelFixedPoint
                } else {
                    CadzowTerminal::ZeroLimit
                };
                break;
            }
        }
    }

    // The input may itself be rank-1 Hankel, in which case the projection
    // leaves A₀ unchanged and the loop stops at the first delta check; the
    // residual then certifies the fixed point immediately.
    if iterations == 0 && terminal == CadzowTerminal::MaxIterations {
        terminal = CadzowTerminal::Rank1HankelFixedPoint;
    }

    let final_matrix = if terminal == CadzowTerminal::ZeroLimit {
        DenseMatrix::zeros(a.rows(), a.cols())
    } else {
        current
    };
    let final_params = if terminal == CadzowTerminal::Rank1HankelFixedPoint {
        let h = hankel_project(&final_matrix);
        extract_params(&h, (100.0 * tol).max(1e-8)).ok()
    } else {
        None
    };

    let diff = a.sub(&final_matrix);
    Ok(CadzowTrace {
        sigmas,
        iterate_deltas: deltas,
        terminal,
        final_params,
        iterations,
        error_frobenius: diff.norm_fro(),
        error_spectral: spectral_norm(&diff),
        final_matrix,
    })
}

/// Relative distance of a matrix from the Hankel subspace:
/// `‖P(A) − A‖_F / max(1, ‖A‖_F)`. Near zero certifies a fixed point of
/// the iteration.
pub fn fixed_point_residual(a_limit: &DenseMatrix) -> f64 {
    hankel_project(a_limit).sub(a_limit).norm_fro() / 1.0f64.max(a_limit.norm_fro())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::{build_rank1, ExtendedScalar};
    use num_complex::Complex64;

    fn example5() -> DenseMatrix {
        DenseMatrix::from_rows_real(&[
            &[1.0, 0.0, 0.5],
            &[0.0, 0.5, 0.0],
            &[0.5, 0.0, 1.0],
        ])
    }

    #[test]
    fn zero_limit_example_with_closed_form_sigmas() {
        let trace = cadzow_iterate(&example5(), 1e-12, 1e-12, 100_000).unwrap();
        assert_eq!(trace.terminal, CadzowTerminal::ZeroLimit);
        for (j, sig) in trace.sigmas.iter().take(10).enumerate() {
            let want = 1.5 * (5.0f64 / 6.0).powi(j as i32);
            assert!((sig - want).abs() < 1e-10, "sigma_{j} = {sig}, want {want}");
        }
        assert!((trace.error_frobenius - example5().norm_fro()).abs() < 1e-12);
    }

    #[test]
    fn fixed_point_on_example4() {
        let a = DenseMatrix::from_rows_real(&[
            &[3.0, 2.0, 1.0, 1.0],
            &[2.0, 1.0, 1.0, 2.0],
            &[1.0, 1.0, 2.0, 5.0],
            &[1.0, 2.0, 5.0, 2.0],
        ]);
        let trace = cadzow_iterate(&a, 1e-12, 1e-12, 100_000).unwrap();
        assert_eq!(trace.terminal, CadzowTerminal::Rank1HankelFixedPoint);
        assert!(
            (10..=30).contains(&trace.iterations),
            "iterations = {}",
            trace.iterations
        );
        let p = trace.final_params.unwrap();
        assert!((p.z.finite().unwrap().re - 1.252213).abs() < 1e-4);
        assert!((trace.error_frobenius - 4.574811).abs() < 1e-4);
        assert!((trace.error_spectral - 3.239722).abs() < 1e-4);
        assert!(fixed_point_residual(&trace.final_matrix) <= 10.0 * 1e-12 * a.norm_fro());
    }

    #[test]
    fn rank1_hankel_input_terminates_immediately() {
        let a = build_rank1(&Rank1HankelParams {
            c: Complex64::new(2.0, 0.0),
            z: ExtendedScalar::real(0.8),
            rows: 3,
            cols: 3,
        });
        let trace = cadzow_iterate(&a, 1e-12, 1e-12, 100).unwrap();
        assert_eq!(trace.terminal, CadzowTerminal::Rank1HankelFixedPoint);
        assert!(trace.iterations <= 1);
        assert!(trace.error_frobenius < 1e-12);
        let p = trace.final_params.unwrap();
        assert!((p.c.re - 2.0).abs() < 1e-8);
    }

    #[test]
    fn monotone_sigmas() {
        let a = DenseMatrix::from_rows_real(&[
            &[1.0, 3.0, -2.0],
            &[0.5, 1.0, 4.0],
            &[2.0, -1.0, 0.3],
        ]);
        let trace = cadzow_iterate(&a, 1e-12, 1e-12, 100_000).unwrap();
        for w in trace.sigmas.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "sigma increased: {} -> {}", w[0], w[1]);
        }
    }

    #[test]
    fn zero_matrix_rejected() {
        assert!(matches!(
            cadzow_iterate(&DenseMatrix::zeros(2, 2), 1e-12, 1e-12, 10),
            Err(Error::RankZero)
        ));
    }

    #[test]
    fn residual_examples() {
        let h = build_rank1(&Rank1HankelParams {
            c: Complex64::new(1.0, 0.0),
            z: ExtendedScalar::real(0.3),
            rows: 3,
            cols: 3,
        });
        assert!(fixed_point_residual(&h) < 1e-14);
        assert_eq!(fixed_point_residual(&DenseMatrix::zeros(2, 2)), 0.0);

        let u = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        let a = DenseMatrix::outer(&u, &u).scale(Complex64::new(0.5, 0.0));
        assert!(fixed_point_residual(&a) > 0.1);
    }
}
