//! Optimal rank-1 Hankel approximation of a real symmetric matrix in the
//! spectral norm.
//!
//! Writing the optimal error as `λ̃ = ‖A − c̃ z̃ z̃ᵀ‖₂`, both
//! `λ̃I − A + c̃ z̃z̃ᵀ` and `λ̃I + A − c̃ z̃z̃ᵀ` must be positive
//! semidefinite with at least one of them singular. Diagonalizing turns the
//! question into semidefiniteness of diagonal-plus-rank-1 matrices, which
//! is governed by the secular function
//!
//! ```text
//! f(z, λ²) = Σ' μ_j² / (λ_j² − λ²) = zᵀ(A² − λ²I)⁻¹z,   μ_j = v_jᵀ z,
//! ```
//!
//! where the primed sum omits exact 0/0 terms. Either the SVD error level
//! `|λ₁|` is achievable at a joint real zero of the eigenvector polynomials
//! (case 1), or the optimal level is the unique root of
//! `max_z f(z, λ²) = 0` in `(|λ₁|, λ₀)` and is located by bisection
//! (case 2). A degenerate dominant eigenvalue is handled separately.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hankel::{
    build_rank1, extract_params, structured_vector, ExtendedScalar, Rank1HankelParams,
};
use crate::matrix::DenseMatrix;
use crate::numerics::{eig_symmetric, maximize_1d, real_roots, spectral_norm, SymmetricEigen};

/// How a spectral solution was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralCase {
    /// The SVD bound `|λ₁|` is attained at a joint eigenvector zero.
    AchievedLambda1,
    /// The error level was located by bisection in `(|λ₁|, λ₀)`.
    Bisection,
    /// `|λ₀|` is degenerate with all dominant eigenvalues of one sign:
    /// every generator is optimal.
    DegenerateSameSign,
    /// `|λ₀|` is degenerate with dominant eigenvalues of both signs: no
    /// real rank-1 Hankel matrix attains the optimal error.
    DegenerateOppositeSign,
}

/// Tuning knobs for the spectral solver.
#[derive(Debug, Clone)]
pub struct SpectralOptions {
    /// Grid size of the inner 1-D maximizations on `[−1, 1]`.
    pub grid: usize,
    /// Early-termination threshold on `|W|` (the "W = 0" branch).
    pub eps_w: f64,
    /// Relative tolerance deciding eigenvalue modulus ties.
    pub tie_tol: f64,
    /// Structural tolerance (symmetry check, rank-1 short-circuit).
    pub tol: f64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            grid: 2048,
            eps_w: 1e-10,
            tie_tol: 1e-9,
            tol: 1e-10,
        }
    }
}

/// A solved spectral-norm approximation problem.
#[derive(Debug, Clone)]
pub struct SpectralSolution {
    /// Optimal error level `λ̃ = ‖A − H₁‖₂`.
    pub lambda_tilde: f64,
    /// Optimal parameters; absent only in the opposite-sign degenerate
    /// case, where no rank-1 Hankel matrix attains the error.
    pub params: Option<Rank1HankelParams>,
    /// Which branch produced the solution.
    pub case: SpectralCase,
    /// Admissible interval for `c` when it is not unique (case 1 and the
    /// same-sign degenerate case).
    pub c_interval: Option<(f64, f64)>,
    /// Number of outer bisection iterations performed.
    pub bisection_iterations: usize,
    /// `‖A − H₁‖₂` recomputed from the materialized approximant.
    pub error_spectral: Option<f64>,
    /// `‖A − H₁‖_F` recomputed from the materialized approximant.
    pub error_frobenius: Option<f64>,
}

/// Weights `μ_j = v_jᵀ z_N(z)` of a real generator against the
/// eigenvectors.
fn weights(eig: &SymmetricEigen, z: ExtendedScalar) -> Vec<f64> {
    let n = eig.dim();
    let zv = structured_vector(z, n);
    eig.eigenvectors
        .iter()
        .map(|v| v.iter().zip(&zv.entries).map(|(a, b)| a * b.re).sum())
        .collect()
}

/// Evaluates the secular function `f(z, λ²)` under the primed-sum
/// convention: terms whose denominator vanishes are omitted when their
/// weight also vanishes, and reported as a pole hit otherwise.
pub fn secular_eval(eig: &SymmetricEigen, z: ExtendedScalar, lambda_sq: f64) -> Result<f64> {
    let mu = weights(eig, z);
    let scale = eig.eigenvalues[0].powi(2).max(1e-300);
    let mut sum = 0.0;
    for (j, &m) in mu.iter().enumerate() {
        let denom = eig.eigenvalues[j].powi(2) - lambda_sq;
        if denom.abs() <= 1e-9 * scale {
            if m * m > 1e-9 {
                return Err(Error::PoleHit { weight: m * m });
            }
            continue; // primed-sum omission
        }
        sum += m * m / denom;
    }
    Ok(sum)
}

/// Sign of the rank-1 term in a diagonal-plus-rank-1 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankOneSign {
    /// `B = D + c bbᵀ`.
    Added,
    /// `B = D − c bbᵀ`.
    Subtracted,
}

/// A diagonal matrix plus or minus a positive rank-1 term.
#[derive(Debug, Clone)]
pub struct DiagPlusRank1 {
    /// Diagonal entries.
    pub d: Vec<f64>,
    /// Rank-1 vector.
    pub b: Vec<f64>,
    /// Rank-1 coefficient (positive in the supported criteria).
    pub c: f64,
    /// Whether the rank-1 term is added or subtracted.
    pub sign: RankOneSign,
}

impl DiagPlusRank1 {
    /// Materializes the dense matrix.
    pub fn materialize(&self) -> DenseMatrix {
        let n = self.d.len();
        let s = match self.sign {
            RankOneSign::Added => self.c,
            RankOneSign::Subtracted => -self.c,
        };
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut v = s * self.b[i] * self.b[j];
                if i == j {
                    v += self.d[i];
                }
                m.set(i, j, Complex64::new(v, 0.0));
            }
        }
        m
    }
}

/// Determinant of `D ± c bbᵀ` via the rank-1 update formula:
/// `det(D) ± c Σ_j b_j² Π_{k≠j} d_k`.
pub fn diag_rank1_det(m: &DiagPlusRank1) -> f64 {
    let n = m.d.len();
    let s = match m.sign {
        RankOneSign::Added => m.c,
        RankOneSign::Subtracted => -m.c,
    };
    let det_d: f64 = m.d.iter().product();
    let mut correction = 0.0;
    for j in 0..n {
        let prod: f64 = (0..n).filter(|&k| k != j).map(|k| m.d[k]).product();
        correction += m.b[j] * m.b[j] * prod;
    }
    det_d + s * correction
}

/// Semidefiniteness test for the two supported sign patterns:
///
/// * `D + c bbᵀ` with exactly one negative diagonal entry is psd iff
///   `Σ' b_j²/(−d_j) ≥ 1/c` and `b_j = 0` wherever `d_j = 0`;
/// * `D − c bbᵀ` with a non-negative diagonal (one entry positive) is psd
///   iff `Σ' b_j²/d_j ≤ 1/c` and `b_j = 0` wherever `d_j = 0`.
pub fn psd_check(m: &DiagPlusRank1) -> Result<bool> {
    if m.c <= 0.0 {
        return Err(Error::HypothesisMismatch);
    }
    let scale = m.d.iter().map(|x| x.abs()).fold(0.0, f64::max).max(1e-300);
    let zero = |x: f64| x.abs() <= 1e-12 * scale;
    let negatives = m.d.iter().filter(|&&x| x < 0.0 && !zero(x)).count();
    let positives = m.d.iter().filter(|&&x| x > 0.0 && !zero(x)).count();

    match m.sign {
        RankOneSign::Added => {
            if negatives != 1 {
                return Err(Error::HypothesisMismatch);
            }
            // b_j must vanish on zero diagonal entries.
            for j in 0..m.d.len() {
                if zero(m.d[j]) && m.b[j].abs() > 1e-12 {
                    return Ok(false);
                }
            }
            let sum: f64 = (0..m.d.len())
                .filter(|&j| !zero(m.d[j]))
                .map(|j| m.b[j] * m.b[j] / (-m.d[j]))
                .sum();
            Ok(sum >= 1.0 / m.c)
        }
        RankOneSign::Subtracted => {
            if negatives != 0 || positives == 0 {
                return Err(Error::HypothesisMismatch);
            }
            for j in 0..m.d.len() {
                if zero(m.d[j]) && m.b[j].abs() > 1e-12 {
                    return Ok(false);
                }
            }
            let sum: f64 = (0..m.d.len())
                .filter(|&j| !zero(m.d[j]))
                .map(|j| m.b[j] * m.b[j] / m.d[j])
                .sum();
            Ok(sum <= 1.0 / m.c)
        }
    }
}

/// Tests whether the SVD error level `|λ₁|` is attainable: finds the joint
/// real zeros Σ of the eigenvector polynomials `v_j(z)` over all `j` with
/// `|λ_j| = |λ₁|` (plus the ∞ candidate when all their leading coordinates
/// vanish) and returns the first `z ∈ Σ` with `f(z, λ₁²) ≥ 0`, together
/// with the admissible interval for `c`.
pub fn case1_test(
    eig: &SymmetricEigen,
    tol: f64,
) -> Option<(ExtendedScalar, (f64, f64))> {
    let n = eig.dim();
    let lam = &eig.eigenvalues;
    let lam1 = lam[1].abs();
    let tie = tol.max(1e-15) * lam[0].abs().max(1e-300);
    let group: Vec<usize> = (1..n).filter(|&j| (lam[j].abs() - lam1).abs() <= tie).collect();
    if group.is_empty() {
        return None;
    }

    // Real roots of the first polynomial, filtered by the others.
    let mut sigma: Vec<ExtendedScalar> = Vec::new();
    let first = &eig.eigenvectors[group[0]];
    if let Ok(set) = real_roots(first, None) {
        'root: for r in set.roots {
            let z = ExtendedScalar::real(r);
            let mu = weights(eig, z);
            for &j in &group {
                if mu[j].abs() > 1e-8 {
                    continue 'root;
                }
            }
            sigma.push(z);
        }
    }
    // ∞ is a joint zero when every grouped eigenvector ends in zero.
    if group.iter().all(|&j| eig.eigenvectors[j][n - 1].abs() <= 1e-10) {
        sigma.push(ExtendedScalar::Infinity);
    }

    for z in sigma {
        let f = match secular_eval(eig, z, lam1 * lam1) {
            Ok(v) => v,
            Err(_) => continue,
        };
        if f >= -1e-12 {
            let mu = weights(eig, z);
            let omit = |denom: f64| denom.abs() <= tie;
            let s_left: f64 = (0..n)
                .filter(|&j| !omit(lam[j] + lam1))
                .map(|j| mu[j] * mu[j] / (lam[j] + lam1))
                .sum();
            let s_right: f64 = (0..n)
                .filter(|&j| !omit(lam[j] - lam1))
                .map(|j| mu[j] * mu[j] / (lam[j] - lam1))
                .sum();
            return Some((z, (1.0 / s_right, 1.0 / s_left)));
        }
    }
    None
}

/// Handles a degenerate dominant eigenvalue `|λ₀| = |λ₁|` (Corollary-type
/// branch): with all dominant eigenvalues of one sign, every generator is
/// admissible and `z_choice` is returned with the full `c` interval; with
/// both signs present, a diagnostic without parameters is returned.
///
/// The eigendecomposition must have `λ₀ > 0` (callers negate first).
pub fn degenerate_top(eig: &SymmetricEigen, z_choice: ExtendedScalar) -> SpectralSolution {
    let n = eig.dim();
    let lam = &eig.eigenvalues;
    let lam0 = lam[0];
    let tie = 1e-9 * lam0.abs().max(1e-300);
    let mixed = (0..n).any(|j| (lam[j].abs() - lam0.abs()).abs() <= tie && lam[j] < 0.0);
    if mixed {
        return SpectralSolution {
            lambda_tilde: lam0.abs(),
            params: None,
            case: SpectralCase::DegenerateOppositeSign,
            c_interval: None,
            bisection_iterations: 0,
            error_spectral: None,
            error_frobenius: None,
        };
    }
    let mu = weights(eig, z_choice);
    let s: f64 = (0..n)
        .filter(|&j| (lam0 + lam[j]).abs() > tie)
        .map(|j| mu[j] * mu[j] / (lam0 + lam[j]))
        .sum();
    let c_max = 1.0 / s;
    SpectralSolution {
        lambda_tilde: lam0,
        params: Some(Rank1HankelParams {
            c: Complex64::new(c_max, 0.0),
            z: z_choice,
            rows: n,
            cols: n,
        }),
        case: SpectralCase::DegenerateSameSign,
        c_interval: Some((0.0, c_max)),
        bisection_iterations: 0,
        error_spectral: None,
        error_frobenius: None,
    }
}

/// Solves `min ‖A − c z_N z_Nᵀ‖₂` for a real symmetric matrix.
///
/// `eps` is the bisection tolerance on the error level. A dominant
/// negative eigenvalue is handled by solving for `−A` and negating `c̃`;
/// an exactly rank-1 Hankel input short-circuits to exact recovery.
pub fn solve_spectral(
    a: &DenseMatrix,
    eps: f64,
    opts: &SpectralOptions,
) -> Result<SpectralSolution> {
    a.check_real_symmetric(opts.tol.max(1e-12))?;

    // Rank-1 Hankel input: exact recovery, error level 0.
    if let Ok(params) = extract_params(a, opts.tol) {
        let h = build_rank1(&params);
        let diff = a.sub(&h);
        return Ok(SpectralSolution {
            lambda_tilde: 0.0,
            params: Some(params),
            case: SpectralCase::AchievedLambda1,
            c_interval: None,
            bisection_iterations: 0,
            error_spectral: Some(spectral_norm(&diff)),
            error_frobenius: Some(diff.norm_fro()),
        });
    }

    let eig = eig_symmetric(a, opts.tol.max(1e-12))?;
    if eig.eigenvalues[0] == 0.0 {
        return Err(Error::RankZero);
    }

    // Negative dominant eigenvalue: solve for −A and negate c.
    if eig.eigenvalues[0] < 0.0 {
        let neg = a.scale(Complex64::new(-1.0, 0.0));
        let mut sol = solve_spectral(&neg, eps, opts)?;
        if let Some(p) = sol.params.as_mut() {
            p.c = -p.c;
        }
        sol.c_interval = sol.c_interval.map(|(lo, hi)| (-hi, -lo));
        // Errors are norm-invariant under negation but recompute anyway.
        if let Some(p) = sol.params {
            let diff = a.sub(&build_rank1(&p));
            sol.error_spectral = Some(spectral_norm(&diff));
            sol.error_frobenius = Some(diff.norm_fro());
        }
        return Ok(sol);
    }

    let lam = eig.eigenvalues.clone();
    let lam0 = lam[0];
    let lam1 = lam[1].abs();
    let n = eig.dim();

    // Degenerate dominant eigenvalue.
    if (lam1 - lam0).abs() <= opts.tie_tol * lam0 {
        let mut sol = degenerate_top(&eig, ExtendedScalar::real(0.0));
        if let Some(p) = sol.params {
            let diff = a.sub(&build_rank1(&p));
            sol.error_spectral = Some(spectral_norm(&diff));
            sol.error_frobenius = Some(diff.norm_fro());
        }
        return Ok(sol);
    }

    // Case 1: the SVD bound |λ₁| is attainable.
    if let Some((z, (c_lo, c_hi))) = case1_test(&eig, opts.tie_tol) {
        let params = Rank1HankelParams {
            c: Complex64::new(c_lo, 0.0),
            z,
            rows: n,
            cols: n,
        };
        let diff = a.sub(&build_rank1(&params));
        return Ok(SpectralSolution {
            lambda_tilde: lam1,
            params: Some(params),
            case: SpectralCase::AchievedLambda1,
            c_interval: Some((c_lo, c_hi)),
            bisection_iterations: 0,
            error_spectral: Some(spectral_norm(&diff)),
            error_frobenius: Some(diff.norm_fro()),
        });
    }

    // Case 2: bisection on the error level x ∈ (|λ₁|, λ₀). The inner
    // maximization runs over [−1, 1] directly and over the flipped secular
    // function (reciprocal generators), whose open endpoints are clipped.
    let flipped_eig = SymmetricEigen {
        eigenvalues: eig.eigenvalues.clone(),
        eigenvectors: eig
            .eigenvectors
            .iter()
            .map(|v| v.iter().rev().cloned().collect())
            .collect(),
    };
    let inner_max = |x: f64| -> (f64, ExtendedScalar) {
        let x2 = x * x;
        let direct = |z: f64| secular_eval(&eig, ExtendedScalar::real(z), x2).unwrap_or(f64::MIN);
        let flip = |z: f64| {
            secular_eval(&flipped_eig, ExtendedScalar::real(z), x2).unwrap_or(f64::MIN)
        };
        let clip = 1.0 - 1e-12;
        let (z_d, w_d) = maximize_1d(direct, -1.0, 1.0, opts.grid, 1e-13);
        let (z_f, w_f) = maximize_1d(flip, -clip, clip, opts.grid, 1e-13);
        if w_d >= w_f {
            (w_d, ExtendedScalar::real(z_d))
        } else {
            // Flipped branch: the generator is the reciprocal; z = 0 maps
            // to ∞.
            (w_f, ExtendedScalar::real(z_f).reciprocal())
        }
    };

    let (mut a_lvl, mut b_lvl) = (lam1, lam0);
    let mut iterations = 0usize;
    let mut x;
    let mut z_best;
    loop {
        x = 0.5 * (a_lvl + b_lvl);
        let (w, z) = inner_max(x);
        z_best = z;
        iterations += 1;
        if w.abs() <= opts.eps_w {
            break;
        }
        if w > 0.0 {
            b_lvl = x;
        } else {
            a_lvl = x;
        }
        if b_lvl - a_lvl <= eps || iterations >= 200 {
            x = 0.5 * (a_lvl + b_lvl);
            let (_, z) = inner_max(x);
            z_best = z;
            break;
        }
    }

    let lambda_tilde = x;
    let mu = weights(&eig, z_best);
    let s: f64 = (0..n).map(|j| mu[j] * mu[j] / (lam[j] - lambda_tilde)).sum();
    let c = 1.0 / s;
    let params = Rank1HankelParams {
        c: Complex64::new(c, 0.0),
        z: z_best,
        rows: n,
        cols: n,
    };
    let diff = a.sub(&build_rank1(&params));
    Ok(SpectralSolution {
        lambda_tilde,
        params: Some(params),
        case: SpectralCase::Bisection,
        c_interval: None,
        bisection_iterations: iterations,
        error_spectral: Some(spectral_norm(&diff)),
        error_frobenius: Some(diff.norm_fro()),
    })
}
