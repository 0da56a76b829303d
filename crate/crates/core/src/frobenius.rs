//! Optimal rank-1 Hankel approximation in the Frobenius norm.
//!
//! Minimizing `‖A − c·z_M z_Nᵀ‖_F` over `(c, z)` is equivalent to
//! maximizing the modulus of the rational objective
//!
//! ```text
//! G(z) = z_M(z)* A z̄_N(z) = a(z̄) / (p_M(|z|) p_N(|z|)),
//! ```
//!
//! where `a` is the polynomial of anti-diagonal sums of `A` and `p_K` the
//! norm of the raw geometric vector. At the maximizer, `c̃ = G(z̃)` and the
//! squared error is `‖A‖_F² − |G(z̃)|²`.
//!
//! For real matrices and real generators, the finite critical points are
//! the real roots of the polynomial `R(z) = 2a'(z)q(z) − a(z)q'(z)` with
//! `q = p_M² p_N²`; the boundary candidates `z = 0` and `z = ∞` always
//! compete. For complex generators, the search is reduced to the closed
//! unit disc via the reciprocal identity `|G(1/z)| = |G₁(z)|`, where `G₁`
//! is the objective of the doubly flipped matrix `J_M A J_N`, and carried
//! out by a polar grid scan plus derivative-free local ascent.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hankel::{
    antidiagonal_sums, build_rank1, flip_both, structured_vector, ExtendedScalar,
    Rank1HankelParams,
};
use crate::matrix::DenseMatrix;
use crate::numerics::{
    poly_deriv, poly_mul, poly_scale, poly_sub, real_roots, spectral_norm, svd,
};

/// Which search produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Real generators only (real input matrix).
    RealSearch,
    /// Complex generators over the extended plane.
    ComplexSearch,
}

/// Tuning knobs for the Frobenius solvers.
#[derive(Debug, Clone)]
pub struct FrobeniusOptions {
    /// Radial grid size for the complex unit-disc scan.
    pub grid_radii: usize,
    /// Angular grid size for the complex unit-disc scan.
    pub grid_angles: usize,
    /// Step tolerance of the local ascent refinement.
    pub tol: f64,
    /// Relative tolerance under which competing maximizers count as tied.
    pub tie_tol: f64,
}

impl Default for FrobeniusOptions {
    fn default() -> Self {
        FrobeniusOptions {
            grid_radii: 64,
            grid_angles: 256,
            tol: 1e-12,
            tie_tol: 1e-9,
        }
    }
}

/// A solved Frobenius-norm approximation problem.
#[derive(Debug, Clone)]
pub struct FrobeniusSolution {
    /// Primary optimal parameters; `c = G(z̃)`.
    pub params: Rank1HankelParams,
    /// Objective value `|G(z̃)|`.
    pub objective: f64,
    /// `‖A − H₁‖_F`, recomputed from the materialized approximant.
    pub error_frobenius: f64,
    /// `‖A − H₁‖₂`, reported for comparison.
    pub error_spectral: f64,
    /// Which search produced the solution.
    pub mode: SearchMode,
    /// True when the unstructured optimal rank-1 approximation already has
    /// Hankel structure, so the SVD bound is attained.
    pub svd_coincident: bool,
    /// All maximizers within the tie tolerance of the best objective;
    /// contains at least the primary parameters.
    pub candidates: Vec<Rank1HankelParams>,
}

/// Evaluates the objective `G(z) = z_M* A z̄_N`; `G(∞) = a_{M−1,N−1}` and
/// `G(0) = a_{0,0}`.
pub fn objective(a: &DenseMatrix, z: ExtendedScalar) -> Complex64 {
    let (m, n) = (a.rows(), a.cols());
    let zm = structured_vector(z, m);
    let zn = structured_vector(z, n);
    let vn: Vec<Complex64> = zn.entries.iter().map(|x| x.conj()).collect();
    let av = a.matvec(&vn);
    zm.entries
        .iter()
        .zip(&av)
        .map(|(x, y)| x.conj() * y)
        .sum()
}

/// Polynomial `q_K(x) = Σ_{k<K} x^{2k} = p_K(x)²` in ascending coefficients.
fn q_poly(k: usize) -> Vec<f64> {
    let mut q = vec![0.0; 2 * k - 1];
    for j in 0..k {
        q[2 * j] = 1.0;
    }
    q
}

/// Real anti-diagonal sum coefficients of a real matrix.
fn real_sums(a: &DenseMatrix) -> Vec<f64> {
    antidiagonal_sums(a).values.iter().map(|h| h.re).collect()
}

fn finish_solution(
    a: &DenseMatrix,
    primary: Rank1HankelParams,
    candidates: Vec<Rank1HankelParams>,
    mode: SearchMode,
    tol: f64,
) -> FrobeniusSolution {
    let h1 = build_rank1(&primary);
    let diff = a.sub(&h1);
    let sol = FrobeniusSolution {
        objective: primary.c.norm(),
        error_frobenius: diff.norm_fro(),
        error_spectral: spectral_norm(&diff),
        params: primary,
        mode,
        svd_coincident: false,
        candidates,
    };
    let coincident = svd_coincidence_certificate(a, &sol, tol.max(1e-8));
    FrobeniusSolution {
        svd_coincident: coincident,
        ..sol
    }
}

/// Given scored candidates, keeps all within the tie tolerance of the best
/// and designates the one of smallest |z| (then smallest argument) primary.
fn select_candidates(
    a: &DenseMatrix,
    mut scored: Vec<(ExtendedScalar, f64)>,
    tie_tol: f64,
) -> (Rank1HankelParams, Vec<Rank1HankelParams>) {
    let best = scored
        .iter()
        .map(|&(_, v)| v)
        .fold(f64::NEG_INFINITY, f64::max);
    scored.retain(|&(_, v)| v >= best - tie_tol * best.max(1e-300));

    // Deduplicate near-identical generators.
    let key = |z: &ExtendedScalar| -> (f64, f64) {
        match z.finite() {
            Some(w) => (w.norm(), w.arg()),
            None => (f64::INFINITY, 0.0),
        }
    };
    scored.sort_by(|x, y| {
        let (ma, aa) = key(&x.0);
        let (mb, ab) = key(&y.0);
        ma.partial_cmp(&mb).unwrap().then(aa.partial_cmp(&ab).unwrap())
    });
    let mut kept: Vec<ExtendedScalar> = Vec::new();
    for (z, _) in scored {
        let dup = kept.iter().any(|w| match (w.finite(), z.finite()) {
            (Some(a_), Some(b_)) => (a_ - b_).norm() <= 1e-7 * (1.0 + b_.norm()),
            (None, None) => true,
            _ => false,
        });
        if !dup {
            kept.push(z);
        }
    }

    let (m, n) = (a.rows(), a.cols());
    let params: Vec<Rank1HankelParams> = kept
        .into_iter()
        .map(|z| Rank1HankelParams {
            c: objective(a, z),
            z,
            rows: m,
            cols: n,
        })
        .collect();
    (params[0], params)
}

/// Solves the real-parameter problem: minimizes `‖A − c z_M z_Nᵀ‖_F` over
/// real `c` and real extended `z` for a real input matrix.
///
/// When `|a₀₀| < |a_{M−1,N−1}|`, the doubly flipped matrix `J_M A J_N` is
/// solved internally and the solution mapped back through `z ↦ 1/z`.
pub fn solve_real(a: &DenseMatrix, opts: &FrobeniusOptions) -> Result<FrobeniusSolution> {
    let (m, n) = (a.rows(), a.cols());
    if m < 2 || n < 2 {
        return Err(Error::TooSmall {
            rows: m,
            cols: n,
            min: 2,
        });
    }
    if a.norm_fro() == 0.0 {
        return Err(Error::RankZero);
    }

    // Flip so that the corner favored by the critical-point analysis is the
    // large one; finite/infinite candidates are mapped back afterwards.
    let flipped = a.get(0, 0).norm() < a.get(m - 1, n - 1).norm();
    let work = if flipped { flip_both(a) } else { a.clone() };

    let h = real_sums(&work);
    let q = poly_mul(&q_poly(m), &q_poly(n));
    // R = 2 a' q − a q'.
    let r = poly_sub(
        &poly_scale(&poly_mul(&poly_deriv(&h), &q), 2.0),
        &poly_mul(&h, &poly_deriv(&q)),
    );

    // Sign-pattern restriction: with non-negative coefficients the optimum
    // lies on the non-negative axis (and symmetrically for alternating
    // signs), so the root search can be confined there.
    let scale_h = h.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let all_nonneg = h.iter().all(|&x| x >= -1e-12 * scale_h);
    let alternating = h
        .iter()
        .enumerate()
        .all(|(l, &x)| (if l % 2 == 0 { x } else { -x }) >= -1e-12 * scale_h);
    let interval = if all_nonneg {
        Some((0.0, f64::INFINITY))
    } else if alternating {
        Some((f64::NEG_INFINITY, 0.0))
    } else {
        None
    };

    let mut zs: Vec<ExtendedScalar> = vec![ExtendedScalar::real(0.0), ExtendedScalar::Infinity];
    match real_roots(&r, interval) {
        Ok(set) => zs.extend(set.roots.into_iter().map(ExtendedScalar::real)),
        Err(Error::DegenerateZeroPolynomial) => {}
        Err(e) => return Err(e),
    }

    let scored: Vec<(ExtendedScalar, f64)> = zs
        .into_iter()
        .map(|z| {
            let z_orig = if flipped { z.reciprocal() } else { z };
            (z_orig, objective(a, z_orig).norm())
        })
        .collect();

    let (primary, candidates) = select_candidates(a, scored, opts.tie_tol);
    Ok(finish_solution(a, primary, candidates, SearchMode::RealSearch, opts.tol))
}

/// Derivative-free compass ascent of `f` on the closed unit disc, starting
/// from `z0` with the given initial step.
fn ascend_disc<F: Fn(Complex64) -> f64>(f: &F, z0: Complex64, step0: f64, tol: f64) -> Complex64 {
    let clamp = |z: Complex64| -> Complex64 {
        let r = z.norm();
        if r > 1.0 {
            z / r
        } else {
            z
        }
    };
    let mut z = clamp(z0);
    let mut best = f(z);
    let mut step = step0;
    while step > tol {
        let mut improved = false;
        for (dx, dy) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let cand = clamp(z + Complex64::new(dx * step, dy * step));
            let v = f(cand);
            if v > best + 1e-300 {
                best = v;
                z = cand;
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    z
}

/// Solves the complex-parameter problem: minimizes `‖A − c z_M z_Nᵀ‖_F`
/// over complex `c` and extended complex `z`.
pub fn solve_complex(a: &DenseMatrix, opts: &FrobeniusOptions) -> Result<FrobeniusSolution> {
    let (m, n) = (a.rows(), a.cols());
    if m < 2 || n < 2 {
        return Err(Error::TooSmall {
            rows: m,
            cols: n,
            min: 2,
        });
    }
    if a.norm_fro() == 0.0 {
        return Err(Error::RankZero);
    }

    let b = flip_both(a); // |G₁(z)| = |G(1/z)| reduces |z| > 1 to the disc.
    let branches: [(&DenseMatrix, bool); 2] = [(a, false), (&b, true)];

    let mut scored: Vec<(ExtendedScalar, f64)> = Vec::new();
    for (mat, reciprocal) in branches {
        let f = |z: Complex64| objective(mat, ExtendedScalar::Finite(z)).norm();

        // Polar grid over the closed unit disc (plus the center once).
        let mut best_z = Complex64::new(0.0, 0.0);
        let mut best_v = f(best_z);
        for ir in 1..=opts.grid_radii {
            let r = ir as f64 / opts.grid_radii as f64;
            for ia in 0..opts.grid_angles {
                let th = 2.0 * std::f64::consts::PI * ia as f64 / opts.grid_angles as f64;
                let z = Complex64::from_polar(r, th);
                let v = f(z);
                if v > best_v {
                    best_v = v;
                    best_z = z;
                }
            }
        }
        let step0 = 1.0 / opts.grid_radii as f64;
        let z = ascend_disc(&f, best_z, step0, opts.tol);
        let z_orig = if reciprocal {
            ExtendedScalar::Finite(z).reciprocal()
        } else {
            ExtendedScalar::Finite(z)
        };
        scored.push((z_orig, objective(a, z_orig).norm()));

        // The grid best may be a second (tied) maximizer elsewhere on the
        // disc; refine every grid point within the tie band of the branch
        // best so symmetric optima all surface.
        let band = best_v.max(1e-300) * (1.0 - 1e-4);
        let mut extras: Vec<Complex64> = Vec::new();
        for ir in 0..=opts.grid_radii {
            let r = ir as f64 / opts.grid_radii as f64;
            let angles = if ir == 0 { 1 } else { opts.grid_angles };
            for ia in 0..angles {
                let th = 2.0 * std::f64::consts::PI * ia as f64 / opts.grid_angles.max(1) as f64;
                let zg = Complex64::from_polar(r, th);
                if f(zg) >= band {
                    extras.push(zg);
                }
            }
        }
        // Keep a few well-separated seeds to bound the refinement work.
        let mut seeds: Vec<Complex64> = Vec::new();
        for zg in extras {
            if seeds.iter().all(|s| (s - zg).norm() > 2.5 * step0) {
                seeds.push(zg);
            }
        }
        for seed in seeds.into_iter().take(8) {
            let zr = ascend_disc(&f, seed, step0, opts.tol);
            let z_orig = if reciprocal {
                ExtendedScalar::Finite(zr).reciprocal()
            } else {
                ExtendedScalar::Finite(zr)
            };
            scored.push((z_orig, objective(a, z_orig).norm()));
        }
    }
    // The point at infinity competes as the image of the flipped center.
    scored.push((ExtendedScalar::Infinity, objective(a, ExtendedScalar::Infinity).norm()));

    let (primary, candidates) = select_candidates(a, scored, opts.tie_tol.max(1e-7));
    Ok(finish_solution(a, primary, candidates, SearchMode::ComplexSearch, opts.tol))
}

/// Certifies whether the unstructured optimal rank-1 approximation (the top
/// SVD pair) coincides with the structured optimum.
///
/// Two equivalent checks are performed: the top singular pair must match
/// `(z̃_M, z̄̃_N)` up to a unimodular phase, and the structured error must
/// attain the SVD bound `‖A‖_F² − σ₀²`. Both must agree for a `true`.
pub fn svd_coincidence_certificate(a: &DenseMatrix, sol: &FrobeniusSolution, tol: f64) -> bool {
    let s = match svd(a) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let zm = structured_vector(sol.params.z, a.rows());
    let zn = structured_vector(sol.params.z, a.cols());

    let dot_u: Complex64 = s.u[0]
        .iter()
        .zip(&zm.entries)
        .map(|(x, y)| x.conj() * y)
        .sum();
    let dot_v: Complex64 = s.v[0]
        .iter()
        .zip(zn.entries.iter().map(|x| x.conj()))
        .map(|(x, y)| x.conj() * y)
        .sum();
    let vectors_match = (dot_u.norm() - 1.0).abs() <= tol && (dot_v.norm() - 1.0).abs() <= tol;

    let fro2 = a.norm_fro().powi(2);
    let bound = (fro2 - s.sigma[0] * s.sigma[0]).max(0.0);
    let error_match = (sol.error_frobenius.powi(2) - bound).abs() <= tol * fro2.max(1.0);

    vectors_match && error_match
}
