//! Randomized invariant checks for the solvers and primitives, shared by
//! the property-suite and acceptance test binaries. All suites run on
//! seeded generators, so failures are reproducible.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hankel1::{
    build_rank1, cadzow_iterate, diag_rank1_det, eig_symmetric, flip_both, hankel_project,
    is_hankel, objective, psd_check, solve_complex, solve_real, solve_spectral, spectral_norm,
    CadzowTerminal, DenseMatrix, DiagPlusRank1, ExtendedScalar, FrobeniusOptions, RankOneSign,
    SpectralCase, SpectralOptions,
};

fn random_real(rng: &mut ChaCha8Rng, m: usize, n: usize) -> DenseMatrix {
    let entries: Vec<f64> = (0..m * n).map(|_| rng.gen_range(-2.0..2.0)).collect();
    DenseMatrix::from_real(m, n, &entries)
}

fn random_complex(rng: &mut ChaCha8Rng, m: usize, n: usize) -> DenseMatrix {
    let entries: Vec<Complex64> = (0..m * n)
        .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
        .collect();
    DenseMatrix::from_entries(m, n, entries)
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-2.0..2.0);
            a.set(i, j, Complex64::new(x, 0.0));
            a.set(j, i, Complex64::new(x, 0.0));
        }
    }
    a
}

fn frobenius_inner(x: &DenseMatrix, y: &DenseMatrix) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            acc += x.get(i, j).conj() * y.get(i, j);
        }
    }
    acc
}

/// (a) `‖A − H₁‖_F² = ‖A‖_F² − |G(z̃)|²` for both search modes.
pub fn frobenius_error_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for trial in 0..100 {
        let (m, n) = match trial % 4 {
            0 => (3, 3),
            1 => (3, 4),
            2 => (4, 3),
            _ => (5, 2),
        };
        let (a, sol) = if trial % 2 == 0 {
            let a = random_real(&mut rng, m, n);
            let sol = solve_real(&a, &FrobeniusOptions::default()).unwrap();
            (a, sol)
        } else {
            let a = random_complex(&mut rng, m, n);
            let sol = solve_complex(&a, &FrobeniusOptions::default()).unwrap();
            (a, sol)
        };
        let fro2 = a.norm_fro().powi(2);
        let identity = (fro2 - sol.objective.powi(2)).max(0.0).sqrt();
        assert!(
            (sol.error_frobenius - identity).abs() <= 1e-9 * a.norm_fro().max(1.0),
            "trial {trial}: error {} vs identity {}",
            sol.error_frobenius,
            identity
        );
    }
}

/// (b) The solver's objective dominates a dense brute-force grid.
pub fn frobenius_oracle_dominance() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for trial in 0..50 {
        let (m, n) = if trial % 2 == 0 { (3, 3) } else { (3, 4) };
        let a = random_real(&mut rng, m, n);

        // Real search vs a dense grid over the whole extended real line,
        // sampled through the reciprocal split z ∈ [−1, 1] and 1/z ∈ [−1, 1].
        let sol = solve_real(&a, &FrobeniusOptions::default()).unwrap();
        let mut brute = objective(&a, ExtendedScalar::Infinity).norm();
        for k in 0..=4000 {
            let t = -1.0 + 2.0 * k as f64 / 4000.0;
            brute = brute.max(objective(&a, ExtendedScalar::real(t)).norm());
            if t != 0.0 {
                brute = brute.max(objective(&a, ExtendedScalar::real(1.0 / t)).norm());
            }
        }
        assert!(
            sol.objective >= brute - 1e-6,
            "trial {trial} (real): solver {} < brute {}",
            sol.objective,
            brute
        );

        // Complex search vs a polar grid over both reciprocal branches.
        let solc = solve_complex(&a, &FrobeniusOptions::default()).unwrap();
        let mut brute_c = objective(&a, ExtendedScalar::Infinity).norm();
        for ri in 1..=40 {
            let r = ri as f64 / 40.0;
            for ki in 0..160 {
                let th = 2.0 * std::f64::consts::PI * ki as f64 / 160.0;
                let z = Complex64::from_polar(r, th);
                brute_c = brute_c.max(objective(&a, ExtendedScalar::Finite(z)).norm());
                let zr = Complex64::new(1.0, 0.0) / z;
                brute_c = brute_c.max(objective(&a, ExtendedScalar::Finite(zr)).norm());
            }
        }
        assert!(
            solc.objective >= brute_c - 1e-6,
            "trial {trial} (complex): solver {} < brute {}",
            solc.objective,
            brute_c
        );
    }
}

/// (c) Spectral solution invariants on random symmetric matrices.
pub fn spectral_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let opts = SpectralOptions::default();
    let mut done = 0;
    while done < 30 {
        let n = 3 + done % 3;
        let a = random_symmetric(&mut rng, n);
        let eig = eig_symmetric(&a, 1e-12).unwrap();
        let lam0 = eig.eigenvalues[0].abs();
        let lam1 = eig.eigenvalues[1].abs();
        if lam0 < 1e-6 {
            continue;
        }
        let sol = solve_spectral(&a, 1e-10, &opts).unwrap();

        // The optimal error level sits in [|λ₁|, λ₀].
        assert!(
            sol.lambda_tilde >= lam1 - 1e-7 * lam0 && sol.lambda_tilde <= lam0 + 1e-7 * lam0,
            "level {} outside [{lam1}, {lam0}]",
            sol.lambda_tilde
        );

        if let Some(p) = sol.params {
            let h = build_rank1(&p);
            let diff = a.sub(&h);
            let deig = eig_symmetric(&diff, 1e-12).unwrap();

            // Shifted error matrices λ̃I ∓ (A − H₁) are both psd.
            for s in [1.0, -1.0] {
                let min_eig = deig
                    .eigenvalues
                    .iter()
                    .map(|&e| sol.lambda_tilde - s * e)
                    .fold(f64::INFINITY, f64::min);
                assert!(
                    min_eig >= -1e-7 * lam0,
                    "shifted error matrix not psd: {min_eig}"
                );
            }

            // In the bisection case the error matrix attains ±λ̃.
            if sol.case == SpectralCase::Bisection {
                for target in [sol.lambda_tilde, -sol.lambda_tilde] {
                    let hit = deig
                        .eigenvalues
                        .iter()
                        .map(|&e| (e - target).abs())
                        .fold(f64::INFINITY, f64::min);
                    assert!(hit <= 1e-6 * lam0.max(1.0), "missing eigenvalue {target}: {hit}");
                }
            }
        }

        // A finer inner grid must not find a meaningfully better level.
        let fine = SpectralOptions {
            grid: 2 * opts.grid,
            ..opts.clone()
        };
        let sol_fine = solve_spectral(&a, 1e-10, &fine).unwrap();
        assert!(
            (sol.lambda_tilde - sol_fine.lambda_tilde).abs() <= 1e-4 * lam0.max(1.0),
            "grid refinement moved the level: {} vs {}",
            sol.lambda_tilde,
            sol_fine.lambda_tilde
        );
        done += 1;
    }
}

/// (d) Determinant identity and psd characterizations for `D ± c bbᵀ`.
pub fn diag_rank1_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for trial in 0..200 {
        let n = 2 + trial % 4;
        let c = rng.gen_range(0.05..3.0);
        let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.5..1.5)).collect();
        let (d, sign): (Vec<f64>, RankOneSign) = if trial % 2 == 0 {
            // Exactly one negative diagonal entry, rank-1 term added.
            let mut d: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0)).collect();
            let k = rng.gen_range(0..n);
            d[k] = -rng.gen_range(0.05..2.0);
            (d, RankOneSign::Added)
        } else {
            // Nonnegative diagonal, rank-1 term subtracted.
            let d: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0)).collect();
            (d, RankOneSign::Subtracted)
        };
        let m = DiagPlusRank1 { d, b, c, sign };
        let dense = m.materialize();
        let eig = eig_symmetric(&dense, 1e-13).unwrap();

        let det_closed = diag_rank1_det(&m);
        let det_eig: f64 = eig.eigenvalues.iter().product();
        let scale: f64 = (dense.norm_fro().max(1.0)).powi(m.d.len() as i32);
        assert!(
            (det_closed - det_eig).abs() <= 1e-10 * scale,
            "trial {trial}: det {det_closed} vs {det_eig}"
        );

        if m.d.iter().any(|&x| x > 0.0) {
            let closed = psd_check(&m).unwrap();
            let min_eig = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
            // Skip numerically singular borderline cases.
            if min_eig.abs() > 1e-9 * dense.norm_fro().max(1.0) {
                assert_eq!(
                    closed,
                    min_eig >= 0.0,
                    "trial {trial}: psd mismatch, min eigenvalue {min_eig}"
                );
            }
        }
    }
}

/// (e) The anti-diagonal averaging map is an orthogonal projection.
pub fn projection_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for trial in 0..100 {
        let (m, n) = match trial % 3 {
            0 => (3, 3),
            1 => (4, 3),
            _ => (2, 5),
        };
        let a = random_complex(&mut rng, m, n);
        let b = random_complex(&mut rng, m, n);
        let pa = hankel_project(&a);

        // Idempotence.
        assert!(hankel_project(&pa).sub(&pa).norm_fro() <= 1e-13 * a.norm_fro());
        // Self-adjointness.
        let lhs = frobenius_inner(&pa, &b);
        let rhs = frobenius_inner(&a, &hankel_project(&b));
        assert!((lhs - rhs).norm() <= 1e-12 * a.norm_fro() * b.norm_fro());
        // Contraction, with equality exactly on Hankel input.
        assert!(pa.norm_fro() <= a.norm_fro() + 1e-13);
        let equal = (pa.norm_fro() - a.norm_fro()).abs() <= 1e-12 * a.norm_fro().max(1.0);
        assert_eq!(equal, is_hankel(&a, 1e-10), "trial {trial}");
        assert!(is_hankel(&pa, 1e-10));
    }
}

/// (f) Cadzow singular values decrease, and fixed points certify.
pub fn cadzow_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let tol = 1e-11;
    for trial in 0..20 {
        let n = 3 + trial % 3;
        let a = random_real(&mut rng, n, n);
        let trace = cadzow_iterate(&a, tol, tol, 200_000).unwrap();
        for w in trace.sigmas.windows(2) {
            assert!(
                w[1] <= w[0] * (1.0 + 1e-12) + 1e-14,
                "trial {trial}: sigma increased {} -> {}",
                w[0],
                w[1]
            );
        }
        if trace.terminal == CadzowTerminal::Rank1HankelFixedPoint {
            let res = hankel1::fixed_point_residual(&trace.final_matrix);
            assert!(res <= 10.0 * tol, "trial {trial}: residual {res}");
        }
    }
}

/// (g) Reciprocal symmetry of the objective and the Rayleigh bound.
pub fn reciprocal_symmetry_and_rayleigh_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    for trial in 0..50 {
        let (m, n) = if trial % 2 == 0 { (3, 4) } else { (4, 4) };
        let a = random_complex(&mut rng, m, n);
        let flipped = flip_both(&a);
        let sigma0 = spectral_norm(&a);
        for _ in 0..20 {
            let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            if z.norm() < 1e-3 {
                continue;
            }
            let g_flip = objective(&flipped, ExtendedScalar::Finite(z)).norm();
            let g_recip =
                objective(&a, ExtendedScalar::Finite(Complex64::new(1.0, 0.0) / z)).norm();
            assert!(
                (g_flip - g_recip).abs() <= 1e-12 * a.norm_fro().max(1.0),
                "trial {trial}: |G₁(z)| {} vs |G(1/z)| {}",
                g_flip,
                g_recip
            );
            // |G(z)| is a bilinear form of unit vectors: bounded by σ₀.
            assert!(g_recip <= sigma0 + 1e-12 * sigma0.max(1.0));
        }
        // The endpoints obey the same bound.
        for z in [ExtendedScalar::real(0.0), ExtendedScalar::Infinity] {
            assert!(objective(&a, z).norm() <= sigma0 + 1e-12 * sigma0.max(1.0));
        }
    }
}
