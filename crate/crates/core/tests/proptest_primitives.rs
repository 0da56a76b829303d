//! Fuzzed invariants of the low-level primitives.

use num_complex::Complex64;
use proptest::prelude::*;

use hankel1::{
    build_rank1, hankel_project, is_hankel, normalizer, real_roots, structured_vector,
    DenseMatrix, ExtendedScalar, Rank1HankelParams,
};

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

proptest! {
    /// Structured vectors are unit vectors for every generator.
    #[test]
    fn structured_vector_is_unit(re in -50.0f64..50.0, im in -50.0f64..50.0, n in 1usize..12) {
        let z = ExtendedScalar::Finite(Complex64::new(re, im));
        let v = structured_vector(z, n);
        prop_assert!((vec_norm(&v.entries) - 1.0).abs() < 1e-12);
        let vi = structured_vector(ExtendedScalar::Infinity, n);
        prop_assert!((vec_norm(&vi.entries) - 1.0).abs() < 1e-12);
    }

    /// Reciprocal of the generator reverses the structured vector up to a
    /// unimodular phase.
    #[test]
    fn reciprocal_reverses(re in -20.0f64..20.0, im in -20.0f64..20.0, n in 2usize..10) {
        let z = Complex64::new(re, im);
        prop_assume!(z.norm() > 1e-3);
        let v = structured_vector(ExtendedScalar::Finite(z), n).entries;
        let w = structured_vector(ExtendedScalar::Finite(z).reciprocal(), n).entries;
        // |v_k| must match |w_{n-1-k}| exactly up to roundoff.
        for k in 0..n {
            prop_assert!((v[k].norm() - w[n - 1 - k].norm()).abs() < 1e-12);
        }
    }

    /// `p_N(z)·z_N(z)` has first entry 1, so the normalizer is consistent.
    #[test]
    fn normalizer_consistency(re in -5.0f64..5.0, im in -5.0f64..5.0, n in 1usize..10) {
        let z = ExtendedScalar::Finite(Complex64::new(re, im));
        let p = normalizer(z, n).unwrap();
        let v = structured_vector(z, n);
        prop_assert!((v.entries[0].norm() * p - 1.0).abs() < 1e-10);
    }

    /// Materialized rank-1 parameters always produce a Hankel matrix.
    #[test]
    fn build_rank1_is_hankel(
        re in -5.0f64..5.0,
        im in -5.0f64..5.0,
        cre in -3.0f64..3.0,
        m in 2usize..6,
        n in 2usize..6,
    ) {
        let params = Rank1HankelParams {
            c: Complex64::new(cre, 0.4),
            z: ExtendedScalar::Finite(Complex64::new(re, im)),
            rows: m,
            cols: n,
        };
        let h = build_rank1(&params);
        prop_assert!(is_hankel(&h, 1e-10));
        prop_assert!(hankel_project(&h).sub(&h).norm_fro() <= 1e-12 * h.norm_fro().max(1.0));
    }

    /// The Sturm-sequence root finder recovers constructed real roots.
    #[test]
    fn real_roots_recovers_linear_factors(roots in proptest::collection::vec(-5.0f64..5.0, 1..5)) {
        // Reject ill-conditioned clusters.
        let mut sorted = roots.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in sorted.windows(2) {
            prop_assume!(w[1] - w[0] > 1e-2);
        }
        // Expand ∏ (x − r_k).
        let mut coeffs = vec![1.0f64];
        for r in &roots {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k] += -r * c;
                next[k + 1] += c;
            }
            coeffs = next;
        }
        let found = real_roots(&coeffs, None).unwrap().roots;
        prop_assert_eq!(found.len(), roots.len());
        for r in &sorted {
            let hit = found.iter().map(|f| (f - r).abs()).fold(f64::INFINITY, f64::min);
            prop_assert!(hit < 1e-7, "missed root {} (closest {})", r, hit);
        }
    }

    /// Projection maps arbitrary matrices onto the Hankel subspace.
    #[test]
    fn projection_lands_in_subspace(entries in proptest::collection::vec(-3.0f64..3.0, 12)) {
        let a = DenseMatrix::from_real(3, 4, &entries);
        let p = hankel_project(&a);
        prop_assert!(is_hankel(&p, 1e-10));
        prop_assert!(p.norm_fro() <= a.norm_fro() + 1e-12);
    }
}
