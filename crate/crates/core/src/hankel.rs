//! Rank-1 Hankel parametrization, the anti-diagonal averaging projection,
//! the Toeplitz flip, and parameter extraction from numeric rank-1 Hankel
//! matrices.
//!
//! Every rank-1 Hankel matrix is of the form `c·z_M z_Nᵀ` for a finite
//! generator `z`, or `c·e_M e_Nᵀ` in the limit `z → ∞`, where `z_N(z)` is
//! the unit-normalized geometric vector `(1, z, …, z^{N−1})ᵀ` and `e_N` the
//! last standard basis vector. The pair `(c, z)` is the canonical
//! description used throughout the crate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::numerics::svd;

/// A finite complex generator or the distinguished point ∞ of the extended
/// complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedScalar {
    /// A finite complex value.
    Finite(Complex64),
    /// The point at infinity; the structured vector degenerates to `e_N`.
    Infinity,
}

impl ExtendedScalar {
    /// Shorthand for a finite real generator.
    pub fn real(x: f64) -> Self {
        ExtendedScalar::Finite(Complex64::new(x, 0.0))
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            ExtendedScalar::Finite(z) => Some(*z),
            ExtendedScalar::Infinity => None,
        }
    }

    /// True for the point at infinity.
    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedScalar::Infinity)
    }

    /// The reciprocal: 1/z, with 0 ↦ ∞ and ∞ ↦ 0.
    pub fn reciprocal(&self) -> Self {
        match self {
            ExtendedScalar::Infinity => ExtendedScalar::Finite(Complex64::new(0.0, 0.0)),
            ExtendedScalar::Finite(z) if z.norm() == 0.0 => ExtendedScalar::Infinity,
            ExtendedScalar::Finite(z) => ExtendedScalar::Finite(z.inv()),
        }
    }
}

impl std::fmt::Display for ExtendedScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtendedScalar::Infinity => write!(f, "inf"),
            ExtendedScalar::Finite(z) => {
                if z.im == 0.0 {
                    write!(f, "{:.6}", z.re)
                } else {
                    write!(f, "{:.6}{:+.6}i", z.re, z.im)
                }
            }
        }
    }
}

/// A unit-norm structured vector `z_N(z)` (or `e_N` for `z = ∞`).
#[derive(Debug, Clone)]
pub struct StructuredVector {
    /// Dimension N.
    pub n: usize,
    /// Generator.
    pub generator: ExtendedScalar,
    /// Materialized entries, unit 2-norm.
    pub entries: Vec<Complex64>,
}

/// Canonical parameters `(c, z)` of a rank-1 Hankel matrix of size M×N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rank1HankelParams {
    /// Scale factor; nonzero for a genuine rank-1 matrix.
    pub c: Complex64,
    /// Generator of both structured factors.
    pub z: ExtendedScalar,
    /// Row count M.
    pub rows: usize,
    /// Column count N.
    pub cols: usize,
}

/// Anti-diagonal sums `h_ℓ = Σ_{j+k=ℓ} a_{j,k}` with the number of entries
/// contributing to each sum.
#[derive(Debug, Clone)]
pub struct AntiDiagonalSums {
    /// Sums h₀,…,h_{M+N−2}.
    pub values: Vec<Complex64>,
    /// Entries per anti-diagonal: min(ℓ+1, M, N, M+N−1−ℓ).
    pub counts: Vec<usize>,
}

/// Builds the unit-norm structured vector for generator `z` and dimension
/// `n`.
///
/// For `|z| > 1` the entries are computed from the reversed representation
/// (powers of `1/z` scaled by the phase of `z^{n−1}`), so no intermediate
/// quantity overflows even for very large `|z|`.
pub fn structured_vector(z: ExtendedScalar, n: usize) -> StructuredVector {
    assert!(n >= 1, "dimension must be at least 1");
    let entries = match z {
        ExtendedScalar::Infinity => {
            let mut v = vec![Complex64::new(0.0, 0.0); n];
            v[n - 1] = Complex64::new(1.0, 0.0);
            v
        }
        ExtendedScalar::Finite(z) if z.norm() <= 1.0 => {
            let mut powers = Vec::with_capacity(n);
            let mut p = Complex64::new(1.0, 0.0);
            for _ in 0..n {
                powers.push(p);
                p *= z;
            }
            let norm = powers.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            powers.into_iter().map(|x| x / norm).collect()
        }
        ExtendedScalar::Finite(z) => {
            // (1, z, …, z^{n−1}) = z^{n−1} · (w^{n−1}, …, w, 1) with w = 1/z.
            let w = z.inv();
            let phase = (z / z.norm()).powi((n - 1) as i32);
            let mut rev_powers = Vec::with_capacity(n);
            let mut p = Complex64::new(1.0, 0.0);
            for _ in 0..n {
                rev_powers.push(p);
                p *= w;
            }
            let norm = rev_powers.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            (0..n)
                .map(|k| phase * rev_powers[n - 1 - k] / norm)
                .collect()
        }
    };
    StructuredVector {
        n,
        generator: z,
        entries,
    }
}

/// Normalizer `p_N(|z|) = (Σ_{k<N} |z|^{2k})^{1/2}`, the 2-norm of the raw
/// geometric vector. Returns `None` for `z = ∞`.
pub fn normalizer(z: ExtendedScalar, n: usize) -> Option<f64> {
    let z = z.finite()?;
    let r2 = z.norm_sqr();
    let mut s = 0.0;
    let mut p = 1.0;
    for _ in 0..n {
        s += p;
        p *= r2;
    }
    Some(s.sqrt())
}

/// Materializes `c·z_M z_Nᵀ` (or `c·e_M e_Nᵀ` when `z = ∞`) as a dense
/// matrix. The right factor is not conjugated.
pub fn build_rank1(params: &Rank1HankelParams) -> DenseMatrix {
    let zm = structured_vector(params.z, params.rows);
    let zn = structured_vector(params.z, params.cols);
    DenseMatrix::outer(&zm.entries, &zn.entries).scale(params.c)
}

/// Orthogonal projection onto the Hankel subspace: replaces every
/// anti-diagonal by its mean. Linear and idempotent.
pub fn hankel_project(a: &DenseMatrix) -> DenseMatrix {
    let (m, n) = (a.rows(), a.cols());
    let sums = antidiagonal_sums(a);
    let mut out = DenseMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            let l = i + j;
            out.set(i, j, sums.values[l] / sums.counts[l] as f64);
        }
    }
    out
}

/// True when every anti-diagonal is constant within
/// `tol · max(1, max-entry-modulus)`.
pub fn is_hankel(a: &DenseMatrix, tol: f64) -> bool {
    hankel_deviation(a) <= tol * 1.0f64.max(a.norm_max())
}

/// Largest deviation of any entry from its anti-diagonal mean.
pub fn hankel_deviation(a: &DenseMatrix) -> f64 {
    let p = hankel_project(a);
    a.sub(&p).norm_max()
}

/// Right-multiplication by the counteridentity `J_N`: reverses column
/// order. Maps Toeplitz matrices to Hankel matrices and is an involution.
pub fn toeplitz_flip(a: &DenseMatrix) -> DenseMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut out = DenseMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            out.set(i, j, a.get(i, n - 1 - j));
        }
    }
    out
}

/// Reverses both row and column order: `J_M A J_N`.
pub fn flip_both(a: &DenseMatrix) -> DenseMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut out = DenseMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            out.set(i, j, a.get(m - 1 - i, n - 1 - j));
        }
    }
    out
}

/// Computes the anti-diagonal sums `h_ℓ` and their entry counts.
pub fn antidiagonal_sums(a: &DenseMatrix) -> AntiDiagonalSums {
    let (m, n) = (a.rows(), a.cols());
    let len = m + n - 1;
    let mut values = vec![Complex64::new(0.0, 0.0); len];
    let mut counts = vec![0usize; len];
    for i in 0..m {
        for j in 0..n {
            values[i + j] += a.get(i, j);
            counts[i + j] += 1;
        }
    }
    AntiDiagonalSums { values, counts }
}

/// Recovers the canonical parameters `(c, z)` from a numerically rank-1
/// Hankel matrix.
///
/// The generator is estimated from the dominant left singular vector `u` as
/// the least-squares ratio `(Σ_k ū_k u_{k+1}) / (Σ_k |u_k|²)`; when
/// essentially all mass sits on the last coordinate, the `z = ∞` branch is
/// taken. The scale is `c = z_M* H z̄_N`.
pub fn extract_params(h: &DenseMatrix, tol: f64) -> Result<Rank1HankelParams> {
    let dev = hankel_deviation(h);
    if dev > tol * 1.0f64.max(h.norm_max()) {
        return Err(Error::NotHankel { deviation: dev });
    }
    let s = svd(h)?;
    if s.sigma.len() > 1 {
        let ratio = s.sigma[1] / s.sigma[0];
        if ratio > tol {
            return Err(Error::NotRank1 { ratio });
        }
    }
    let (m, n) = (h.rows(), h.cols());
    // Use the longer factor for the ratio estimate; a 1-long factor carries
    // no generator information.
    let (w, len): (Vec<Complex64>, usize) = if m >= 2 || n < 2 {
        (s.u[0].clone(), m)
    } else {
        // Row case: H = c/p_N · (1, z, …); the right singular factor is
        // conjugated, so undo the conjugation.
        (s.v[0].iter().map(|x| x.conj()).collect(), n)
    };

    let z = if len < 2 {
        ExtendedScalar::real(0.0)
    } else {
        let head: f64 = w[..len - 1].iter().map(|x| x.norm_sqr()).sum();
        if head <= tol {
            ExtendedScalar::Infinity
        } else {
            let num: Complex64 = (0..len - 1).map(|k| w[k].conj() * w[k + 1]).sum();
            ExtendedScalar::Finite(num / head)
        }
    };

    let zm = structured_vector(z, m);
    let zn = structured_vector(z, n);
    // c = z_M* H z̄_N; both structured factors have unit norm.
    let hv = h.matvec(&zn.entries.iter().map(|x| x.conj()).collect::<Vec<_>>());
    let c: Complex64 = zm
        .entries
        .iter()
        .zip(&hv)
        .map(|(a, b)| a.conj() * b)
        .sum();

    Ok(Rank1HankelParams {
        c,
        z,
        rows: m,
        cols: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn structured_vector_basics() {
        let v = structured_vector(ExtendedScalar::real(0.0), 4);
        assert_eq!(v.entries[0], c(1.0, 0.0));
        assert!(v.entries[1..].iter().all(|x| x.norm() == 0.0));

        let v = structured_vector(ExtendedScalar::Infinity, 3);
        assert_eq!(v.entries[2], c(1.0, 0.0));
        assert!(v.entries[..2].iter().all(|x| x.norm() == 0.0));

        let v = structured_vector(ExtendedScalar::real(1.0), 4);
        for x in &v.entries {
            assert!((x - c(0.5, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn structured_vector_large_generator_no_overflow() {
        let v = structured_vector(ExtendedScalar::real(1e8), 50);
        let norm: f64 = v.entries.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-14);
        assert!(v.entries.iter().all(|x| x.norm().is_finite()));
        // Ratio of consecutive entries must recover the generator.
        let ratio = v.entries[49] / v.entries[48];
        assert!((ratio.re - 1e8).abs() < 1.0);
    }

    #[test]
    fn build_rank1_examples() {
        // c = 7/6, z = 1, 3×3 → (7/18) times the all-ones matrix.
        let h = build_rank1(&Rank1HankelParams {
            c: c(7.0 / 6.0, 0.0),
            z: ExtendedScalar::real(1.0),
            rows: 3,
            cols: 3,
        });
        for e in h.entries() {
            assert!((e - c(7.0 / 18.0, 0.0)).norm() < 1e-14);
        }

        // c = 5, z = ∞, 2×2 → [[0,0],[0,5]].
        let h = build_rank1(&Rank1HankelParams {
            c: c(5.0, 0.0),
            z: ExtendedScalar::Infinity,
            rows: 2,
            cols: 2,
        });
        assert!((h.get(1, 1) - c(5.0, 0.0)).norm() < 1e-14);
        assert!(h.get(0, 0).norm() + h.get(0, 1).norm() + h.get(1, 0).norm() < 1e-14);

        // c = 1, z = 2, 2×2 → [[0.2, 0.4], [0.4, 0.8]].
        let h = build_rank1(&Rank1HankelParams {
            c: c(1.0, 0.0),
            z: ExtendedScalar::real(2.0),
            rows: 2,
            cols: 2,
        });
        let expect = [[0.2, 0.4], [0.4, 0.8]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((h.get(i, j).re - expect[i][j]).abs() < 1e-14);
            }
        }
        assert!(is_hankel(&h, 1e-12));
    }

    #[test]
    fn projection_example() {
        // (1/2)·(1,0,1)ᵀ(1,0,1) projects to [[1/2,0,1/3],[0,1/3,0],[1/3,0,1/2]].
        let u = [c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let a = DenseMatrix::outer(&u, &u).scale(c(0.5, 0.0));
        let p = hankel_project(&a);
        let expect = [
            [0.5, 0.0, 1.0 / 3.0],
            [0.0, 1.0 / 3.0, 0.0],
            [1.0 / 3.0, 0.0, 0.5],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert!((p.get(i, j).re - expect[i][j]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn projection_small() {
        let a = DenseMatrix::from_rows_real(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let p = hankel_project(&a);
        assert_eq!(p.get(0, 0).re, 1.0);
        assert_eq!(p.get(0, 1).re, 2.5);
        assert_eq!(p.get(1, 0).re, 2.5);
        assert_eq!(p.get(1, 1).re, 4.0);
        assert!(is_hankel(&p, 1e-14));
    }

    #[test]
    fn is_hankel_detects() {
        assert!(is_hankel(
            &DenseMatrix::from_rows_real(&[&[1.0, 2.0], &[2.0, 3.0]]),
            1e-14
        ));
        assert!(!is_hankel(
            &DenseMatrix::from_rows_real(&[&[1.0, 2.0], &[5.0, 3.0]]),
            1e-14
        ));
    }

    #[test]
    fn toeplitz_flip_involution_and_identity() {
        let i2 = DenseMatrix::identity(2);
        let f = toeplitz_flip(&i2);
        assert_eq!(f.get(0, 1).re, 1.0);
        assert_eq!(f.get(1, 0).re, 1.0);
        assert_eq!(toeplitz_flip(&f), i2);

        // A Toeplitz matrix flips to Hankel.
        let t = DenseMatrix::from_rows_real(&[&[1.0, 2.0, 3.0], &[4.0, 1.0, 2.0], &[5.0, 4.0, 1.0]]);
        assert!(is_hankel(&toeplitz_flip(&t), 1e-14));
    }

    #[test]
    fn antidiagonal_sums_values() {
        let s = antidiagonal_sums(&DenseMatrix::from_rows_real(&[&[1.0, 2.0], &[3.0, 4.0]]));
        assert_eq!(s.values.iter().map(|x| x.re).collect::<Vec<_>>(), vec![1.0, 5.0, 4.0]);
        assert_eq!(s.counts, vec![1, 2, 1]);
    }

    #[test]
    fn extract_round_trip() {
        let params = Rank1HankelParams {
            c: c(2.9, 0.0),
            z: ExtendedScalar::real(1.2256),
            rows: 4,
            cols: 4,
        };
        let got = extract_params(&build_rank1(&params), 1e-10).unwrap();
        assert!((got.c - params.c).norm() < 1e-10);
        let z = got.z.finite().unwrap();
        assert!((z - c(1.2256, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn extract_infinity_case() {
        let h = DenseMatrix::from_rows_real(&[&[0.0, 0.0], &[0.0, 3.0]]);
        let got = extract_params(&h, 1e-10).unwrap();
        assert!(got.z.is_infinity());
        assert!((got.c - c(3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn extract_all_ones() {
        let h = DenseMatrix::from_real(3, 3, &[7.0 / 18.0; 9]);
        let got = extract_params(&h, 1e-10).unwrap();
        assert!((got.c - c(7.0 / 6.0, 0.0)).norm() < 1e-12);
        assert!((got.z.finite().unwrap() - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn extract_rejects_non_rank1() {
        let a = DenseMatrix::from_rows_real(&[&[1.0, 0.0], &[0.0, 1.0]]);
        assert!(matches!(
            extract_params(&a, 1e-10),
            Err(Error::NotHankel { .. }) | Err(Error::NotRank1 { .. })
        ));
    }
}
