//! Deterministic test-matrix generation. The same seed always produces a
//! byte-identical CSV.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hankel1::{build_rank1, DenseMatrix, ExtendedScalar, Rank1HankelParams};

/// Supported matrix families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    /// Independent uniform entries in [−1, 1].
    Random,
    /// Symmetric with uniform entries in [−1, 1].
    RandomSymmetric,
    /// Hankel with uniform anti-diagonal values in [−1, 1].
    Hankel,
    /// Exact rank-1 Hankel plus `noise`·(uniform matrix).
    Rank1HankelPlusNoise,
}

/// Generates one matrix.
pub fn generate(
    kind: GenKind,
    rows: usize,
    cols: usize,
    seed: u64,
    noise: f64,
    complex_field: bool,
) -> DenseMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scalar = |rng: &mut ChaCha8Rng| -> Complex64 {
        let re = rng.gen_range(-1.0..1.0);
        if complex_field {
            Complex64::new(re, rng.gen_range(-1.0..1.0))
        } else {
            Complex64::new(re, 0.0)
        }
    };
    match kind {
        GenKind::Random => {
            let entries: Vec<Complex64> = (0..rows * cols).map(|_| scalar(&mut rng)).collect();
            DenseMatrix::from_entries(rows, cols, entries)
        }
        GenKind::RandomSymmetric => {
            let n = rows.max(cols);
            let mut a = DenseMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let x = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
                    a.set(i, j, x);
                    a.set(j, i, x);
                }
            }
            a
        }
        GenKind::Hankel => {
            let vals: Vec<Complex64> =
                (0..rows + cols - 1).map(|_| scalar(&mut rng)).collect();
            let mut a = DenseMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    a.set(i, j, vals[i + j]);
                }
            }
            a
        }
        GenKind::Rank1HankelPlusNoise => {
            let z = if complex_field {
                ExtendedScalar::Finite(Complex64::new(
                    rng.gen_range(-1.2..1.2),
                    rng.gen_range(-1.2..1.2),
                ))
            } else {
                ExtendedScalar::real(rng.gen_range(-1.2..1.2))
            };
            let c = Complex64::new(rng.gen_range(0.5..2.0), 0.0);
            let base = build_rank1(&Rank1HankelParams { c, z, rows, cols });
            let mut a = base;
            if noise != 0.0 {
                for i in 0..rows {
                    for j in 0..cols {
                        let d = scalar(&mut rng) * noise;
                        a.set(i, j, a.get(i, j) + d);
                    }
                }
            }
            a
        }
    }
}
