//! Dense row-major complex matrix used as the universal input/output carrier.
//!
//! A "real" matrix is simply a [`DenseMatrix`] whose entries all have zero
//! imaginary part; [`DenseMatrix::is_real`] tests for that view.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense M×N matrix with complex entries stored in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl DenseMatrix {
    /// Creates a zero matrix of the given dimensions.
    ///
    /// # Panics
    /// Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "dimensions must be at least 1x1");
        DenseMatrix {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Creates a matrix from row-major complex entries.
    ///
    /// # Panics
    /// Panics if `entries.len() != rows * cols`, a dimension is zero, or any
    /// entry is non-finite.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert!(rows >= 1 && cols >= 1, "dimensions must be at least 1x1");
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(
            entries.iter().all(|e| e.re.is_finite() && e.im.is_finite()),
            "entries must be finite"
        );
        DenseMatrix { rows, cols, entries }
    }

    /// Creates a matrix from row-major real entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        Self::from_entries(
            rows,
            cols,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    /// Creates a matrix from nested rows of real values.
    ///
    /// # Panics
    /// Panics on ragged rows or empty input.
    pub fn from_rows_real(rows: &[&[f64]]) -> Self {
        assert!(!rows.is_empty(), "need at least one row");
        let cols = rows[0].len();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "all rows must have equal length");
            entries.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        Self::from_entries(rows.len(), cols, entries)
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Number of rows (M).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns (N).
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Entry at row `i`, column `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j]
    }

    /// Sets the entry at row `i`, column `j`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = value;
    }

    /// True when every entry has zero imaginary part (within `tol`).
    pub fn is_real(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| e.im.abs() <= tol)
    }

    /// Real parts of all entries, row-major.
    pub fn real_entries(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.re).collect()
    }

    /// Transpose (no conjugation).
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).conj());
            }
        }
        t
    }

    /// Matrix product `self * other`.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn mul(&self, other: &DenseMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + aik * other.get(k, j));
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * x`.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, x.len(), "vector length must equal column count");
        let mut y = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self.get(i, j) * x[j];
            }
            y[i] = acc;
        }
        y
    }

    /// Entrywise difference `self - other`.
    pub fn sub(&self, other: &DenseMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_entries(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Entrywise sum `self + other`.
    pub fn add(&self, other: &DenseMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_entries(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Scalar multiple `s * self`.
    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().map(|a| a * s).collect(),
        )
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Maximum entry modulus.
    pub fn norm_max(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Maximum deviation from symmetry, `max |a_ij - a_ji|`, for square input.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        if self.rows == self.cols {
            for i in 0..self.rows {
                for j in (i + 1)..self.cols {
                    worst = worst.max((self.get(i, j) - self.get(j, i)).norm());
                }
            }
        }
        worst
    }

    /// Validates the matrix as real symmetric within `tol * norm_fro`.
    pub fn check_real_symmetric(&self, tol: f64) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let scale = self.norm_fro().max(1.0);
        let imag = self
            .entries
            .iter()
            .map(|e| e.im.abs())
            .fold(0.0, f64::max);
        let asym = self.max_asymmetry().max(imag);
        if asym > tol * scale {
            return Err(Error::NonSymmetric { max_asymmetry: asym });
        }
        Ok(())
    }

    /// Outer product `u * v^T` (no conjugation) of column vectors.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        let mut m = Self::zeros(u.len(), v.len());
        for i in 0..u.len() {
            for j in 0..v.len() {
                m.set(i, j, u[i] * v[j]);
            }
        }
        m
    }
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermitian inner product `<u, v> = sum conj(u_k) v_k`.
pub fn vec_dot(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}
