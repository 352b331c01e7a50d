//! Dense complex matrices in row-major order.
//!
//! Matrices are value-semantic: every operation returns a fresh matrix and no
//! public API mutates an existing one, so values can be shared across threads.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_rows(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Shape("matrix entries must be finite".into()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::ONE;
        }
        m
    }

    /// Diagonal matrix from real entries.
    pub fn diag(entries: &[f64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * n + i] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("dimension mismatch in matrix sum".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * z).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Complex64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise |self - other|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.rows, other.rows);
        debug_assert_eq!(self.cols, other.cols);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise |self - self†|; zero for an exactly Hermitian matrix.
    pub fn hermiticity_defect(&self) -> f64 {
        debug_assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Kronecker product; output dimensions are the products of the inputs'.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac) = (a.rows(), a.cols());
    let (br, bc) = (b.rows(), b.cols());
    let mut out = ComplexMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a.get(i, j);
            if aij == Complex64::ZERO {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out.data[(i * br + k) * ac * bc + (j * bc + l)] = aij * b.get(k, l);
                }
            }
        }
    }
    out
}

/// The four Pauli matrices `[sigma_0, sigma_1, sigma_2, sigma_3]`.
pub fn pauli_matrices() -> [ComplexMatrix; 4] {
    let z = Complex64::ZERO;
    let one = Complex64::ONE;
    let i = Complex64::I;
    let sigma0 = ComplexMatrix::identity(2);
    let sigma1 = ComplexMatrix::from_rows(2, 2, vec![z, one, one, z]).unwrap();
    let sigma2 = ComplexMatrix::from_rows(2, 2, vec![z, -i, i, z]).unwrap();
    let sigma3 = ComplexMatrix::from_rows(2, 2, vec![one, z, z, -one]).unwrap();
    [sigma0, sigma1, sigma2, sigma3]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn kron_of_identities() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_of_projectors() {
        let p = ComplexMatrix::diag(&[1.0, 0.0]);
        let k = kron(&p, &p);
        assert_eq!(k, ComplexMatrix::diag(&[1.0, 0.0, 0.0, 0.0]));
    }

    #[test]
    fn kron_flips_both_qubits() {
        // (sigma_x ⊗ sigma_x)|00> = |11>
        let [_, sx, _, _] = pauli_matrices();
        let xx = kron(&sx, &sx);
        let ket00 = ComplexMatrix::from_rows(4, 1, vec![c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        let out = xx.mul(&ket00).unwrap();
        for i in 0..3 {
            assert_eq!(out.get(i, 0), Complex64::ZERO);
        }
        assert_eq!(out.get(3, 0), Complex64::ONE);
    }

    #[test]
    fn kron_trace_is_multiplicative() {
        let a = ComplexMatrix::from_rows(2, 2, vec![c(0.3), c(0.1), c(0.1), c(0.7)]).unwrap();
        let b = ComplexMatrix::from_rows(2, 2, vec![c(2.0), c(0.0), c(0.0), c(-1.0)]).unwrap();
        let lhs = kron(&a, &b).trace();
        let rhs = a.trace() * b.trace();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn rejects_non_finite_entries() {
        let bad = ComplexMatrix::from_rows(1, 1, vec![Complex64::new(f64::NAN, 0.0)]);
        assert!(bad.is_err());
    }

    #[test]
    fn adjoint_conjugates() {
        let m = ComplexMatrix::from_rows(2, 2, vec![c(1.0), Complex64::I, c(0.0), c(2.0)]).unwrap();
        let d = m.adjoint();
        assert_eq!(d.get(1, 0), -Complex64::I);
        assert_eq!(d.get(0, 1), Complex64::ZERO);
    }
}
