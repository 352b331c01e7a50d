//! Hermitian eigenvalues via cyclic Jacobi rotations on the complex matrix,
//! and the trace norm built on top of them.
//!
//! Production matrices here are at most 8x8, where Jacobi's quadratic
//! convergence reaches the 1e-14 off-diagonal threshold in a handful of
//! sweeps, deterministically (fixed sweep order, no pivot search ties).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tolerances;

/// All eigenvalues of a Hermitian matrix, in ascending order.
///
/// The input must be Hermitian within [`tolerances::HERMITIAN_INPUT_TOL`];
/// it is symmetrized before iterating so the result is exactly real.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    if !h.is_square() {
        return Err(Error::Shape(format!(
            "eigenvalues need a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let defect = h.hermiticity_defect();
    if defect > tolerances::HERMITIAN_INPUT_TOL {
        return Err(Error::NotHermitian { defect });
    }

    let n = h.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    // Symmetrized working copy, flat row-major.
    let mut a: Vec<Complex64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(0.5 * (h.get(i, j) + h.get(j, i).conj()));
        }
    }

    let tol = tolerances::JACOBI_OFF_DIAG_TOL;
    for _ in 0..tolerances::JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[p * n + q].norm());
            }
        }
        if off <= tol {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
            eigs.sort_by(f64::total_cmp);
            return Ok(eigs);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let abs = apq.norm();
                if abs <= tol {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                // Unitary 2x2 rotation zeroing the (p,q) element: angle from
                // tan(2*theta) = 2|apq| / (aqq - app), phase from apq itself.
                let phase = apq / abs;
                let theta = 0.5 * (2.0 * abs).atan2(aqq - app);
                let (s, c) = theta.sin_cos();

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = akp * c - akq * s * phase.conj();
                    let new_kq = akp * s * phase + akq * c;
                    a[k * n + p] = new_kp;
                    a[k * n + q] = new_kq;
                    a[p * n + k] = new_kp.conj();
                    a[q * n + k] = new_kq.conj();
                }
                let new_pp = app * c * c - 2.0 * c * s * abs + aqq * s * s;
                let new_qq = app * s * s + 2.0 * c * s * abs + aqq * c * c;
                a[p * n + p] = Complex64::new(new_pp, 0.0);
                a[q * n + q] = Complex64::new(new_qq, 0.0);
                a[p * n + q] = Complex64::ZERO;
                a[q * n + p] = Complex64::ZERO;
            }
        }
    }

    let mut off = 0.0f64;
    for p in 0..n {
        for q in (p + 1)..n {
            off = off.max(a[p * n + q].norm());
        }
    }
    Err(Error::NonConvergence {
        sweeps: tolerances::JACOBI_MAX_SWEEPS,
        off,
    })
}

/// Trace norm of a Hermitian matrix: the sum of |eigenvalue| with
/// sub-[`tolerances::TRACE_NORM_ZERO_EIG`] eigenvalues treated as zero.
pub fn trace_norm(h: &ComplexMatrix) -> Result<f64> {
    let eigs = hermitian_eigenvalues(h)?;
    Ok(eigs
        .iter()
        .map(|&l| {
            if l.abs() < tolerances::TRACE_NORM_ZERO_EIG {
                0.0
            } else {
                l.abs()
            }
        })
        .sum())
}
