//! Density matrices over labeled qubit registers: partial trace, partial
//! transpose, and validity reporting.

use num_complex::Complex64;

use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::layout::{QubitLabel, QubitLayout};
use crate::matrix::ComplexMatrix;
use crate::state::StateVector;
use crate::tolerances;

/// A square complex matrix tagged with its qubit layout.
///
/// Construction checks shape and finiteness only; the physical invariants
/// (Hermiticity, unit trace, positivity) are checked by [`DensityMatrix::validate`]
/// and guaranteed analytically by the pipeline operations that produce values
/// of this type.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    layout: QubitLayout,
}

/// Outcome of a density-matrix validity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityReport {
    pub hermiticity_defect: f64,
    pub trace_defect: f64,
    pub min_eigenvalue: f64,
}

impl ValidityReport {
    pub fn passes(&self) -> bool {
        self.hermiticity_defect <= tolerances::DENSITY_HERMITICITY_TOL
            && self.trace_defect <= tolerances::DENSITY_TRACE_TOL
            && self.min_eigenvalue >= tolerances::DENSITY_MIN_EIGENVALUE
    }
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, layout: QubitLayout) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Shape(format!(
                "density matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.rows() != layout.dim() {
            return Err(Error::Shape(format!(
                "matrix dimension {} does not match layout {} (dim {})",
                matrix.rows(),
                layout,
                layout.dim()
            )));
        }
        Ok(Self { matrix, layout })
    }

    /// Projector onto a pure state.
    pub fn from_pure(state: &StateVector) -> Self {
        let amps = state.amplitudes();
        let dim = amps.len();
        let matrix = ComplexMatrix::from_fn(dim, dim, |i, j| amps[i] * amps[j].conj());
        Self {
            matrix,
            layout: state.layout().clone(),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn layout(&self) -> &QubitLayout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Reduced density matrix over `keep`, in the original label order.
    /// Trace and Hermiticity are preserved.
    pub fn partial_trace(&self, keep: &[QubitLabel]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::Label("partial trace must keep at least one qubit".into()));
        }
        let sub_layout = self.layout.restricted(keep)?;
        if sub_layout.num_qubits() != keep.len() {
            return Err(Error::Label("duplicate labels in partial trace keep-set".into()));
        }

        let n = self.layout.num_qubits();
        let keep_positions: Vec<usize> = self
            .layout
            .labels()
            .iter()
            .enumerate()
            .filter(|(_, l)| keep.contains(l))
            .map(|(i, _)| i)
            .collect();
        let traced_positions: Vec<usize> = (0..n).filter(|i| !keep_positions.contains(i)).collect();

        let bit = |index: usize, pos: usize| (index >> (n - 1 - pos)) & 1;
        let sub_dim = sub_layout.dim();
        let mut out = vec![Complex64::ZERO; sub_dim * sub_dim];
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                if traced_positions.iter().any(|&t| bit(i, t) != bit(j, t)) {
                    continue;
                }
                let mut si = 0usize;
                let mut sj = 0usize;
                for &kp in &keep_positions {
                    si = (si << 1) | bit(i, kp);
                    sj = (sj << 1) | bit(j, kp);
                }
                out[si * sub_dim + sj] += self.matrix.get(i, j);
            }
        }
        Ok(DensityMatrix {
            matrix: ComplexMatrix::from_rows(sub_dim, sub_dim, out)?,
            layout: sub_layout,
        })
    }

    /// Partial transpose over one subsystem. Hermitian with the same trace;
    /// applying it twice returns the input exactly.
    pub fn partial_transpose(&self, party: QubitLabel) -> Result<ComplexMatrix> {
        self.partial_transpose_multi(&[party])
    }

    /// Partial transpose over a set of subsystems.
    pub fn partial_transpose_multi(&self, parties: &[QubitLabel]) -> Result<ComplexMatrix> {
        let mut mask = 0usize;
        for &p in parties {
            mask |= self.layout.bit_mask(p)?;
        }
        let dim = self.dim();
        Ok(ComplexMatrix::from_fn(dim, dim, |i, j| {
            let ti = (i & !mask) | (j & mask);
            let tj = (j & !mask) | (i & mask);
            self.matrix.get(ti, tj)
        }))
    }

    /// Reports Hermiticity defect, trace defect, and minimum eigenvalue.
    pub fn validate(&self) -> Result<ValidityReport> {
        let hermiticity_defect = self.matrix.hermiticity_defect();
        let trace_defect = (self.matrix.trace() - Complex64::ONE).norm();
        let eigs = hermitian_eigenvalues(&self.matrix)?;
        let min_eigenvalue = eigs.first().copied().unwrap_or(0.0);
        Ok(ValidityReport {
            hermiticity_defect,
            trace_defect,
            min_eigenvalue,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kron;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell_pair() -> DensityMatrix {
        let layout = QubitLayout::new(vec![QubitLabel::A, QubitLabel::BI]).unwrap();
        let m = ComplexMatrix::from_fn(4, 4, |i, j| match (i, j) {
            (0, 0) | (0, 3) | (3, 0) | (3, 3) => c(0.5),
            _ => Complex64::ZERO,
        });
        DensityMatrix::new(m, layout).unwrap()
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let reduced = bell_pair().partial_trace(&[QubitLabel::A]).unwrap();
        assert_eq!(reduced.layout().labels(), &[QubitLabel::A]);
        assert!(reduced.matrix().max_abs_diff(&ComplexMatrix::diag(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn product_state_marginal_recovers_factor() {
        let rho_a = ComplexMatrix::from_rows(2, 2, vec![c(0.7), c(0.2), c(0.2), c(0.3)]).unwrap();
        let rho_b = ComplexMatrix::diag(&[0.4, 0.6]);
        let layout = QubitLayout::new(vec![QubitLabel::A, QubitLabel::BI]).unwrap();
        let rho = DensityMatrix::new(kron(&rho_a, &rho_b), layout).unwrap();
        let reduced = rho.partial_trace(&[QubitLabel::A]).unwrap();
        assert!(reduced.matrix().max_abs_diff(&rho_a) < 1e-14);
    }

    #[test]
    fn unknown_label_is_reported() {
        let err = bell_pair().partial_trace(&[QubitLabel::CI]).unwrap_err();
        assert!(matches!(err, Error::Label(_)));
    }

    #[test]
    fn product_state_is_pt_invariant() {
        let rho_a = ComplexMatrix::diag(&[0.25, 0.75]);
        let rho_b = ComplexMatrix::from_rows(2, 2, vec![c(0.5), c(0.1), c(0.1), c(0.5)]).unwrap();
        let layout = QubitLayout::new(vec![QubitLabel::A, QubitLabel::BI]).unwrap();
        let rho = DensityMatrix::new(kron(&rho_a, &rho_b), layout).unwrap();
        let pt = rho.partial_transpose(QubitLabel::BI).unwrap();
        assert!(pt.max_abs_diff(rho.matrix()) < 1e-15);
    }

    #[test]
    fn bell_partial_transpose_has_negative_eigenvalue() {
        let pt = bell_pair().partial_transpose(QubitLabel::BI).unwrap();
        let eigs = hermitian_eigenvalues(&pt).unwrap();
        assert!((eigs[0] + 0.5).abs() < 1e-13);
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let rho = bell_pair();
        let once = rho.partial_transpose(QubitLabel::BI).unwrap();
        let wrapped = DensityMatrix::new(once, rho.layout().clone()).unwrap();
        let twice = wrapped.partial_transpose(QubitLabel::BI).unwrap();
        assert_eq!(&twice, rho.matrix());
    }

    #[test]
    fn validity_report_passes_and_fails() {
        let layout = QubitLayout::new(vec![QubitLabel::A]).unwrap();
        let good = DensityMatrix::new(ComplexMatrix::diag(&[0.5, 0.5]), layout.clone()).unwrap();
        assert!(good.validate().unwrap().passes());

        let bad = DensityMatrix::new(ComplexMatrix::diag(&[1.5, -0.5]), layout).unwrap();
        let report = bad.validate().unwrap();
        assert!(!report.passes());
        assert!(report.min_eigenvalue < -1e-2);
    }
}
