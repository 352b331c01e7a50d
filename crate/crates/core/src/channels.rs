//! Kraus channels and local product-channel evolution.
//!
//! Each observer's qubit couples to its own environment, so the full map is a
//! sum over Kronecker products of single-qubit Kraus operators. At 8x8 with
//! at most 4^3 = 64 terms this is microseconds of work; clarity beats
//! vectorization at this scale.

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::layout::{QubitLabel, QubitLayout};
use crate::matrix::{kron, pauli_matrices, ComplexMatrix};
use crate::tolerances;

/// A single-qubit channel as an ordered list of Kraus operators.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    name: &'static str,
    operators: Vec<ComplexMatrix>,
    p: f64,
}

impl KrausChannel {
    /// Validates the completeness relation `sum M†M = I` before accepting
    /// the operators.
    pub fn new(name: &'static str, operators: Vec<ComplexMatrix>, p: f64) -> Result<Self> {
        let mut sum = ComplexMatrix::zeros(2, 2);
        for op in &operators {
            if op.rows() != 2 || op.cols() != 2 {
                return Err(Error::Shape(format!(
                    "Kraus operators must be 2x2, got {}x{}",
                    op.rows(),
                    op.cols()
                )));
            }
            sum = sum.add(&op.adjoint().mul(op)?)?;
        }
        let defect = sum.max_abs_diff(&ComplexMatrix::identity(2));
        if defect > tolerances::CHANNEL_COMPLETENESS_TOL {
            return Err(Error::Shape(format!(
                "Kraus completeness defect {defect:.3e} for channel {name}"
            )));
        }
        Ok(Self { name, operators, p })
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn decay_probability(&self) -> f64 {
        self.p
    }

    pub fn is_identity(&self) -> bool {
        self.name == "identity"
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::Domain {
            what: "decay probability",
            value: p,
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// The do-nothing channel.
pub fn identity_channel() -> KrausChannel {
    KrausChannel::new("identity", vec![ComplexMatrix::identity(2)], 0.0).unwrap()
}

/// Dissipative decay `|1> -> |0>` with probability `p`:
/// `M0 = diag(1, sqrt(1-p))`, `M1 = sqrt(p) |0><1|`.
pub fn amplitude_damping(p: f64) -> Result<KrausChannel> {
    check_probability(p)?;
    let z = Complex64::ZERO;
    let m0 = ComplexMatrix::from_rows(
        2,
        2,
        vec![Complex64::ONE, z, z, Complex64::new((1.0 - p).sqrt(), 0.0)],
    )?;
    let m1 = ComplexMatrix::from_rows(2, 2, vec![z, Complex64::new(p.sqrt(), 0.0), z, z])?;
    KrausChannel::new("amplitude_damping", vec![m0, m1], p)
}

/// Uniform random Pauli errors with total probability `p`:
/// `{sqrt(1-p) s0, sqrt(p/3) s1, sqrt(p/3) s2, sqrt(p/3) s3}`.
pub fn depolarizing(p: f64) -> Result<KrausChannel> {
    check_probability(p)?;
    let [s0, s1, s2, s3] = pauli_matrices();
    let w0 = Complex64::new((1.0 - p).sqrt(), 0.0);
    let w = Complex64::new((p / 3.0).sqrt(), 0.0);
    KrausChannel::new(
        "depolarizing",
        vec![s0.scale(w0), s1.scale(w), s2.scale(w), s3.scale(w)],
        p,
    )
}

/// Markovian decay model relating elapsed time to a decay probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayModel {
    pub gamma: f64,
    pub t: f64,
}

impl DecayModel {
    pub fn new(gamma: f64, t: f64) -> Result<Self> {
        if gamma < 0.0 || !gamma.is_finite() {
            return Err(Error::Domain {
                what: "decay rate gamma",
                value: gamma,
                range: "[0, inf)",
            });
        }
        if t < 0.0 {
            return Err(Error::Domain {
                what: "elapsed time t",
                value: t,
                range: "[0, inf)",
            });
        }
        Ok(Self { gamma, t })
    }
}

/// `p = 1 - e^{-gamma t}`.
pub fn decay_probability(model: DecayModel) -> f64 {
    1.0 - (-model.gamma * model.t).exp()
}

/// One channel per tripartite subsystem, in the order `A, B_I, C_I`.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseAssignment {
    channels: [KrausChannel; 3],
}

impl NoiseAssignment {
    pub fn new(a: KrausChannel, b: KrausChannel, c: KrausChannel) -> Self {
        Self { channels: [a, b, c] }
    }

    pub fn all_identity() -> Self {
        Self::new(identity_channel(), identity_channel(), identity_channel())
    }

    pub fn channel_for(&self, label: QubitLabel) -> Result<&KrausChannel> {
        match label {
            QubitLabel::A => Ok(&self.channels[0]),
            QubitLabel::BI => Ok(&self.channels[1]),
            QubitLabel::CI => Ok(&self.channels[2]),
            other => Err(Error::Label(format!(
                "noise assignments cover A, B_I, C_I; got {other}"
            ))),
        }
    }

    pub fn channels(&self) -> &[KrausChannel; 3] {
        &self.channels
    }
}

/// Local evolution `L(rho) = sum (M_a ⊗ M_b ⊗ M_c) rho (M_a ⊗ M_b ⊗ M_c)†`.
///
/// The input must be the tripartite state over `[A, B_I, C_I]`; identity
/// channels leave their factor untouched entrywise.
pub fn apply_local(rho: &DensityMatrix, assignment: &NoiseAssignment) -> Result<DensityMatrix> {
    if rho.layout().labels() != QubitLabel::TRIPARTITE {
        return Err(Error::Label(format!(
            "local evolution expects layout [A,B_I,C_I], got {}",
            rho.layout()
        )));
    }
    let dim = rho.dim();
    let mut acc = ComplexMatrix::zeros(dim, dim);
    for ma in assignment.channels[0].operators() {
        for mb in assignment.channels[1].operators() {
            let ab = kron(ma, mb);
            for mc in assignment.channels[2].operators() {
                let op = kron(&ab, mc);
                let term = op.mul(rho.matrix())?.mul(&op.adjoint())?;
                acc = acc.add(&term)?;
            }
        }
    }
    DensityMatrix::new(acc, QubitLayout::tripartite())
}
