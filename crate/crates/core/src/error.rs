use thiserror::Error;

/// Errors surfaced by the simulation pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A matrix had the wrong shape for the requested operation.
    #[error("shape error: {0}")]
    Shape(String),

    /// A subsystem label was not present in (or was incompatible with) the
    /// layout of the operand.
    #[error("label error: {0}")]
    Label(String),

    /// A scalar argument fell outside its documented domain.
    #[error("domain error: {what} = {value} outside {range}")]
    Domain {
        what: &'static str,
        value: f64,
        range: &'static str,
    },

    /// Input claimed Hermitian but the defect exceeded tolerance.
    #[error("matrix is not Hermitian within tolerance (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    /// The Jacobi eigensolver failed to reach the off-diagonal threshold.
    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal {off:.3e})")]
    NonConvergence { sweeps: usize, off: f64 },

    /// A closed-form radicand was structurally negative, indicating a
    /// transcription problem rather than roundoff.
    #[error("closed-form evaluation failed: radicand {radicand:.6e} in {context}")]
    Evaluation {
        context: &'static str,
        radicand: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
