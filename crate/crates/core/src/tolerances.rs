//! Pinned numerical tolerances.
//!
//! Every threshold used by the pipeline lives here so that a tolerance is a
//! single named decision rather than a magic number scattered across modules.

/// Maximum entrywise |h - h†| accepted by the eigensolver and trace norm.
pub const HERMITIAN_INPUT_TOL: f64 = 1e-10;

/// Off-diagonal magnitude below which a Jacobi sweep considers the matrix
/// diagonalized.
pub const JACOBI_OFF_DIAG_TOL: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; convergence is quadratic, so for the 8x8
/// matrices used here the cap is generous by two orders of magnitude.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues with |lambda| below this are treated as exact zeros in trace
/// norm sums, suppressing noise-driven spurious negativity.
pub const TRACE_NORM_ZERO_EIG: f64 = 1e-12;

/// A negativity within this distance of zero is clamped to zero.
pub const NEGATIVITY_CLAMP: f64 = 1e-12;

/// Negative residual entanglement values smaller in magnitude than this are
/// clamped to zero before the pi-tangle mean.
pub const RESIDUAL_CLAMP: f64 = 1e-9;

/// Maximum entrywise |rho - rho†| for a valid density matrix.
pub const DENSITY_HERMITICITY_TOL: f64 = 1e-12;

/// Maximum |tr(rho) - 1| for a valid density matrix.
pub const DENSITY_TRACE_TOL: f64 = 1e-12;

/// Minimum eigenvalue accepted as "positive semidefinite up to noise".
pub const DENSITY_MIN_EIGENVALUE: f64 = -1e-10;

/// Kraus completeness: maximum entrywise |sum M†M - I|.
pub const CHANNEL_COMPLETENESS_TOL: f64 = 1e-12;

/// Closed-form radicands that round to a negative value no larger than this
/// in magnitude are clamped to zero; anything more negative is structural and
/// raises an evaluation error.
pub const RADICAND_CLAMP: f64 = 1e-12;

/// Slack accepted on the acceleration-parameter domain [0, pi/4] to absorb
/// floating-point roundoff from callers.
pub const R_DOMAIN_EPS: f64 = 1e-9;

/// Unit-norm check for state vectors entering the Rindler expansion.
pub const STATE_NORM_TOL: f64 = 1e-10;
