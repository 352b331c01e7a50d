//! Dense complex linear algebra and entanglement analysis for a three-observer
//! (Alice, Bob, Charlie) fermionic qubit system in which Bob and/or Charlie may
//! undergo uniform acceleration while each qubit interacts locally with an
//! amplitude-damping or depolarizing environment.
//!
//! The crate is organized as a numerical pipeline:
//!
//! * [`matrix`] / [`eigen`] — value-semantic complex matrices, Kronecker
//!   products, a cyclic Jacobi Hermitian eigensolver, and the trace norm.
//! * [`density`] — density matrices with qubit-layout metadata, partial trace,
//!   partial transpose, and validity reporting.
//! * [`rindler`] — GHZ/W preparation, the single-mode transformation into
//!   Rindler modes for accelerated observers, and the region-II trace.
//! * [`channels`] — Kraus channels (amplitude damping, depolarizing) and local
//!   product-channel evolution.
//! * [`measures`] — negativity-based one-tangles, two-tangles, residual
//!   entanglement, the pi-tangle, and the monogamy (CKW) gap.
//! * [`oracle`] — closed-form reference expressions used only to cross-check
//!   the numerical pipeline; several are known to diverge from brute force in
//!   the interior of the parameter domain and are quantified by the sweep
//!   tool's discrepancy report rather than trusted.
//!
//! Everything is a pure function over immutable values, so all types can be
//! shared freely across threads.

pub use num_complex;

pub mod channels;
pub mod density;
pub mod eigen;
pub mod error;
pub mod layout;
pub mod matrix;
pub mod measures;
pub mod oracle;
pub mod rindler;
pub mod state;
pub mod tolerances;

pub use channels::{
    amplitude_damping, apply_local, decay_probability, depolarizing, identity_channel,
    DecayModel, KrausChannel, NoiseAssignment,
};
pub use density::{DensityMatrix, ValidityReport};
pub use eigen::{hermitian_eigenvalues, trace_norm};
pub use error::Error;
pub use layout::{QubitLabel, QubitLayout};
pub use matrix::ComplexMatrix;
pub use measures::{ckw_gap, negativity, one_tangle, pi_tangle, tangle_set, two_tangle, TangleSet};
pub use rindler::{
    acceleration_to_r, ghz_state, rindler_density, trace_region_ii, unruh_expand, Frame,
    InitialState, PartyFrame, TripartiteConfig, w_state,
};
pub use state::StateVector;
