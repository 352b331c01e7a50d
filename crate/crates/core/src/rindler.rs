//! Initial GHZ/W states, the single-mode transformation seen by uniformly
//! accelerated observers, and the trace over the causally disconnected
//! region-II modes.
//!
//! An accelerated party's Minkowski modes are rewritten as
//! `|0> -> cos(r)|0_I 0_II> + sin(r)|1_I 1_II>` and `|1> -> |1_I 0_II>`,
//! with the region-II qubit slotted directly after its region-I partner.
//! For fermionic modes the mixing angle satisfies r in [0, pi/4]; r = pi/4 is
//! the infinite-acceleration limit. Region-II qubits are traced out
//! immediately, so the public surface only ever exposes the 8x8 tripartite
//! density matrix over `[A, B_I, C_I]`.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::layout::{QubitLabel, QubitLayout};
use crate::matrix::ComplexMatrix;
use crate::state::StateVector;
use crate::tolerances;

/// Rest frame of one observer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frame {
    Inertial,
    /// Uniform acceleration parameterized by the mixing angle `r` (radians).
    Accelerated { r: f64 },
}

impl Frame {
    fn validate(&self) -> Result<()> {
        if let Frame::Accelerated { r } = self {
            if !r.is_finite()
                || *r < -tolerances::R_DOMAIN_EPS
                || *r > FRAC_PI_4 + tolerances::R_DOMAIN_EPS
            {
                return Err(Error::Domain {
                    what: "acceleration parameter r",
                    value: *r,
                    range: "[0, pi/4]",
                });
            }
        }
        Ok(())
    }
}

/// One observer's qubit label together with its frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartyFrame {
    pub label: QubitLabel,
    pub frame: Frame,
}

/// Which initial state the three observers share.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialState {
    Ghz,
    W,
}

/// Initial state plus the three observers' frames, in the fixed order
/// Alice, Bob, Charlie.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripartiteConfig {
    pub initial: InitialState,
    frames: [PartyFrame; 3],
}

impl TripartiteConfig {
    pub fn new(initial: InitialState, frame_a: Frame, frame_b: Frame, frame_c: Frame) -> Result<Self> {
        let frames = [
            PartyFrame { label: QubitLabel::A, frame: frame_a },
            PartyFrame { label: QubitLabel::BI, frame: frame_b },
            PartyFrame { label: QubitLabel::CI, frame: frame_c },
        ];
        let accelerated = frames
            .iter()
            .filter(|f| matches!(f.frame, Frame::Accelerated { .. }))
            .count();
        if accelerated > 2 {
            return Err(Error::Label(
                "at most two of the three observers may be accelerated".into(),
            ));
        }
        for f in &frames {
            f.frame.validate()?;
        }
        Ok(Self { initial, frames })
    }

    /// Bob and Charlie accelerated with parameters `r_b`, `r_c` (either may
    /// be zero), Alice inertial.
    pub fn alice_inertial(initial: InitialState, r_b: f64, r_c: f64) -> Result<Self> {
        let frame_of = |r: f64| {
            if r == 0.0 {
                Frame::Inertial
            } else {
                Frame::Accelerated { r }
            }
        };
        Self::new(initial, Frame::Inertial, frame_of(r_b), frame_of(r_c))
    }

    pub fn frames(&self) -> &[PartyFrame; 3] {
        &self.frames
    }
}

/// `(|000> + |111>)/sqrt(2)` over `[A, B_I, C_I]`.
pub fn ghz_state() -> StateVector {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut amps = vec![Complex64::ZERO; 8];
    amps[0] = h;
    amps[7] = h;
    StateVector::new(amps, QubitLayout::tripartite()).unwrap()
}

/// `(|001> + |010> + |100>)/sqrt(3)` over `[A, B_I, C_I]`.
pub fn w_state() -> StateVector {
    let t = Complex64::new(1.0 / 3.0f64.sqrt(), 0.0);
    let mut amps = vec![Complex64::ZERO; 8];
    amps[1] = t;
    amps[2] = t;
    amps[4] = t;
    StateVector::new(amps, QubitLayout::tripartite()).unwrap()
}

/// Rewrites the qubit at `position` through the single-mode map, inserting
/// its region-II partner right after it.
fn expand_one_party(
    state: &StateVector,
    position: usize,
    r: f64,
    partner: QubitLabel,
) -> Result<StateVector> {
    let n = state.layout().num_qubits();
    let (sin_r, cos_r) = r.sin_cos();

    let mut labels = state.layout().labels().to_vec();
    labels.insert(position + 1, partner);
    let new_layout = QubitLayout::new(labels)?;

    let old_amps = state.amplitudes();
    let mut amps = vec![Complex64::ZERO; 1 << (n + 1)];
    // Old index splits as [high | bit | low]; the new register is
    // [high | bit_I | bit_II | low].
    let low_bits = n - 1 - position;
    let low_mask = (1usize << low_bits) - 1;
    for (idx, &amp) in old_amps.iter().enumerate() {
        if amp == Complex64::ZERO {
            continue;
        }
        let low = idx & low_mask;
        let bit = (idx >> low_bits) & 1;
        let high = idx >> (low_bits + 1);
        let base = high << (low_bits + 2);
        if bit == 0 {
            // |0> -> cos r |0_I 0_II> + sin r |1_I 1_II>
            amps[base | low] += amp * cos_r;
            amps[base | (0b11 << low_bits) | low] += amp * sin_r;
        } else {
            // |1> -> |1_I 0_II>
            amps[base | (0b10 << low_bits) | low] += amp;
        }
    }
    StateVector::new(amps, new_layout)
}

/// Applies the single-mode transformation for every accelerated party,
/// appending one region-II qubit per accelerated party. Inertial parties are
/// untouched; the output stays a unit vector.
pub fn unruh_expand(state: &StateVector, config: &TripartiteConfig) -> Result<StateVector> {
    if state.layout().labels() != QubitLabel::TRIPARTITE {
        return Err(Error::Label(format!(
            "expected tripartite layout, got {}",
            state.layout()
        )));
    }
    if (state.norm() - 1.0).abs() > tolerances::STATE_NORM_TOL {
        return Err(Error::Shape(format!(
            "input state must be normalized (norm {})",
            state.norm()
        )));
    }
    let mut current = state.clone();
    for party in config.frames() {
        let Frame::Accelerated { r } = party.frame else {
            continue;
        };
        party.frame.validate()?;
        let r = r.clamp(0.0, FRAC_PI_4);
        let position = current.layout().position(party.label)?;
        let partner = party
            .label
            .region_ii_partner()
            .ok_or_else(|| Error::Label(format!("{} cannot accelerate", party.label)))?;
        current = expand_one_party(&current, position, r, partner)?;
    }
    Ok(current)
}

/// Traces out every region-II qubit of an expanded pure state, producing the
/// density matrix the observers can access.
pub fn trace_region_ii(state: &StateVector) -> Result<DensityMatrix> {
    let layout = state.layout();
    let n = layout.num_qubits();
    let kept: Vec<QubitLabel> = layout
        .labels()
        .iter()
        .copied()
        .filter(|l| !l.is_region_ii())
        .collect();
    let kept_positions: Vec<usize> = layout
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.is_region_ii())
        .map(|(i, _)| i)
        .collect();

    let sub_layout = layout.restricted(&kept)?;
    let sub_dim = sub_layout.dim();
    let bit = |index: usize, pos: usize| (index >> (n - 1 - pos)) & 1;

    // rho = sum over region-II bit patterns s of |v_s><v_s|, where v_s
    // collects the amplitudes sharing pattern s.
    let mut buckets: std::collections::BTreeMap<usize, Vec<(usize, Complex64)>> =
        std::collections::BTreeMap::new();
    for (idx, &amp) in state.amplitudes().iter().enumerate() {
        if amp == Complex64::ZERO {
            continue;
        }
        let mut kept_index = 0usize;
        for &kp in &kept_positions {
            kept_index = (kept_index << 1) | bit(idx, kp);
        }
        let mut traced_pattern = 0usize;
        for pos in 0..n {
            if !kept_positions.contains(&pos) {
                traced_pattern = (traced_pattern << 1) | bit(idx, pos);
            }
        }
        buckets.entry(traced_pattern).or_default().push((kept_index, amp));
    }

    let mut out = vec![Complex64::ZERO; sub_dim * sub_dim];
    for component in buckets.values() {
        for &(i, a) in component {
            for &(j, b) in component {
                out[i * sub_dim + j] += a * b.conj();
            }
        }
    }
    DensityMatrix::new(ComplexMatrix::from_rows(sub_dim, sub_dim, out)?, sub_layout)
}

/// Full preparation: initial state, Unruh expansion and region-II trace.
/// Supports unequal accelerations for Bob and Charlie.
pub fn rindler_density(config: &TripartiteConfig) -> Result<DensityMatrix> {
    let initial = match config.initial {
        InitialState::Ghz => ghz_state(),
        InitialState::W => w_state(),
    };
    let expanded = unruh_expand(&initial, config)?;
    trace_region_ii(&expanded)
}

/// Mixing angle for a physical acceleration:
/// `r = arccos((e^{-2 pi omega c / a} + 1)^{-1/2})`, in `(0, pi/4)`.
pub fn acceleration_to_r(a: f64, omega: f64, c: f64) -> Result<f64> {
    for (what, value) in [("acceleration a", a), ("mode frequency omega", omega), ("speed of light c", c)]
    {
        if value <= 0.0 || !value.is_finite() {
            return Err(Error::Domain {
                what,
                value,
                range: "(0, inf)",
            });
        }
    }
    let cos_r = ((-2.0 * PI * omega * c / a).exp() + 1.0).powf(-0.5);
    Ok(cos_r.acos())
}
