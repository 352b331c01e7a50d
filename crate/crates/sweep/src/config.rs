//! Sweep configuration: JSON schema, validation, and figure presets.
//!
//! A config file is a single JSON object:
//!
//! ```json
//! {
//!   "state": "ghz",
//!   "channel": "amplitude_damping",
//!   "noisy_parties": ["A"],
//!   "r_values": [0.0, 0.5236, 0.7854],
//!   "p_grid": { "start": 0.0, "stop": 1.0, "step": 0.01 },
//!   "per_party_grids": { "A": { "start": 0.0, "stop": 1.0, "step": 0.1 } },
//!   "measures": ["one_tangles", "two_tangles", "pi_tangle"],
//!   "normalization": "raw",
//!   "oracle_compare": false
//! }
//! ```
//!
//! Only `state` and `channel` are required. `p_grid` drives every noisy
//! party in lockstep; `per_party_grids` instead takes a cartesian product of
//! per-party grids and must cover exactly the noisy parties. Acceleration
//! values may overshoot pi/4 by up to 2e-3 (rounded decimal input) and are
//! clamped. Validation reports every violated constraint at once.

use serde::Deserialize;
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};
use std::fmt;
use std::path::Path;

use crate::error::{Result, SweepError};

/// Slack accepted beyond pi/4 for decimal-rounded r inputs.
const R_INPUT_SLACK: f64 = 2e-3;
/// Largest number of grid points a single scenario may expand to.
const MAX_GRID_POINTS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StateKind {
    Ghz,
    W,
}

impl fmt::Display for StateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateKind::Ghz => "ghz",
            StateKind::W => "w",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ChannelKind {
    AmplitudeDamping,
    Depolarizing,
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelKind::AmplitudeDamping => "amplitude_damping",
            ChannelKind::Depolarizing => "depolarizing",
        })
    }
}

/// Observer identity, mapped onto the tripartite qubits `A, B_I, C_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Party {
    A,
    B,
    C,
}

impl Party {
    pub const ALL: [Party; 3] = [Party::A, Party::B, Party::C];

    pub fn index(self) -> usize {
        match self {
            Party::A => 0,
            Party::B => 1,
            Party::C => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Party::A => 'A',
            Party::B => 'B',
            Party::C => 'C',
        }
    }
}

/// Measure families a sweep can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MeasureKind {
    OneTangles,
    TwoTangles,
    PiTangle,
    Residuals,
    CkwGaps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Report negativities as computed.
    Raw,
    /// Multiply every W-state output by 1/sqrt(2); GHZ outputs untouched.
    Figure,
}

/// A start/stop/step probability grid; points are `start + i*step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut i = 0usize;
        loop {
            let p = self.start + i as f64 * self.step;
            if p > self.stop + self.step * 1e-9 {
                break;
            }
            out.push(p.min(1.0));
            i += 1;
        }
        out
    }
}

/// A validated sweep scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub state: StateKind,
    pub channel: ChannelKind,
    /// Sorted, deduplicated noisy parties; may be empty (noise-free sweep).
    pub noisy: Vec<Party>,
    pub r_values: Vec<f64>,
    /// Shared grid driving all noisy parties together...
    pub p_grid: Grid,
    /// ...unless per-party grids are given (cartesian product, A outer).
    pub per_party: Option<BTreeMap<Party, Grid>>,
    /// Explicit shared probability points (time-domain mode); overrides
    /// `p_grid` when set.
    pub explicit_p_points: Option<Vec<f64>>,
    pub measures: Vec<MeasureKind>,
    pub normalization: Normalization,
    pub oracle_compare: bool,
}

impl SweepConfig {
    pub fn defaults(state: StateKind, channel: ChannelKind, noisy: &[Party]) -> Self {
        let mut noisy: Vec<Party> = noisy.to_vec();
        noisy.sort();
        noisy.dedup();
        Self {
            state,
            channel,
            noisy,
            r_values: vec![0.0, FRAC_PI_6, FRAC_PI_4],
            p_grid: Grid {
                start: 0.0,
                stop: 1.0,
                step: 0.01,
            },
            per_party: None,
            explicit_p_points: None,
            measures: vec![
                MeasureKind::OneTangles,
                MeasureKind::TwoTangles,
                MeasureKind::PiTangle,
            ],
            normalization: Normalization::Raw,
            oracle_compare: false,
        }
    }

    /// Label used in the CSV `noisy` column: concatenated letters or "none".
    pub fn noisy_label(&self) -> String {
        if self.noisy.is_empty() {
            "none".to_string()
        } else {
            self.noisy.iter().map(|p| p.letter()).collect()
        }
    }

    /// The shared probability points: explicit list when present, otherwise
    /// the expanded `p_grid`.
    pub fn shared_points(&self) -> Vec<f64> {
        match &self.explicit_p_points {
            Some(points) => points.clone(),
            None => self.p_grid.points(),
        }
    }
}

// -------- raw JSON layer --------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    start: f64,
    stop: f64,
    step: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    state: String,
    channel: String,
    #[serde(default)]
    noisy_parties: Option<Vec<String>>,
    #[serde(default)]
    r_values: Option<Vec<f64>>,
    #[serde(default)]
    p_grid: Option<RawGrid>,
    #[serde(default)]
    per_party_grids: Option<BTreeMap<String, RawGrid>>,
    #[serde(default)]
    measures: Option<Vec<String>>,
    #[serde(default)]
    normalization: Option<String>,
    #[serde(default)]
    oracle_compare: Option<bool>,
}

fn parse_party(s: &str) -> Option<Party> {
    match s {
        "A" | "a" => Some(Party::A),
        "B" | "b" => Some(Party::B),
        "C" | "c" => Some(Party::C),
        _ => None,
    }
}

fn validate_grid(name: &str, raw: &RawGrid, problems: &mut Vec<String>) -> Grid {
    if !(0.0..=1.0).contains(&raw.start) || !raw.start.is_finite() {
        problems.push(format!("{name}.start = {} outside [0, 1]", raw.start));
    }
    if !(0.0..=1.0).contains(&raw.stop) || !raw.stop.is_finite() {
        problems.push(format!("{name}.stop = {} outside [0, 1]", raw.stop));
    }
    if raw.stop < raw.start {
        problems.push(format!(
            "{name}: stop {} is below start {}",
            raw.stop, raw.start
        ));
    }
    if raw.step <= 0.0 || !raw.step.is_finite() {
        problems.push(format!("{name}.step = {} must be positive", raw.step));
    }
    Grid {
        start: raw.start,
        stop: raw.stop,
        step: raw.step,
    }
}

fn validate(raw: RawConfig) -> Result<SweepConfig> {
    let mut problems = Vec::new();

    let state = match raw.state.as_str() {
        "ghz" | "GHZ" => StateKind::Ghz,
        "w" | "W" => StateKind::W,
        other => {
            problems.push(format!("state must be \"ghz\" or \"w\", got \"{other}\""));
            StateKind::Ghz
        }
    };
    let channel = match raw.channel.as_str() {
        "amplitude_damping" => ChannelKind::AmplitudeDamping,
        "depolarizing" => ChannelKind::Depolarizing,
        other => {
            problems.push(format!(
                "channel must be \"amplitude_damping\" or \"depolarizing\", got \"{other}\""
            ));
            ChannelKind::AmplitudeDamping
        }
    };

    let mut noisy = Vec::new();
    match &raw.noisy_parties {
        None => noisy = Party::ALL.to_vec(),
        Some(entries) => {
            for e in entries {
                match parse_party(e) {
                    Some(p) => noisy.push(p),
                    None => problems.push(format!("unknown party \"{e}\" in noisy_parties")),
                }
            }
            noisy.sort();
            noisy.dedup();
        }
    }

    let mut r_values = raw
        .r_values
        .unwrap_or_else(|| vec![0.0, FRAC_PI_6, FRAC_PI_4]);
    if r_values.is_empty() {
        problems.push("r_values must be nonempty".to_string());
    }
    for r in &mut r_values {
        if !r.is_finite() || *r < -1e-12 || *r > FRAC_PI_4 + R_INPUT_SLACK {
            problems.push(format!("r value {r} outside [0, pi/4]"));
        } else {
            *r = r.clamp(0.0, FRAC_PI_4);
        }
    }

    let p_grid = match &raw.p_grid {
        Some(g) => validate_grid("p_grid", g, &mut problems),
        None => Grid {
            start: 0.0,
            stop: 1.0,
            step: 0.01,
        },
    };

    let per_party = match &raw.per_party_grids {
        None => None,
        Some(map) => {
            if raw.p_grid.is_some() {
                problems.push("give either p_grid or per_party_grids, not both".to_string());
            }
            let mut grids = BTreeMap::new();
            for (key, g) in map {
                match parse_party(key) {
                    None => problems.push(format!("unknown party \"{key}\" in per_party_grids")),
                    Some(p) => {
                        if !noisy.contains(&p) {
                            problems.push(format!(
                                "per_party_grids covers {key} which is not in noisy_parties"
                            ));
                        }
                        grids.insert(
                            p,
                            validate_grid(&format!("per_party_grids.{key}"), g, &mut problems),
                        );
                    }
                }
            }
            for p in &noisy {
                if !grids.contains_key(p) {
                    problems.push(format!(
                        "per_party_grids is missing noisy party {}",
                        p.letter()
                    ));
                }
            }
            Some(grids)
        }
    };

    let measures = match &raw.measures {
        None => vec![
            MeasureKind::OneTangles,
            MeasureKind::TwoTangles,
            MeasureKind::PiTangle,
        ],
        Some(entries) => {
            let mut out = Vec::new();
            for e in entries {
                let kind = match e.as_str() {
                    "one_tangles" => Some(MeasureKind::OneTangles),
                    "two_tangles" => Some(MeasureKind::TwoTangles),
                    "pi_tangle" => Some(MeasureKind::PiTangle),
                    "residuals" => Some(MeasureKind::Residuals),
                    "ckw_gaps" => Some(MeasureKind::CkwGaps),
                    _ => None,
                };
                match kind {
                    Some(k) => out.push(k),
                    None => problems.push(format!("unknown measure \"{e}\"")),
                }
            }
            out.sort();
            out.dedup();
            if out.is_empty() {
                problems.push("measures must be nonempty".to_string());
            }
            out
        }
    };

    let normalization = match raw.normalization.as_deref() {
        None | Some("raw") => Normalization::Raw,
        Some("figure") => Normalization::Figure,
        Some(other) => {
            problems.push(format!(
                "normalization must be \"raw\" or \"figure\", got \"{other}\""
            ));
            Normalization::Raw
        }
    };

    let config = SweepConfig {
        state,
        channel,
        noisy,
        r_values,
        p_grid,
        per_party,
        explicit_p_points: None,
        measures,
        normalization,
        oracle_compare: raw.oracle_compare.unwrap_or(false),
    };

    if problems.is_empty() {
        let points: usize = match &config.per_party {
            None => config.p_grid.points().len(),
            Some(map) => map.values().map(|g| g.points().len()).product(),
        };
        if points == 0 {
            problems.push("probability grid expands to zero points".to_string());
        } else if points.saturating_mul(config.r_values.len()) > MAX_GRID_POINTS {
            problems.push(format!("grid expands to more than {MAX_GRID_POINTS} points"));
        }
    }

    if problems.is_empty() {
        Ok(config)
    } else {
        Err(SweepError::Config(problems))
    }
}

/// Parses and validates a JSON config file.
pub fn parse_config(path: &Path) -> Result<SweepConfig> {
    let text = std::fs::read_to_string(path).map_err(SweepError::io(path))?;
    parse_config_str(&text)
}

/// Parses and validates a JSON config from a string.
pub fn parse_config_str(text: &str) -> Result<SweepConfig> {
    let raw: RawConfig =
        serde_json::from_str(text).map_err(|e| SweepError::Config(vec![e.to_string()]))?;
    validate(raw)
}

/// Names of the built-in figure presets.
pub fn preset_names() -> &'static [&'static str] {
    &[
        "fig1-row1", "fig1-row2", "fig1-row3", "fig2", "fig3", "fig4", "fig5-row1", "fig5-row2",
        "fig5-row3", "fig6-rows", "fig7", "fig8",
    ]
}

/// Expands a preset name into its scenario list.
///
/// The presets regenerate the data behind the figure panels: GHZ one-tangles
/// under amplitude damping for Alice-only / Charlie-only / all-noisy rows,
/// the matching pi-tangle panels, the depolarizing panels, and the W-state
/// counterparts (which carry the 1/sqrt(2) figure normalization).
pub fn preset(name: &str) -> Option<Vec<SweepConfig>> {
    use ChannelKind::*;
    use MeasureKind::*;
    use StateKind::*;

    let one = |state, channel, noisy: &[Party], measures: &[MeasureKind], norm| {
        let mut c = SweepConfig::defaults(state, channel, noisy);
        c.measures = measures.to_vec();
        c.normalization = norm;
        c
    };
    let rows = |state, channel, measures: &[MeasureKind], norm| {
        vec![
            one(state, channel, &[Party::A], measures, norm),
            one(state, channel, &[Party::C], measures, norm),
            one(state, channel, &Party::ALL, measures, norm),
        ]
    };

    let raw = Normalization::Raw;
    let fig = Normalization::Figure;
    Some(match name {
        "fig1-row1" => vec![one(Ghz, AmplitudeDamping, &[Party::A], &[OneTangles], raw)],
        "fig1-row2" => vec![one(Ghz, AmplitudeDamping, &[Party::C], &[OneTangles], raw)],
        "fig1-row3" => vec![one(Ghz, AmplitudeDamping, &Party::ALL, &[OneTangles], raw)],
        "fig2" => rows(Ghz, AmplitudeDamping, &[PiTangle], raw),
        "fig3" => vec![one(Ghz, Depolarizing, &Party::ALL, &[OneTangles], raw)],
        "fig4" => vec![one(Ghz, Depolarizing, &Party::ALL, &[PiTangle], raw)],
        "fig5-row1" => vec![one(W, AmplitudeDamping, &[Party::A], &[OneTangles], fig)],
        "fig5-row2" => vec![one(W, AmplitudeDamping, &[Party::C], &[OneTangles], fig)],
        "fig5-row3" => vec![one(W, AmplitudeDamping, &Party::ALL, &[OneTangles], fig)],
        "fig6-rows" => rows(W, AmplitudeDamping, &[TwoTangles], fig),
        "fig7" => rows(W, AmplitudeDamping, &[PiTangle], fig),
        "fig8" => vec![one(
            W,
            Depolarizing,
            &Party::ALL,
            &[OneTangles, TwoTangles, PiTangle],
            fig,
        )],
        _ => return None,
    })
}
