//! Closed-form-vs-numeric discrepancy reporting.
//!
//! The numerical pipeline is ground truth; the closed forms are transcribed
//! reference expressions, several of which diverge from brute force away
//! from the boundary anchors. This module quantifies those gaps over a
//! config's grid and at a fixed set of pinned anchors, instead of asserting
//! either side.

use std::fmt::Write as _;

use tritangle_core::oracle::{self, OracleParams};
use tritangle_core::{
    amplitude_damping, apply_local, one_tangle, pi_tangle, rindler_density, two_tangle,
    DensityMatrix, InitialState, NoiseAssignment, QubitLabel, TripartiteConfig,
};

use crate::config::{ChannelKind, StateKind, SweepConfig};
use crate::emit::fmt_float;
use crate::error::{Result, SweepError};
use crate::run::{expand_grid, run_sweep};

/// One pinned comparison point.
#[derive(Debug, Clone, PartialEq)]
pub struct AnchorRow {
    pub label: &'static str,
    pub state: StateKind,
    pub r: f64,
    pub p: f64,
    pub m: f64,
    pub n: f64,
    pub measure: &'static str,
    pub numeric: f64,
    pub oracle: f64,
    pub diff: f64,
}

/// Per-measure aggregate gap over the config grid at one r.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureGap {
    pub r: f64,
    pub measure: String,
    pub max_abs_diff: f64,
    pub mean_abs_diff: f64,
}

/// Entrywise evolved-matrix gap over the config grid at one r.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixGap {
    pub r: f64,
    pub max_entry_diff: f64,
    pub mean_entry_diff: f64,
}

#[derive(Debug, Clone)]
pub struct DiscrepancyReport {
    pub state: StateKind,
    pub measure_gaps: Vec<MeasureGap>,
    pub matrix_gaps: Vec<MatrixGap>,
    pub anchors: Vec<AnchorRow>,
    pub notes: Vec<String>,
}

fn ad_assignment(p: f64, m: f64, n: f64) -> tritangle_core::error::Result<NoiseAssignment> {
    Ok(NoiseAssignment::new(
        amplitude_damping(p)?,
        amplitude_damping(m)?,
        amplitude_damping(n)?,
    ))
}

fn numeric_evolved(
    state: StateKind,
    r: f64,
    p: f64,
    m: f64,
    n: f64,
) -> tritangle_core::error::Result<DensityMatrix> {
    let initial = match state {
        StateKind::Ghz => InitialState::Ghz,
        StateKind::W => InitialState::W,
    };
    let config = TripartiteConfig::alice_inertial(initial, r, r)?;
    apply_local(&rindler_density(&config)?, &ad_assignment(p, m, n)?)
}

fn pinned_anchors() -> Result<Vec<AnchorRow>> {
    use std::f64::consts::FRAC_PI_4;
    let mut anchors = Vec::new();
    let mut push = |label: &'static str,
                    state: StateKind,
                    r: f64,
                    probs: (f64, f64, f64),
                    measure: &'static str,
                    numeric: f64,
                    oracle: f64| {
        anchors.push(AnchorRow {
            label,
            state,
            r,
            p: probs.0,
            m: probs.1,
            n: probs.2,
            measure,
            numeric,
            oracle,
            diff: (numeric - oracle).abs(),
        });
    };

    let ghz = StateKind::Ghz;
    let w = StateKind::W;

    // Boundary anchors where both sides agree.
    let rho = numeric_evolved(ghz, 0.0, 0.0, 0.0, 0.0)?;
    let o = oracle::ghz_one_tangles_ad(&OracleParams::new(0.0, 0.0, 0.0, 0.0)?)?;
    push(
        "ghz-origin",
        ghz,
        0.0,
        (0.0, 0.0, 0.0),
        "one_tangle_A",
        one_tangle(&rho, QubitLabel::A)?,
        o[0],
    );

    let rho = numeric_evolved(ghz, 0.0, 1.0, 1.0, 1.0)?;
    let o = oracle::ghz_one_tangles_ad(&OracleParams::new(0.0, 1.0, 1.0, 1.0)?)?;
    push(
        "ghz-full-decay",
        ghz,
        0.0,
        (1.0, 1.0, 1.0),
        "one_tangle_A",
        one_tangle(&rho, QubitLabel::A)?,
        o[0],
    );

    // Documented interior divergences.
    let rho = numeric_evolved(ghz, 0.0, 0.5, 0.0, 0.0)?;
    let o = oracle::ghz_one_tangles_ad(&OracleParams::new(0.0, 0.5, 0.0, 0.0)?)?;
    push(
        "ghz-alice-half",
        ghz,
        0.0,
        (0.5, 0.0, 0.0),
        "one_tangle_A",
        one_tangle(&rho, QubitLabel::A)?,
        o[0],
    );

    let rho = numeric_evolved(ghz, FRAC_PI_4, 0.0, 0.0, 0.0)?;
    let o = oracle::ghz_one_tangles_ad(&OracleParams::new(FRAC_PI_4, 0.0, 0.0, 0.0)?)?;
    push(
        "ghz-max-acceleration",
        ghz,
        FRAC_PI_4,
        (0.0, 0.0, 0.0),
        "one_tangle_A",
        one_tangle(&rho, QubitLabel::A)?,
        o[0],
    );

    let rho = numeric_evolved(w, 0.0, 0.0, 0.0, 0.0)?;
    let o = oracle::w_one_tangles_ad(&OracleParams::new(0.0, 0.0, 0.0, 0.0)?)?;
    push(
        "w-origin",
        w,
        0.0,
        (0.0, 0.0, 0.0),
        "one_tangle_A",
        one_tangle(&rho, QubitLabel::A)?,
        o[0],
    );

    let rho = numeric_evolved(w, 0.0, 0.0, 0.0, 0.0)?;
    let o = oracle::w_two_tangles_ad(&OracleParams::new(0.0, 0.0, 0.0, 0.0)?)?;
    push(
        "w-origin-pair",
        w,
        0.0,
        (0.0, 0.0, 0.0),
        "two_tangle_AB",
        two_tangle(&rho, (QubitLabel::A, QubitLabel::BI))?,
        o[0],
    );

    let rho = numeric_evolved(w, 0.0, 1.0, 0.0, 0.0)?;
    let o = oracle::w_one_tangles_ad(&OracleParams::new(0.0, 1.0, 0.0, 0.0)?)?;
    push(
        "w-alice-full-decay",
        w,
        0.0,
        (1.0, 0.0, 0.0),
        "one_tangle_A",
        one_tangle(&rho, QubitLabel::A)?,
        o[0],
    );

    Ok(anchors)
}

fn grid_gaps(config: &SweepConfig) -> Result<(Vec<MeasureGap>, Vec<MatrixGap>)> {
    let mut with_oracle = config.clone();
    with_oracle.oracle_compare = true;
    let records = run_sweep(&with_oracle)?;

    // (r_text, measure) -> (max, sum, count); BTreeMap keeps output ordered.
    let mut agg: std::collections::BTreeMap<(String, String), (f64, f64, usize)> =
        std::collections::BTreeMap::new();
    let mut r_values: std::collections::BTreeMap<String, f64> = std::collections::BTreeMap::new();
    for rec in &records {
        let Some(diff) = rec.diff else { continue };
        let key = (fmt_float(rec.r), rec.measure.clone());
        r_values.insert(fmt_float(rec.r), rec.r);
        let entry = agg.entry(key).or_insert((0.0, 0.0, 0));
        entry.0 = entry.0.max(diff);
        entry.1 += diff;
        entry.2 += 1;
    }
    let measure_gaps = agg
        .into_iter()
        .map(|((r_text, measure), (max, sum, count))| MeasureGap {
            r: r_values[&r_text],
            measure,
            max_abs_diff: max,
            mean_abs_diff: sum / count as f64,
        })
        .collect();

    // Entrywise evolved-matrix comparison over the same grid.
    let mut matrix_gaps = Vec::new();
    for (r_index, &r) in config.r_values.iter().enumerate() {
        let mut max = 0.0f64;
        let mut sum = 0.0f64;
        let mut count = 0usize;
        for point in expand_grid(config, 0)
            .iter()
            .filter(|pt| pt.r_index == r_index)
        {
            let [p, m, n] = point.probs;
            let params = OracleParams::new(r, p, m, n)?;
            let closed = match config.state {
                StateKind::Ghz => oracle::ghz_evolved_ad(&params)?,
                StateKind::W => oracle::w_evolved_ad(&params)?,
            };
            let numeric = numeric_evolved(config.state, r, p, m, n)?;
            let d = numeric.matrix().max_abs_diff(&closed);
            max = max.max(d);
            sum += d;
            count += 1;
        }
        matrix_gaps.push(MatrixGap {
            r,
            max_entry_diff: max,
            mean_entry_diff: if count == 0 { 0.0 } else { sum / count as f64 },
        });
    }
    Ok((measure_gaps, matrix_gaps))
}

fn standing_notes(state: StateKind) -> Result<Vec<String>> {
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};
    let mut notes = Vec::new();

    let verbatim = oracle::w_rindler_verbatim(FRAC_PI_6, FRAC_PI_6)?;
    notes.push(format!(
        "the W post-trace matrix printed with the |001><011| cross term is non-Hermitian \
         (defect {} at r = pi/6); the pipeline reproduces the Hermiticity-corrected form \
         with |001><010| instead",
        fmt_float(verbatim.hermiticity_defect())
    ));

    let corrected = oracle::ghz_pi_symmetric(1.0)?;
    let verbatim = oracle::ghz_pi_symmetric_verbatim(1.0)?;
    notes.push(format!(
        "the symmetric-case pi-tangle polynomial evaluates to {} at p = 1 where its stated \
         value is 0 (the one-tangle combination gives {}); the combination form is used as \
         the oracle",
        fmt_float(verbatim),
        fmt_float(corrected)
    ));

    let rho = numeric_evolved(StateKind::Ghz, FRAC_PI_4, 0.5, 0.5, 0.5)?;
    let numeric_pi = pi_tangle(&rho)?;
    let closed_pi = oracle::ghz_pi_symmetric(0.5)?;
    notes.push(format!(
        "symmetric GHZ damping at r = pi/4, p = 1/2: numeric pi-tangle {} vs closed-form {}",
        fmt_float(numeric_pi),
        fmt_float(closed_pi)
    ));

    let dead = numeric_evolved(StateKind::Ghz, FRAC_PI_4, 0.6, 0.6, 0.6)?;
    notes.push(format!(
        "amplitude damping on all three parties kills the pi-tangle exactly (PPT across \
         every cut) in part of the domain, e.g. pi = {} at r = pi/4, p = m = n = 0.6; \
         the published no-sudden-death claim holds only for single-party noise",
        fmt_float(pi_tangle(&dead)?)
    ));

    let w_dead = numeric_evolved(StateKind::W, 0.0, 1.0, 0.0, 0.0)?;
    notes.push(format!(
        "full Alice-side damping is a constant channel, so the numeric Alice one-tangle is \
         exactly {} at p = 1 while the closed form gives {}; the published persistence claim \
         describes the closed forms",
        fmt_float(one_tangle(&w_dead, QubitLabel::A)?),
        fmt_float(oracle::w_one_tangles_ad(&OracleParams::new(0.0, 1.0, 0.0, 0.0)?)?[0]),
    ));

    if state == StateKind::Ghz {
        notes.push(
            "depolarizing noise has no closed-form coverage; the exact channel loses all \
             GHZ one-tangles near p = 0.335 at r = 0 and shows no rebound beyond p = 0.75 \
             (run `sweep features` on a depolarizing sweep for the measured curve shape)"
                .to_string(),
        );
    }
    Ok(notes)
}

/// Builds the discrepancy report for an amplitude-damping scenario.
///
/// Depolarizing scenarios are outside closed-form coverage and are rejected
/// with an explanation.
pub fn discrepancy_report(config: &SweepConfig) -> Result<DiscrepancyReport> {
    if config.channel != ChannelKind::AmplitudeDamping {
        return Err(SweepError::Usage(
            "discrepancy reports need an amplitude_damping scenario: the closed-form \
             expressions cover only that channel (with equal accelerations for Bob and \
             Charlie); depolarizing evolution has no published closed forms to compare \
             against"
                .to_string(),
        ));
    }
    let (measure_gaps, matrix_gaps) = grid_gaps(config)?;
    Ok(DiscrepancyReport {
        state: config.state,
        measure_gaps,
        matrix_gaps,
        anchors: pinned_anchors()?,
        notes: standing_notes(config.state)?,
    })
}

impl DiscrepancyReport {
    /// Human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "discrepancy report (state = {})", self.state);
        let _ = writeln!(out, "\nevolved-matrix gap (entrywise, over the grid):");
        for g in &self.matrix_gaps {
            let _ = writeln!(
                out,
                "  r = {}: max {} mean {}",
                fmt_float(g.r),
                fmt_float(g.max_entry_diff),
                fmt_float(g.mean_entry_diff)
            );
        }
        let _ = writeln!(out, "\nper-measure |numeric - closed form| over the grid:");
        for g in &self.measure_gaps {
            let _ = writeln!(
                out,
                "  r = {} {}: max {} mean {}",
                fmt_float(g.r),
                g.measure,
                fmt_float(g.max_abs_diff),
                fmt_float(g.mean_abs_diff)
            );
        }
        let _ = writeln!(out, "\npinned anchors:");
        for a in &self.anchors {
            let _ = writeln!(
                out,
                "  [{}] {} {} at r = {}, (p,m,n) = ({},{},{}): numeric {} vs closed form {} \
                 (diff {})",
                a.label,
                a.state,
                a.measure,
                fmt_float(a.r),
                fmt_float(a.p),
                fmt_float(a.m),
                fmt_float(a.n),
                fmt_float(a.numeric),
                fmt_float(a.oracle),
                fmt_float(a.diff)
            );
        }
        let _ = writeln!(out, "\nnotes:");
        for n in &self.notes {
            let _ = writeln!(out, "  - {n}");
        }
        out
    }

    /// CSV rendering:
    /// `section,label,state,r,p,m,n,measure,numeric,oracle,max_abs_diff,mean_abs_diff`.
    pub fn render_csv(&self) -> String {
        let mut out = String::from(
            "section,label,state,r,p,m,n,measure,numeric,oracle,max_abs_diff,mean_abs_diff\n",
        );
        for g in &self.matrix_gaps {
            let _ = writeln!(
                out,
                "matrix_gap,,{},{},,,,evolved_matrix,,,{},{}",
                self.state,
                fmt_float(g.r),
                fmt_float(g.max_entry_diff),
                fmt_float(g.mean_entry_diff)
            );
        }
        for g in &self.measure_gaps {
            let _ = writeln!(
                out,
                "measure_gap,,{},{},,,,{},,,{},{}",
                self.state,
                fmt_float(g.r),
                g.measure,
                fmt_float(g.max_abs_diff),
                fmt_float(g.mean_abs_diff)
            );
        }
        for a in &self.anchors {
            let _ = writeln!(
                out,
                "anchor,{},{},{},{},{},{},{},{},{},{},",
                a.label,
                a.state,
                fmt_float(a.r),
                fmt_float(a.p),
                fmt_float(a.m),
                fmt_float(a.n),
                a.measure,
                fmt_float(a.numeric),
                fmt_float(a.oracle),
                fmt_float(a.diff)
            );
        }
        out
    }
}
