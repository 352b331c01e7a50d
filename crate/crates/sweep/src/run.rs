//! Grid expansion and sweep evaluation.
//!
//! Every grid point is an independent pure computation, so evaluation can fan
//! out across a thread pool (the default `parallel` feature) or run on one
//! thread (`--no-default-features`). Records are buffered and sorted on a
//! deterministic key before emission, so the two modes are byte-identical.

use std::f64::consts::FRAC_1_SQRT_2;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use tritangle_core::oracle::{self, OracleParams};
use tritangle_core::{
    amplitude_damping, apply_local, depolarizing, identity_channel, one_tangle, rindler_density,
    tangle_set, two_tangle, DensityMatrix, InitialState, KrausChannel, NoiseAssignment,
    QubitLabel, TangleSet, TripartiteConfig,
};

use crate::config::{ChannelKind, MeasureKind, Normalization, Party, StateKind, SweepConfig};
use crate::error::Result;

/// One evaluated measure at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureRecord {
    pub state: StateKind,
    pub channel: ChannelKind,
    pub noisy: String,
    pub r: f64,
    pub p_a: f64,
    pub p_b: f64,
    pub p_c: f64,
    pub measure: String,
    pub value: f64,
    pub oracle: Option<f64>,
    pub diff: Option<f64>,
}

/// One point of the expanded grid, tagged with its position for sorting.
#[derive(Debug, Clone)]
pub struct GridPoint {
    pub scenario: usize,
    pub r_index: usize,
    pub p_index: usize,
    pub r: f64,
    pub probs: [f64; 3],
}

/// Expands a scenario into its ordered grid (r outer, probability inner).
pub fn expand_grid(config: &SweepConfig, scenario: usize) -> Vec<GridPoint> {
    let prob_rows: Vec<[f64; 3]> = match &config.per_party {
        None => config
            .shared_points()
            .into_iter()
            .map(|p| {
                let mut probs = [0.0; 3];
                for party in &config.noisy {
                    probs[party.index()] = p;
                }
                probs
            })
            .collect(),
        Some(grids) => {
            let axis = |party: Party| -> Vec<f64> {
                grids.get(&party).map_or_else(|| vec![0.0], |g| g.points())
            };
            let mut rows = Vec::new();
            for &a in &axis(Party::A) {
                for &b in &axis(Party::B) {
                    for &c in &axis(Party::C) {
                        rows.push([a, b, c]);
                    }
                }
            }
            rows
        }
    };

    let mut out = Vec::with_capacity(config.r_values.len() * prob_rows.len());
    for (r_index, &r) in config.r_values.iter().enumerate() {
        for (p_index, &probs) in prob_rows.iter().enumerate() {
            out.push(GridPoint {
                scenario,
                r_index,
                p_index,
                r,
                probs,
            });
        }
    }
    out
}

fn channel_for(kind: ChannelKind, p: f64) -> tritangle_core::error::Result<KrausChannel> {
    match kind {
        ChannelKind::AmplitudeDamping => amplitude_damping(p),
        ChannelKind::Depolarizing => depolarizing(p),
    }
}

fn assignment_for(config: &SweepConfig, probs: [f64; 3]) -> tritangle_core::error::Result<NoiseAssignment> {
    let mut channels = [identity_channel(), identity_channel(), identity_channel()];
    for party in &config.noisy {
        channels[party.index()] = channel_for(config.channel, probs[party.index()])?;
    }
    let [a, b, c] = channels;
    Ok(NoiseAssignment::new(a, b, c))
}

fn evolved_state(config: &SweepConfig, point: &GridPoint) -> tritangle_core::error::Result<DensityMatrix> {
    let initial = match config.state {
        StateKind::Ghz => InitialState::Ghz,
        StateKind::W => InitialState::W,
    };
    let frames = TripartiteConfig::alice_inertial(initial, point.r, point.r)?;
    let rho = rindler_density(&frames)?;
    apply_local(&rho, &assignment_for(config, point.probs)?)
}

/// Closed-form predictions for the oracle column, where coverage exists
/// (amplitude damping only; the GHZ two-tangles are identically zero).
struct OracleColumns {
    one: Option<[f64; 3]>,
    two: Option<[f64; 3]>,
    pi: Option<f64>,
}

fn oracle_columns(config: &SweepConfig, point: &GridPoint) -> tritangle_core::error::Result<OracleColumns> {
    if !config.oracle_compare || config.channel != ChannelKind::AmplitudeDamping {
        return Ok(OracleColumns {
            one: None,
            two: None,
            pi: None,
        });
    }
    let [p, m, n] = point.probs;
    let params = OracleParams::new(point.r, p, m, n)?;
    Ok(match config.state {
        StateKind::Ghz => OracleColumns {
            one: Some(oracle::ghz_one_tangles_ad(&params)?),
            two: Some([0.0; 3]),
            pi: Some(oracle::ghz_pi_ad(&params)?),
        },
        StateKind::W => OracleColumns {
            one: Some(oracle::w_one_tangles_ad(&params)?),
            two: Some(oracle::w_two_tangles_ad(&params)?),
            pi: None,
        },
    })
}

const PARTY_SUFFIX: [&str; 3] = ["A", "B", "C"];
const PAIR_SUFFIX: [&str; 3] = ["AB", "AC", "BC"];

/// Evaluates every requested measure at one grid point.
pub fn evaluate_point(config: &SweepConfig, point: &GridPoint) -> Result<Vec<MeasureRecord>> {
    let rho = evolved_state(config, point)?;

    let needs_full_set = config.measures.iter().any(|m| {
        matches!(
            m,
            MeasureKind::PiTangle | MeasureKind::Residuals | MeasureKind::CkwGaps
        )
    });
    let tangles: Option<TangleSet> = if needs_full_set {
        Some(tangle_set(&rho)?)
    } else {
        None
    };

    let one = |rho: &DensityMatrix, tangles: &Option<TangleSet>| -> tritangle_core::error::Result<[f64; 3]> {
        if let Some(t) = tangles {
            return Ok(t.one_tangles);
        }
        Ok([
            one_tangle(rho, QubitLabel::A)?,
            one_tangle(rho, QubitLabel::BI)?,
            one_tangle(rho, QubitLabel::CI)?,
        ])
    };
    let two = |rho: &DensityMatrix, tangles: &Option<TangleSet>| -> tritangle_core::error::Result<[f64; 3]> {
        if let Some(t) = tangles {
            return Ok(t.two_tangles);
        }
        Ok([
            two_tangle(rho, (QubitLabel::A, QubitLabel::BI))?,
            two_tangle(rho, (QubitLabel::A, QubitLabel::CI))?,
            two_tangle(rho, (QubitLabel::BI, QubitLabel::CI))?,
        ])
    };

    let oracles = oracle_columns(config, point)?;
    let scale = match (config.state, config.normalization) {
        (StateKind::W, Normalization::Figure) => FRAC_1_SQRT_2,
        _ => 1.0,
    };

    let mut records = Vec::new();
    let mut push = |measure: String, value: f64, oracle: Option<f64>| {
        let value = value * scale;
        let oracle = oracle.map(|o| o * scale);
        let diff = oracle.map(|o| (value - o).abs());
        records.push(MeasureRecord {
            state: config.state,
            channel: config.channel,
            noisy: config.noisy_label(),
            r: point.r,
            p_a: point.probs[0],
            p_b: point.probs[1],
            p_c: point.probs[2],
            measure,
            value,
            oracle,
            diff,
        });
    };

    for kind in &config.measures {
        match kind {
            MeasureKind::OneTangles => {
                let values = one(&rho, &tangles)?;
                for i in 0..3 {
                    push(
                        format!("one_tangle_{}", PARTY_SUFFIX[i]),
                        values[i],
                        oracles.one.map(|o| o[i]),
                    );
                }
            }
            MeasureKind::TwoTangles => {
                let values = two(&rho, &tangles)?;
                for i in 0..3 {
                    push(
                        format!("two_tangle_{}", PAIR_SUFFIX[i]),
                        values[i],
                        oracles.two.map(|o| o[i]),
                    );
                }
            }
            MeasureKind::PiTangle => {
                let t = tangles.as_ref().expect("tangle set computed");
                push("pi_tangle".to_string(), t.pi_tangle, oracles.pi);
            }
            MeasureKind::Residuals => {
                let t = tangles.as_ref().expect("tangle set computed");
                for (suffix, value) in PARTY_SUFFIX.iter().zip(t.residuals) {
                    push(format!("residual_{suffix}"), value, None);
                }
            }
            MeasureKind::CkwGaps => {
                let t = tangles.as_ref().expect("tangle set computed");
                for (i, suffix) in PARTY_SUFFIX.iter().enumerate() {
                    // The raw (unclamped) monogamy gap equals
                    // one^2 - sum of the party's two-tangles squared.
                    let others: Vec<usize> = (0..3).filter(|&y| y != i).collect();
                    let pair_sq = |x: usize, y: usize| {
                        let idx = match (x.min(y), x.max(y)) {
                            (0, 1) => 0,
                            (0, 2) => 1,
                            _ => 2,
                        };
                        t.two_tangles[idx].powi(2)
                    };
                    let gap = t.one_tangles[i].powi(2) - pair_sq(i, others[0]) - pair_sq(i, others[1]);
                    push(format!("ckw_gap_{suffix}"), gap, None);
                }
            }
        }
    }
    // Lexicographic measure order within the point.
    records.sort_by(|a, b| a.measure.cmp(&b.measure));
    Ok(records)
}

fn sort_records(points: &[GridPoint], mut nested: Vec<Vec<MeasureRecord>>) -> Vec<MeasureRecord> {
    let mut keyed: Vec<(usize, usize, usize, Vec<MeasureRecord>)> = nested
        .drain(..)
        .zip(points)
        .map(|(recs, pt)| (pt.scenario, pt.r_index, pt.p_index, recs))
        .collect();
    keyed.sort_by_key(|(s, r, p, _)| (*s, *r, *p));
    keyed.into_iter().flat_map(|(_, _, _, recs)| recs).collect()
}

/// Sequential grid evaluation.
pub fn evaluate_grid_sequential(
    config: &SweepConfig,
    points: &[GridPoint],
) -> Result<Vec<MeasureRecord>> {
    let nested = points
        .iter()
        .map(|pt| evaluate_point(config, pt))
        .collect::<Result<Vec<_>>>()?;
    Ok(sort_records(points, nested))
}

/// Data-parallel grid evaluation over the rayon thread pool.
#[cfg(feature = "parallel")]
pub fn evaluate_grid_parallel(
    config: &SweepConfig,
    points: &[GridPoint],
) -> Result<Vec<MeasureRecord>> {
    let nested = points
        .par_iter()
        .map(|pt| evaluate_point(config, pt))
        .collect::<Result<Vec<_>>>()?;
    Ok(sort_records(points, nested))
}

/// Runs one scenario's sweep (parallel when the feature is enabled).
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<MeasureRecord>> {
    run_scenarios(std::slice::from_ref(config))
}

/// Runs a list of scenarios, concatenating records in scenario order.
pub fn run_scenarios(configs: &[SweepConfig]) -> Result<Vec<MeasureRecord>> {
    let mut all_points = Vec::new();
    for (idx, config) in configs.iter().enumerate() {
        all_points.extend(expand_grid(config, idx));
    }
    #[cfg(feature = "parallel")]
    {
        let nested = all_points
            .par_iter()
            .map(|pt| evaluate_point(&configs[pt.scenario], pt))
            .collect::<Result<Vec<_>>>()?;
        Ok(sort_records(&all_points, nested))
    }
    #[cfg(not(feature = "parallel"))]
    {
        let nested = all_points
            .iter()
            .map(|pt| evaluate_point(&configs[pt.scenario], pt))
            .collect::<Result<Vec<_>>>()?;
        Ok(sort_records(&all_points, nested))
    }
}
