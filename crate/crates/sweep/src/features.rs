//! Qualitative feature detection on sweep records: zero crossings, rebounds,
//! triple intersections of the one-tangles, and sudden death.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::config::{ChannelKind, StateKind};
use crate::emit::fmt_float;
use crate::error::{Result, SweepError};
use crate::run::MeasureRecord;

/// A measure counts as zero below this.
pub const ZERO_TOL: f64 = 1e-8;
/// A rebound needs the measure to exceed this after touching zero.
pub const REBOUND_RISE_TOL: f64 = 1e-6;
/// Grid-point coincidence threshold for a triple intersection.
pub const INTERSECT_GRID_TOL: f64 = 1e-8;
/// Coincidence threshold at an interpolated crossing.
pub const INTERSECT_INTERP_TOL: f64 = 1e-6;

/// Identifies one scenario curve family: everything except the probability.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScenarioKey {
    pub state: StateKind,
    pub channel: ChannelKind,
    pub noisy: String,
    /// The r value, as its deterministic CSV rendering.
    pub r_text: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rebound {
    pub measure: String,
    pub p_min: f64,
    pub value_at_pmin: f64,
    pub value_at_end: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Intersection {
    /// Numerically located crossing.
    pub p: f64,
    /// Closed-form prediction `cos(2r) sin^2(r)`, for the damped GHZ case.
    pub predicted: Option<f64>,
}

/// Features of one scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioFeatures {
    pub key: ScenarioKey,
    pub r: f64,
    /// `(measure, p*)` where the curve first drops to zero.
    pub zero_crossings: Vec<(String, f64)>,
    pub rebounds: Vec<Rebound>,
    pub intersections: Vec<Intersection>,
    /// `(measure, onset p)` where the curve is dead on an interval below p = 1.
    pub sudden_death: Vec<(String, f64)>,
}

impl ScenarioFeatures {
    pub fn sudden_death_any(&self) -> bool {
        !self.sudden_death.is_empty()
    }
}

/// The single probability axis of a scenario's records.
///
/// Shared grids move every noisy party together, so the largest per-party
/// probability orders the points for any scenario produced by `run_sweep`.
fn p_axis(rec: &MeasureRecord) -> f64 {
    rec.p_a.max(rec.p_b).max(rec.p_c)
}

fn interpolate_zero(p0: f64, v0: f64, p1: f64, v1: f64) -> f64 {
    if (v0 - v1).abs() < f64::MIN_POSITIVE {
        p0
    } else {
        p0 + (p0 - p1) * v0 / (v1 - v0)
    }
}

fn detect_curve(measure: &str, points: &[(f64, f64)], features: &mut ScenarioFeatures) {
    // First drop to (effective) zero, linearly interpolated.
    for w in points.windows(2) {
        let (p0, v0) = w[0];
        let (p1, v1) = w[1];
        if v0 > ZERO_TOL && v1 <= ZERO_TOL {
            features
                .zero_crossings
                .push((measure.to_string(), interpolate_zero(p0, v0, p1, v1)));
            break;
        }
    }

    // Rebound: reaches zero somewhere, then rises again.
    if let Some(first_zero) = points.iter().position(|&(_, v)| v <= ZERO_TOL) {
        let revived = points[first_zero..]
            .iter()
            .any(|&(_, v)| v > REBOUND_RISE_TOL);
        if revived {
            let (p_min, value_at_pmin) = points
                .iter()
                .copied()
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("nonempty curve");
            features.rebounds.push(Rebound {
                measure: measure.to_string(),
                p_min,
                value_at_pmin,
                value_at_end: points.last().expect("nonempty curve").1,
            });
        }
    }

    // Sudden death: zero on an interval (two consecutive grid points)
    // whose start lies strictly below p = 1.
    for w in points.windows(2) {
        let (p0, v0) = w[0];
        let (_, v1) = w[1];
        if v0 <= ZERO_TOL && v1 <= ZERO_TOL && p0 < 1.0 {
            features.sudden_death.push((measure.to_string(), p0));
            break;
        }
    }
}

fn detect_intersections(
    curves: &BTreeMap<String, Vec<(f64, f64)>>,
    key: &ScenarioKey,
    r: f64,
    features: &mut ScenarioFeatures,
) {
    let (Some(a), Some(b), Some(c)) = (
        curves.get("one_tangle_A"),
        curves.get("one_tangle_B"),
        curves.get("one_tangle_C"),
    ) else {
        return;
    };
    if a.len() != b.len() || b.len() != c.len() {
        return;
    }
    let predicted = (key.state == StateKind::Ghz && key.channel == ChannelKind::AmplitudeDamping)
        .then(|| (2.0 * r).cos() * r.sin().powi(2));
    let mut found: Vec<f64> = Vec::new();

    let spread_at = |i: usize| -> f64 {
        let (va, vb, vc) = (a[i].1, b[i].1, c[i].1);
        (va - vb).abs().max((va - vc).abs()).max((vb - vc).abs())
    };
    // Grid points where all three coincide, provided the coincidence is
    // isolated (fully symmetric scenarios coincide everywhere, which is
    // symmetry rather than an intersection) and the curves are not all zero.
    for i in 0..a.len() {
        if spread_at(i) >= INTERSECT_GRID_TOL || a[i].1 <= ZERO_TOL {
            continue;
        }
        let isolated_left = i == 0 || spread_at(i - 1) >= INTERSECT_GRID_TOL;
        let isolated_right = i + 1 == a.len() || spread_at(i + 1) >= INTERSECT_GRID_TOL;
        if isolated_left && isolated_right {
            found.push(a[i].0);
        }
    }

    // Interpolated crossings of any pair where the third curve agrees.
    let value_at = |curve: &[(f64, f64)], i: usize, p: f64| -> f64 {
        let (p0, v0) = curve[i];
        let (p1, v1) = curve[i + 1];
        if (p1 - p0).abs() < f64::MIN_POSITIVE {
            v0
        } else {
            v0 + (v1 - v0) * (p - p0) / (p1 - p0)
        }
    };
    type Curve<'a> = &'a [(f64, f64)];
    let pairs: [(Curve, Curve); 3] = [(a, b), (a, c), (b, c)];
    for (x, y) in pairs {
        for i in 0..x.len() - 1 {
            let d0 = x[i].1 - y[i].1;
            let d1 = x[i + 1].1 - y[i + 1].1;
            if d0 == 0.0 || d0.signum() == d1.signum() || d1 == 0.0 {
                continue;
            }
            let p_cross = interpolate_zero(x[i].0, d0, x[i + 1].0, d1);
            let (va, vb, vc) = (
                value_at(a, i, p_cross),
                value_at(b, i, p_cross),
                value_at(c, i, p_cross),
            );
            let spread = (va - vb).abs().max((va - vc).abs()).max((vb - vc).abs());
            if spread < INTERSECT_INTERP_TOL && va > ZERO_TOL {
                found.push(p_cross);
            }
        }
    }

    found.sort_by(f64::total_cmp);
    found.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
    features
        .intersections
        .extend(found.into_iter().map(|p| Intersection { p, predicted }));
}

/// Groups records by scenario and detects qualitative features per measure.
///
/// Records must come from `run_sweep`-style output; an empty input is a
/// usage error.
pub fn detect_features(records: &[MeasureRecord]) -> Result<Vec<ScenarioFeatures>> {
    if records.is_empty() {
        return Err(SweepError::Usage(
            "no records to analyze; run a sweep first".to_string(),
        ));
    }
    // scenario -> measure -> curve
    let mut groups: BTreeMap<ScenarioKey, BTreeMap<String, Vec<(f64, f64)>>> = BTreeMap::new();
    let mut r_of: BTreeMap<ScenarioKey, f64> = BTreeMap::new();
    for rec in records {
        let key = ScenarioKey {
            state: rec.state,
            channel: rec.channel,
            noisy: rec.noisy.clone(),
            r_text: fmt_float(rec.r),
        };
        r_of.entry(key.clone()).or_insert(rec.r);
        groups
            .entry(key)
            .or_default()
            .entry(rec.measure.clone())
            .or_default()
            .push((p_axis(rec), rec.value));
    }

    let mut out = Vec::new();
    for (key, mut curves) in groups {
        let r = r_of[&key];
        let mut features = ScenarioFeatures {
            key: key.clone(),
            r,
            zero_crossings: Vec::new(),
            rebounds: Vec::new(),
            intersections: Vec::new(),
            sudden_death: Vec::new(),
        };
        for (measure, curve) in curves.iter_mut() {
            curve.sort_by(|x, y| x.0.total_cmp(&y.0));
            if curve.len() >= 2 {
                detect_curve(measure, curve, &mut features);
            }
        }
        detect_intersections(&curves, &key, r, &mut features);
        out.push(features);
    }
    Ok(out)
}

/// Human-readable feature report.
pub fn render_text(features: &[ScenarioFeatures]) -> String {
    let mut out = String::new();
    for f in features {
        let _ = writeln!(
            out,
            "scenario: state={} channel={} noisy={} r={}",
            f.key.state, f.key.channel, f.key.noisy, f.key.r_text
        );
        if f.zero_crossings.is_empty() {
            let _ = writeln!(out, "  zero crossings: none");
        }
        for (measure, p) in &f.zero_crossings {
            let _ = writeln!(out, "  zero crossing: {measure} at p = {}", fmt_float(*p));
        }
        if f.rebounds.is_empty() {
            let _ = writeln!(out, "  rebound: none");
        }
        for r in &f.rebounds {
            let _ = writeln!(
                out,
                "  rebound: {} min {} at p = {}, grid end {}",
                r.measure,
                fmt_float(r.value_at_pmin),
                fmt_float(r.p_min),
                fmt_float(r.value_at_end)
            );
        }
        if f.intersections.is_empty() {
            let _ = writeln!(out, "  one-tangle intersection: none");
        }
        for i in &f.intersections {
            match i.predicted {
                Some(pred) => {
                    let _ = writeln!(
                        out,
                        "  one-tangle intersection at p = {} (closed form predicts {})",
                        fmt_float(i.p),
                        fmt_float(pred)
                    );
                }
                None => {
                    let _ = writeln!(out, "  one-tangle intersection at p = {}", fmt_float(i.p));
                }
            }
        }
        if f.sudden_death.is_empty() {
            let _ = writeln!(out, "  sudden death: none");
        }
        for (measure, p) in &f.sudden_death {
            let _ = writeln!(out, "  sudden death: {measure} from p = {}", fmt_float(*p));
        }
    }
    out
}

/// CSV rendering of a feature report:
/// `feature,state,channel,noisy,r,measure,p,value,value_end`.
pub fn render_csv(features: &[ScenarioFeatures]) -> String {
    let mut out = String::from("feature,state,channel,noisy,r,measure,p,value,value_end\n");
    for f in features {
        let prefix = |measure: &str| {
            format!(
                "{},{},{},{},{}",
                f.key.state, f.key.channel, f.key.noisy, f.key.r_text, measure
            )
        };
        for (measure, p) in &f.zero_crossings {
            let _ = writeln!(out, "zero_crossing,{},{},,", prefix(measure), fmt_float(*p));
        }
        for r in &f.rebounds {
            let _ = writeln!(
                out,
                "rebound,{},{},{},{}",
                prefix(&r.measure),
                fmt_float(r.p_min),
                fmt_float(r.value_at_pmin),
                fmt_float(r.value_at_end)
            );
        }
        for i in &f.intersections {
            let _ = writeln!(
                out,
                "intersection,{},{},{},",
                prefix("one_tangles"),
                fmt_float(i.p),
                i.predicted.map(fmt_float).unwrap_or_default()
            );
        }
        for (measure, p) in &f.sudden_death {
            let _ = writeln!(out, "sudden_death,{},{},,", prefix(measure), fmt_float(*p));
        }
    }
    out
}
