//! Acceptance suite: one test per criterion, each printing a PASS line on
//! success (visible with `--nocapture`) or panicking with a FAIL line.
//!
//! Three criteria (4, 5, 7) encode published qualitative claims that the
//! exact Kraus evolution provably does not exhibit; they are implemented
//! faithfully against the numerical pipeline and fail with the measured
//! values. The discrepancy report (`sweep discrepancy`) quantifies the same
//! gaps; see the README's "known divergences" section.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

use tritangle_core::num_complex::Complex64;
use tritangle_core::oracle::{self, OracleParams};
use tritangle_core::*;
use tritangle_sweep::config::{ChannelKind, Grid, Party, StateKind, SweepConfig};
use tritangle_sweep::discrepancy::discrepancy_report;
use tritangle_sweep::{records_to_csv, run_scenarios};

const PI_8: f64 = FRAC_PI_4 / 2.0;
const R_GRID: [f64; 4] = [0.0, PI_8, FRAC_PI_6, FRAC_PI_4];

fn ad(p: f64, m: f64, n: f64) -> NoiseAssignment {
    NoiseAssignment::new(
        amplitude_damping(p).unwrap(),
        amplitude_damping(m).unwrap(),
        amplitude_damping(n).unwrap(),
    )
}

fn depol_all(p: f64) -> NoiseAssignment {
    NoiseAssignment::new(
        depolarizing(p).unwrap(),
        depolarizing(p).unwrap(),
        depolarizing(p).unwrap(),
    )
}

fn evolved(initial: InitialState, r: f64, assignment: &NoiseAssignment) -> DensityMatrix {
    let config = TripartiteConfig::alice_inertial(initial, r, r).unwrap();
    apply_local(&rindler_density(&config).unwrap(), assignment).unwrap()
}

/// Probability triples for the full-grid criteria: a coarse cartesian grid
/// plus the all-parties diagonal and the single-party lines at finer steps.
fn probability_grid() -> Vec<[f64; 3]> {
    let coarse = [0.0, 0.3, 0.6, 0.9];
    let mut out = Vec::new();
    for &p in &coarse {
        for &m in &coarse {
            for &n in &coarse {
                out.push([p, m, n]);
            }
        }
    }
    for i in 1..=9 {
        let p = i as f64 / 10.0;
        out.push([p, p, p]);
        out.push([p, 0.0, 0.0]);
        out.push([0.0, 0.0, p]);
    }
    out.push([0.95, 0.95, 0.95]);
    out.push([0.99, 0.99, 0.99]);
    out.push([1.0, 1.0, 1.0]);
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.dedup();
    out
}

#[test]
fn acceptance_01_evolved_matrix_anchors() {
    // Anchors: inertial with Bob/Charlie noise off, and noise-free at the
    // acceleration grid.
    for p in [0.0, 0.3, 0.7, 1.0] {
        let numeric = evolved(InitialState::Ghz, 0.0, &ad(p, 0.0, 0.0));
        let closed = oracle::ghz_evolved_ad(&OracleParams::new(0.0, p, 0.0, 0.0).unwrap()).unwrap();
        let diff = numeric.matrix().max_abs_diff(&closed);
        assert!(
            diff <= 1e-12,
            "criterion 1: FAIL — anchor (r=0, p={p}) entrywise diff {diff:.3e}"
        );
    }
    for r in R_GRID {
        let numeric = evolved(InitialState::Ghz, r, &ad(0.0, 0.0, 0.0));
        let closed = oracle::ghz_evolved_ad(&OracleParams::new(r, 0.0, 0.0, 0.0).unwrap()).unwrap();
        let diff = numeric.matrix().max_abs_diff(&closed);
        assert!(
            diff <= 1e-12,
            "criterion 1: FAIL — anchor (r={r}, no noise) entrywise diff {diff:.3e}"
        );
    }
    // Full-grid comparison is emitted as a report, not asserted.
    let mut worst = 0.0f64;
    for r in R_GRID {
        for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
            for m in [0.0, 0.5, 1.0] {
                for n in [0.0, 0.5, 1.0] {
                    let numeric = evolved(InitialState::Ghz, r, &ad(p, m, n));
                    let closed =
                        oracle::ghz_evolved_ad(&OracleParams::new(r, p, m, n).unwrap()).unwrap();
                    worst = worst.max(numeric.matrix().max_abs_diff(&closed));
                }
            }
        }
    }
    println!(
        "criterion 1: PASS — anchors within 1e-12; full-grid report: max entrywise diff {worst:.3e}"
    );
}

#[test]
fn acceptance_02_linear_decay_law() {
    for i in 0..=10 {
        let p = i as f64 / 10.0;
        let rho = evolved(InitialState::Ghz, 0.0, &ad(p, 0.0, 0.0));
        let n = one_tangle(&rho, QubitLabel::A).unwrap();
        assert!(
            (n - (1.0 - p)).abs() <= 1e-10,
            "criterion 2: FAIL — one_tangle(A) = {n} at p = {p}, expected {}",
            1.0 - p
        );
    }
    println!("criterion 2: PASS — Alice-only damping gives one_tangle(A) = 1 - p within 1e-10");
}

#[test]
fn acceptance_03_ghz_two_tangles_vanish() {
    let mut worst = 0.0f64;
    for r in R_GRID {
        for probs in probability_grid() {
            let rho = evolved(InitialState::Ghz, r, &ad(probs[0], probs[1], probs[2]));
            let t = tangle_set(&rho).unwrap();
            for (i, &v) in t.two_tangles.iter().enumerate() {
                worst = worst.max(v.abs());
                assert!(
                    v.abs() <= 1e-10,
                    "criterion 3: FAIL — GHZ two-tangle {i} = {v:.3e} at r={r}, probs={probs:?}"
                );
            }
        }
        // Depolarizing on everyone keeps the marginals separable as well.
        for i in 0..=10 {
            let p = i as f64 / 10.0;
            let rho = evolved(InitialState::Ghz, r, &depol_all(p));
            let t = tangle_set(&rho).unwrap();
            for &v in &t.two_tangles {
                worst = worst.max(v.abs());
                assert!(v.abs() <= 1e-10, "criterion 3: FAIL at r={r}, depol p={p}");
            }
        }
    }
    println!("criterion 3: PASS — all GHZ two-tangles zero within 1e-10 (worst {worst:.3e})");
}

/// Criterion 4 asserts the published no-sudden-death claim for amplitude
/// damping: pi-tangle > 1e-8 whenever max(p,m,n) <= 0.99. The exact channel
/// violates it: with every party damped, all partially transposed cuts turn
/// positive semidefinite over a sizable region (e.g. r = pi/4, p=m=n = 0.6
/// gives pi = 0 exactly), and near the p -> 1 corner pi falls below any
/// fixed threshold while staying positive. Implemented faithfully; fails
/// with the measured witnesses. See the discrepancy report notes.
#[test]
fn acceptance_04_no_sudden_death_amplitude_damping() {
    let mut failures: Vec<String> = Vec::new();
    let mut checked = 0usize;
    for initial in [InitialState::Ghz, InitialState::W] {
        for r in R_GRID {
            for probs in probability_grid() {
                if probs.iter().cloned().fold(0.0, f64::max) > 0.99 {
                    continue;
                }
                checked += 1;
                let rho = evolved(initial, r, &ad(probs[0], probs[1], probs[2]));
                let pi = pi_tangle(&rho).unwrap();
                if pi <= 1e-8 {
                    failures.push(format!(
                        "{initial:?} r={r:.4} (p,m,n)=({},{},{}) pi={pi:.3e}",
                        probs[0], probs[1], probs[2]
                    ));
                }
            }
        }
    }
    if failures.is_empty() {
        println!("criterion 4: PASS — pi-tangle > 1e-8 at all {checked} grid points");
    } else {
        panic!(
            "criterion 4: FAIL — pi-tangle <= 1e-8 at {}/{} grid points with max(p,m,n) <= 0.99; \
             first witnesses: {}",
            failures.len(),
            checked,
            failures[..failures.len().min(4)].join("; ")
        );
    }
}

/// Criterion 5 asserts the published depolarizing rebound: one-tangles zero
/// at p = 0.75 and at least 1e-4 at p = 0.9, shrinking with acceleration.
/// The exact channel has no rebound: the coherence factor (1-4p/3)^3 does
/// revive beyond p = 0.75, but the depolarized diagonal dominates it, so
/// the one-tangles stay exactly zero from p ~ 0.34 onward for every r.
/// Implemented faithfully; the zero clause passes and the rebound clauses
/// fail with the measured values.
#[test]
fn acceptance_05_depolarizing_zero_and_rebound() {
    let at_zero_point = tangle_set(&evolved(InitialState::Ghz, 0.0, &depol_all(0.75))).unwrap();
    for (i, &v) in at_zero_point.one_tangles.iter().enumerate() {
        assert!(
            v.abs() <= 1e-10,
            "criterion 5: FAIL — one-tangle {i} = {v:.3e} at p = 0.75"
        );
    }
    println!("criterion 5 (zero clause): one-tangles at p = 0.75 all <= 1e-10");

    let rebound = tangle_set(&evolved(InitialState::Ghz, 0.0, &depol_all(0.9))).unwrap();
    let magnitudes: Vec<f64> = R_GRID
        .iter()
        .map(|&r| {
            tangle_set(&evolved(InitialState::Ghz, r, &depol_all(0.9)))
                .unwrap()
                .one_tangles[0]
        })
        .collect();
    println!(
        "criterion 5 (rebound clauses): one-tangles at (r=0, p=0.9) = {:?}; \
         Alice one-tangle at p=0.9 across r grid = {magnitudes:?}",
        rebound.one_tangles
    );

    for (i, &v) in rebound.one_tangles.iter().enumerate() {
        assert!(
            v >= 1e-4,
            "criterion 5: FAIL — one-tangle {i} = {v:.3e} at (r=0, p=0.9), required >= 1e-4; \
             the exact channel has no rebound (dead from p ~ 0.34; see discrepancy notes)"
        );
    }
    for w in magnitudes.windows(2) {
        assert!(
            w[1] < w[0],
            "criterion 5: FAIL — rebound magnitude not strictly decreasing in r: {magnitudes:?}"
        );
    }
    println!("criterion 5: PASS");
}

#[test]
fn acceptance_06_ckw_inequality() {
    let mut min_gap = f64::INFINITY;
    for initial in [InitialState::Ghz, InitialState::W] {
        for r in R_GRID {
            for probs in probability_grid() {
                let rho = evolved(initial, r, &ad(probs[0], probs[1], probs[2]));
                for party in QubitLabel::TRIPARTITE {
                    let gap = ckw_gap(&rho, party).unwrap();
                    min_gap = min_gap.min(gap);
                    assert!(
                        gap >= -1e-9,
                        "criterion 6: FAIL — ckw_gap({party}) = {gap:.3e} for {initial:?} \
                         at r={r}, probs={probs:?}"
                    );
                }
            }
            for i in 0..=10 {
                let p = i as f64 / 10.0;
                let rho = evolved(initial, r, &depol_all(p));
                for party in QubitLabel::TRIPARTITE {
                    let gap = ckw_gap(&rho, party).unwrap();
                    min_gap = min_gap.min(gap);
                    assert!(gap >= -1e-9, "criterion 6: FAIL at depol p={p}, r={r}");
                }
            }
        }
    }
    println!("criterion 6: PASS — monogamy gap >= -1e-9 everywhere (min {min_gap:.3e})");
}

/// Criterion 7 asserts the published persistence claim: all W one-tangles
/// above 0.01 after full Alice-side damping. Full damping is a constant
/// channel, so Alice's qubit factors out and her one-tangle is exactly zero
/// (and at r = pi/4 Bob's and Charlie's vanish too); only the published
/// closed forms keep all three positive. Implemented faithfully against the
/// pipeline; fails with both sides printed.
#[test]
fn acceptance_07_w_persistence_at_full_decay() {
    let mut lines = Vec::new();
    let mut witnesses = Vec::new();
    for r in [0.0, FRAC_PI_6, FRAC_PI_4] {
        let rho = evolved(InitialState::W, r, &ad(1.0, 0.0, 0.0));
        let numeric = tangle_set(&rho).unwrap().one_tangles;
        let closed =
            oracle::w_one_tangles_ad(&OracleParams::new(r, 1.0, 0.0, 0.0).unwrap()).unwrap();
        lines.push(format!(
            "r={r:.4}: numeric {numeric:?} closed-form {closed:?}"
        ));
        for (i, &v) in numeric.iter().enumerate() {
            if v <= 0.01 {
                witnesses.push(format!("r={r:.4} one-tangle {i} = {v:.3e}"));
            }
        }
    }
    println!("criterion 7: one-tangles at p = 1, Alice-only damping:");
    for l in &lines {
        println!("  {l}");
    }
    assert!(
        witnesses.is_empty(),
        "criterion 7: FAIL — one-tangles not all > 0.01 at p = 1: {}; full damping of Alice \
         is a constant channel, so her cut is exactly product (see discrepancy notes)",
        witnesses.join("; ")
    );
    println!("criterion 7: PASS");
}

#[test]
fn acceptance_08_pair_tangle_independence() {
    for m_and_p in [0.0, 0.4] {
        for r in [0.0, FRAC_PI_6, FRAC_PI_4] {
            let mut reference: Option<f64> = None;
            for i in 0..=10 {
                let n = i as f64 / 10.0;
                let rho = evolved(InitialState::W, r, &ad(m_and_p, m_and_p, n));
                let t = two_tangle(&rho, (QubitLabel::A, QubitLabel::BI)).unwrap();
                match reference {
                    None => reference = Some(t),
                    Some(t0) => assert!(
                        (t - t0).abs() < 1e-10,
                        "criterion 8: FAIL — N_AB moved by {:.3e} as n swept (m=p={m_and_p}, r={r})",
                        (t - t0).abs()
                    ),
                }
            }
        }
    }
    println!("criterion 8: PASS — W pair tangle N_AB is independent of Charlie's noise");
}

#[test]
fn acceptance_09_known_value_battery() {
    // Bell pair negativity.
    let layout = QubitLayout::new(vec![QubitLabel::A, QubitLabel::BI]).unwrap();
    let bell = ComplexMatrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 0) | (0, 3) | (3, 0) | (3, 3) => Complex64::new(0.5, 0.0),
        _ => Complex64::ZERO,
    });
    let bell = DensityMatrix::new(bell, layout).unwrap();
    let n_bell = negativity(&bell, &[QubitLabel::A]).unwrap();
    assert!(
        (n_bell - 1.0).abs() <= 1e-10,
        "criterion 9: FAIL — Bell negativity {n_bell}"
    );

    let w = DensityMatrix::from_pure(&w_state());
    let pair = two_tangle(&w, (QubitLabel::A, QubitLabel::BI)).unwrap();
    let expected_pair = (5.0f64.sqrt() - 1.0) / 3.0;
    assert!(
        (pair - expected_pair).abs() <= 1e-10,
        "criterion 9: FAIL — W pair tangle {pair}"
    );

    let one = one_tangle(&w, QubitLabel::A).unwrap();
    let expected_one = 2.0 * 2.0f64.sqrt() / 3.0;
    assert!(
        (one - expected_one).abs() <= 1e-10,
        "criterion 9: FAIL — W one-tangle {one}"
    );

    let w_pi = pi_tangle(&w).unwrap();
    let expected_w_pi = (4.0 * 5.0f64.sqrt() - 4.0) / 9.0;
    assert!(
        (w_pi - expected_w_pi).abs() <= 1e-10,
        "criterion 9: FAIL — W pi-tangle {w_pi}"
    );

    let ghz_pi = pi_tangle(&DensityMatrix::from_pure(&ghz_state())).unwrap();
    assert!(
        (ghz_pi - 1.0).abs() <= 1e-10,
        "criterion 9: FAIL — GHZ pi-tangle {ghz_pi}"
    );
    println!("criterion 9: PASS — Bell/W/GHZ reference values reproduced within 1e-10");
}

#[test]
fn acceptance_10_oracle_self_consistency() {
    let combo = {
        let t = oracle::ghz_one_tangles_ad(&OracleParams::new(FRAC_PI_4, 0.0, 0.0, 0.0).unwrap())
            .unwrap();
        t.iter().map(|x| x * x).sum::<f64>() / 3.0
    };
    let closed = oracle::ghz_pi_symmetric(0.0).unwrap();
    assert!(
        (closed - combo).abs() <= 1e-10,
        "criterion 10: FAIL — pi(0) = {closed} vs one-tangle combination {combo}"
    );

    let mut prev = f64::INFINITY;
    for i in 0..=100 {
        let p = i as f64 / 100.0;
        let v = oracle::ghz_pi_symmetric(p).unwrap();
        assert!(
            v <= prev + 1e-12,
            "criterion 10: FAIL — symmetric pi-tangle rises at p = {p}: {v} > {prev}"
        );
        prev = v;
    }
    let at_one = oracle::ghz_pi_symmetric(1.0).unwrap();
    assert!(
        at_one.abs() <= 1e-10,
        "criterion 10: FAIL — symmetric pi-tangle at p = 1 is {at_one}"
    );
    println!("criterion 10: PASS — symmetric pi-tangle consistent, monotone, zero at p = 1");
}

#[test]
fn acceptance_11_discrepancy_ledger() {
    let mut config =
        SweepConfig::defaults(StateKind::Ghz, ChannelKind::AmplitudeDamping, &[Party::A]);
    config.r_values = vec![0.0];
    config.p_grid = Grid {
        start: 0.0,
        stop: 1.0,
        step: 0.25,
    };
    let report = discrepancy_report(&config).unwrap();
    let find = |label: &str| {
        report
            .anchors
            .iter()
            .find(|a| a.label == label)
            .unwrap_or_else(|| panic!("criterion 11: FAIL — missing anchor {label}"))
    };

    let half = find("ghz-alice-half");
    assert!(
        (half.numeric - 0.50000).abs() <= 1e-4 && (half.oracle - 0.53664).abs() <= 1e-4,
        "criterion 11: FAIL — alice-half anchor numeric {} oracle {}",
        half.numeric,
        half.oracle
    );

    let max_acc = find("ghz-max-acceleration");
    assert!(
        (max_acc.numeric - 0.39039).abs() <= 1e-4 && (max_acc.oracle - 0.40451).abs() <= 1e-4,
        "criterion 11: FAIL — max-acceleration anchor numeric {} oracle {}",
        max_acc.numeric,
        max_acc.oracle
    );

    let origin = find("ghz-origin");
    assert!(
        origin.diff < 1e-10,
        "criterion 11: FAIL — origin anchor should agree, diff {}",
        origin.diff
    );
    println!("criterion 11: PASS — discrepancy report reproduces both pinned divergences");
}

#[test]
fn acceptance_12_bob_charlie_symmetry() {
    for r in R_GRID {
        for shared in [0.0, 0.25, 0.5, 0.75, 1.0] {
            for p in [0.0, 0.5, 1.0] {
                let rho_ad = evolved(InitialState::Ghz, r, &ad(p, shared, shared));
                let t = tangle_set(&rho_ad).unwrap();
                assert!(
                    (t.one_tangles[1] - t.one_tangles[2]).abs() <= 1e-10,
                    "criterion 12: FAIL — AD asymmetry {:.3e} at r={r}, m=n={shared}, p={p}",
                    (t.one_tangles[1] - t.one_tangles[2]).abs()
                );
                let rho_w = evolved(InitialState::W, r, &ad(p, shared, shared));
                let t = tangle_set(&rho_w).unwrap();
                assert!(
                    (t.one_tangles[1] - t.one_tangles[2]).abs() <= 1e-10,
                    "criterion 12: FAIL — W asymmetry at r={r}, m=n={shared}, p={p}"
                );
            }
            let rho_dp = evolved(
                InitialState::Ghz,
                r,
                &NoiseAssignment::new(
                    identity_channel(),
                    depolarizing(shared).unwrap(),
                    depolarizing(shared).unwrap(),
                ),
            );
            let t = tangle_set(&rho_dp).unwrap();
            assert!(
                (t.one_tangles[1] - t.one_tangles[2]).abs() <= 1e-10,
                "criterion 12: FAIL — depolarizing asymmetry at r={r}, m=n={shared}"
            );
        }
    }
    println!("criterion 12: PASS — one_tangle(B) = one_tangle(C) within 1e-10 when m=n, rb=rc");
}

#[test]
fn acceptance_13_preset_determinism() {
    for preset_name in ["fig1-row1", "fig3"] {
        let scenarios = tritangle_sweep::preset(preset_name).unwrap();
        let first = records_to_csv(&run_scenarios(&scenarios).unwrap());
        let second = records_to_csv(&run_scenarios(&scenarios).unwrap());
        assert!(
            first == second,
            "criterion 13: FAIL — preset {preset_name} not byte-identical across runs"
        );
        assert!(first.len() > 1000, "preset {preset_name} produced no data");
    }
    println!("criterion 13: PASS — preset reruns are byte-identical");
}
