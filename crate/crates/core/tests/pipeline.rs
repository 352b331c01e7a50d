//! Cross-module checks: the numerical pipeline against the closed-form
//! reference matrices, and ground-truth behavior the sweep layer relies on.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};
use tritangle_core::oracle::{self, OracleParams};
use tritangle_core::*;

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

#[test]
fn rindler_matrices_match_closed_forms() {
    for r in R_GRID {
        let ghz = rindler_density(&TripartiteConfig::alice_inertial(InitialState::Ghz, r, r).unwrap())
            .unwrap();
        assert!(
            ghz.matrix().max_abs_diff(&oracle::ghz_rindler(r, r).unwrap()) < 1e-12,
            "GHZ r = {r}"
        );
        let w = rindler_density(&TripartiteConfig::alice_inertial(InitialState::W, r, r).unwrap())
            .unwrap();
        assert!(
            w.matrix().max_abs_diff(&oracle::w_rindler(r, r).unwrap()) < 1e-12,
            "W r = {r}"
        );
    }
}

#[test]
fn unequal_accelerations_match_closed_form_rindler() {
    let (r_b, r_c) = (FRAC_PI_6, 0.2);
    let ghz =
        rindler_density(&TripartiteConfig::alice_inertial(InitialState::Ghz, r_b, r_c).unwrap())
            .unwrap();
    assert!(ghz.matrix().max_abs_diff(&oracle::ghz_rindler(r_b, r_c).unwrap()) < 1e-12);

    // Charlie-only acceleration goes through a 4-qubit intermediate state.
    let only_c =
        rindler_density(&TripartiteConfig::alice_inertial(InitialState::Ghz, 0.0, 0.3).unwrap())
            .unwrap();
    assert!(only_c.matrix().max_abs_diff(&oracle::ghz_rindler(0.0, 0.3).unwrap()) < 1e-12);
}

#[test]
fn evolved_states_match_closed_forms_on_a_grid() {
    let probs = [0.0, 0.25, 0.5, 0.75, 1.0];
    for r in R_GRID {
        for p in probs {
            for m in probs {
                for n in probs {
                    let params = OracleParams::new(r, p, m, n).unwrap();
                    let g = evolved(InitialState::Ghz, r, &ad(p, m, n));
                    assert!(
                        g.matrix().max_abs_diff(&oracle::ghz_evolved_ad(&params).unwrap()) < 1e-12,
                        "GHZ ({r},{p},{m},{n})"
                    );
                    let w = evolved(InitialState::W, r, &ad(p, m, n));
                    assert!(
                        w.matrix().max_abs_diff(&oracle::w_evolved_ad(&params).unwrap()) < 1e-12,
                        "W ({r},{p},{m},{n})"
                    );
                }
            }
        }
    }
}

#[test]
fn evolved_states_stay_valid() {
    for r in R_GRID {
        for p in [0.0, 0.3, 0.9] {
            for initial in [InitialState::Ghz, InitialState::W] {
                let rho_ad = evolved(initial, r, &ad(p, p / 2.0, p));
                assert!(rho_ad.validate().unwrap().passes());
                let rho_dp = evolved(initial, r, &depol_all(p));
                assert!(rho_dp.validate().unwrap().passes());
            }
        }
    }
    // The closed-form evolved matrix is itself a valid density matrix.
    let m = oracle::ghz_evolved_ad(&OracleParams::new(FRAC_PI_6, 0.3, 0.3, 0.3).unwrap()).unwrap();
    let rho = DensityMatrix::new(m, QubitLayout::tripartite()).unwrap();
    assert!(rho.validate().unwrap().passes());
}

#[test]
fn one_tangles_cross_exactly_at_the_predicted_point() {
    // With Alice-only damping the three one-tangles coincide at
    // p = cos(2r) sin^2(r); at r = pi/6 that is 1/8, and the crossing is
    // exact rather than approximate.
    let p_star = oracle::intersection_p(FRAC_PI_6).unwrap();
    assert!((p_star - 0.125).abs() < 1e-15);
    let rho = evolved(InitialState::Ghz, FRAC_PI_6, &ad(p_star, 0.0, 0.0));
    let t = tangle_set(&rho).unwrap();
    assert!((t.one_tangles[0] - t.one_tangles[1]).abs() < 1e-12);
    assert!((t.one_tangles[1] - t.one_tangles[2]).abs() < 1e-12);

    // Just off the crossing the Alice curve is on opposite sides.
    let lo = tangle_set(&evolved(InitialState::Ghz, FRAC_PI_6, &ad(0.12, 0.0, 0.0))).unwrap();
    assert!(lo.one_tangles[0] > lo.one_tangles[1]);
    let hi = tangle_set(&evolved(InitialState::Ghz, FRAC_PI_6, &ad(0.13, 0.0, 0.0))).unwrap();
    assert!(hi.one_tangles[0] < hi.one_tangles[1]);
}

#[test]
fn single_party_channel_commutes_with_tracing_the_others() {
    let rho = rindler_density(
        &TripartiteConfig::alice_inertial(InitialState::W, FRAC_PI_6, FRAC_PI_6).unwrap(),
    )
    .unwrap();
    let assignment = NoiseAssignment::new(
        amplitude_damping(0.4).unwrap(),
        identity_channel(),
        identity_channel(),
    );
    let evolve_then_trace = apply_local(&rho, &assignment)
        .unwrap()
        .partial_trace(&[QubitLabel::A])
        .unwrap();

    let reduced = rho.partial_trace(&[QubitLabel::A]).unwrap();
    let ch = amplitude_damping(0.4).unwrap();
    let mut acc = ComplexMatrix::zeros(2, 2);
    for op in ch.operators() {
        acc = acc
            .add(&op.mul(reduced.matrix()).unwrap().mul(&op.adjoint()).unwrap())
            .unwrap();
    }
    assert!(evolve_then_trace.matrix().max_abs_diff(&acc) < 1e-12);
}

#[test]
fn w_pair_tangle_ignores_the_third_party_channel() {
    let mut reference = None;
    for n in [0.0, 0.2, 0.5, 0.8, 1.0] {
        let rho = evolved(InitialState::W, FRAC_PI_6, &ad(0.0, 0.0, n));
        let t = two_tangle(&rho, (QubitLabel::A, QubitLabel::BI)).unwrap();
        match reference {
            None => reference = Some(t),
            Some(r0) => assert!((t - r0).abs() < 1e-10, "n = {n}"),
        }
    }
}

#[test]
fn ghz_one_tangle_is_non_increasing_in_acceleration() {
    let mut prev = f64::INFINITY;
    for i in 0..=8 {
        let r = FRAC_PI_4 * i as f64 / 8.0;
        let rho =
            rindler_density(&TripartiteConfig::alice_inertial(InitialState::Ghz, r, r).unwrap())
                .unwrap();
        let v = one_tangle(&rho, QubitLabel::A).unwrap();
        assert!(v <= prev + 1e-12);
        prev = v;
    }
}

/// Ground truth the sweep layer's qualitative detectors are tested against:
/// under triple depolarizing the exact pipeline loses all one-tangles near
/// p = 0.34 and shows no revival afterwards, even though the coherence
/// factor (1 - 4p/3)^3 itself changes sign at p = 0.75. The published
/// claims of a p = 0.75 zero with a rebound come from a block spectrum
/// shortcut that drops one diagonal corner; the exact 2x2 block
/// [[d1, c],[c, d2]] is singular-free once d1*d2 > c^2.
#[test]
fn triple_depolarizing_ground_truth() {
    let before = tangle_set(&evolved(InitialState::Ghz, 0.0, &depol_all(0.33))).unwrap();
    assert!(before.one_tangles[0] > 1e-3);
    for p in [0.34, 0.5, 0.75, 0.9, 1.0] {
        let t = tangle_set(&evolved(InitialState::Ghz, 0.0, &depol_all(p))).unwrap();
        assert_eq!(t.one_tangles, [0.0; 3], "p = {p}");
        assert_eq!(t.pi_tangle, 0.0, "p = {p}");
    }
}

/// Companion ground truth for amplitude damping: with every party damped the
/// pi-tangle does reach exactly zero well before p = 1 once the acceleration
/// is large (the partially transposed blocks become positive semidefinite).
#[test]
fn triple_damping_ground_truth_at_max_acceleration() {
    let alive = tangle_set(&evolved(InitialState::Ghz, FRAC_PI_4, &ad(0.5, 0.5, 0.5))).unwrap();
    assert!(alive.pi_tangle > 1e-4);
    let dead = tangle_set(&evolved(InitialState::Ghz, FRAC_PI_4, &ad(0.6, 0.6, 0.6))).unwrap();
    assert_eq!(dead.pi_tangle, 0.0);
    // At zero acceleration the same noise level keeps the state entangled.
    let inertial = tangle_set(&evolved(InitialState::Ghz, 0.0, &ad(0.6, 0.6, 0.6))).unwrap();
    assert!(inertial.pi_tangle > 1e-4);
}
