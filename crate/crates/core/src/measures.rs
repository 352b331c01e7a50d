//! Negativity-based entanglement measures on two- and three-qubit states.
//!
//! The convention is `N = ||rho^T_alpha||_1 - 1` (no factor 1/2 anywhere).

use crate::density::DensityMatrix;
use crate::eigen::trace_norm;
use crate::error::{Error, Result};
use crate::layout::QubitLabel;
use crate::tolerances;

/// The three one-tangles, three two-tangles, per-party residual
/// entanglement and their average, for a tripartite state.
///
/// Residuals are clamped at `-`[`tolerances::RESIDUAL_CLAMP`] before the
/// mean, so `pi_tangle` is exactly the mean of `residuals`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangleSet {
    /// `N_{A(BC)}, N_{B(AC)}, N_{C(AB)}`.
    pub one_tangles: [f64; 3],
    /// `N_{AB}, N_{AC}, N_{BC}`.
    pub two_tangles: [f64; 3],
    /// Residual entanglement per party, in `A, B, C` order.
    pub residuals: [f64; 3],
    /// Average residual entanglement.
    pub pi_tangle: f64,
}

fn clamp_negativity(n: f64) -> f64 {
    if n.abs() < tolerances::NEGATIVITY_CLAMP {
        0.0
    } else {
        n
    }
}

/// Negativity across the cut `side_one | rest`: trace norm of the partial
/// transpose over `side_one`, minus one, clamped to zero near zero.
pub fn negativity(rho: &DensityMatrix, side_one: &[QubitLabel]) -> Result<f64> {
    if side_one.is_empty() || side_one.len() >= rho.layout().num_qubits() {
        return Err(Error::Label(
            "bipartition side must be a proper nonempty subset of the layout".into(),
        ));
    }
    let pt = rho.partial_transpose_multi(side_one)?;
    let tn = trace_norm(&pt)?;
    Ok(clamp_negativity(tn - 1.0))
}

fn require_tripartite(rho: &DensityMatrix) -> Result<()> {
    if rho.layout().labels() != QubitLabel::TRIPARTITE {
        return Err(Error::Label(format!(
            "expected tripartite layout [A,B_I,C_I], got {}",
            rho.layout()
        )));
    }
    Ok(())
}

/// Negativity of one party against the other two.
pub fn one_tangle(rho: &DensityMatrix, party: QubitLabel) -> Result<f64> {
    require_tripartite(rho)?;
    negativity(rho, &[party])
}

/// Negativity of the reduced state of a pair, transposing over the first
/// listed party. The reduction keeps the surviving parties' original order.
pub fn two_tangle(rho: &DensityMatrix, pair: (QubitLabel, QubitLabel)) -> Result<f64> {
    require_tripartite(rho)?;
    if pair.0 == pair.1 {
        return Err(Error::Label("two-tangle needs two distinct parties".into()));
    }
    let reduced = rho.partial_trace(&[pair.0, pair.1])?;
    negativity(&reduced, &[pair.0])
}

/// Monogamy gap `N_{X(YZ)}^2 - N_{XY}^2 - N_{XZ}^2` for one party, unclamped;
/// callers assert it stays above `-1e-9`.
pub fn ckw_gap(rho: &DensityMatrix, party: QubitLabel) -> Result<f64> {
    require_tripartite(rho)?;
    let others: Vec<QubitLabel> = QubitLabel::TRIPARTITE
        .iter()
        .copied()
        .filter(|&l| l != party)
        .collect();
    let one = one_tangle(rho, party)?;
    let t1 = two_tangle(rho, (party, others[0]))?;
    let t2 = two_tangle(rho, (party, others[1]))?;
    Ok(one * one - t1 * t1 - t2 * t2)
}

/// Computes every tangle of a tripartite state in one pass.
pub fn tangle_set(rho: &DensityMatrix) -> Result<TangleSet> {
    require_tripartite(rho)?;
    let [a, b, c] = QubitLabel::TRIPARTITE;
    let one_tangles = [one_tangle(rho, a)?, one_tangle(rho, b)?, one_tangle(rho, c)?];
    let two_tangles = [
        two_tangle(rho, (a, b))?,
        two_tangle(rho, (a, c))?,
        two_tangle(rho, (b, c))?,
    ];
    // Residual for party X uses the two pair-tangles involving X.
    let pair_sq = |x: usize, y: usize| two_tangles[pair_index(x, y)].powi(2);
    let mut residuals = [0.0f64; 3];
    for x in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&y| y != x).collect();
        let raw = one_tangles[x].powi(2) - pair_sq(x, others[0]) - pair_sq(x, others[1]);
        residuals[x] = if raw < 0.0 && raw > -tolerances::RESIDUAL_CLAMP {
            0.0
        } else {
            raw
        };
    }
    let pi_tangle = residuals.iter().sum::<f64>() / 3.0;
    Ok(TangleSet {
        one_tangles,
        two_tangles,
        residuals,
        pi_tangle,
    })
}

fn pair_index(x: usize, y: usize) -> usize {
    match (x.min(y), x.max(y)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!("distinct indices in 0..3"),
    }
}

/// Average residual entanglement of a tripartite state.
pub fn pi_tangle(rho: &DensityMatrix) -> Result<f64> {
    Ok(tangle_set(rho)?.pi_tangle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{amplitude_damping, apply_local, identity_channel, NoiseAssignment};
    use crate::layout::QubitLayout;
    use crate::matrix::{kron, ComplexMatrix};
    use crate::rindler::{ghz_state, w_state};
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell_pair() -> DensityMatrix {
        let layout = QubitLayout::new(vec![QubitLabel::A, QubitLabel::BI]).unwrap();
        let m = ComplexMatrix::from_fn(4, 4, |i, j| match (i, j) {
            (0, 0) | (0, 3) | (3, 0) | (3, 3) => c(0.5),
            _ => Complex64::ZERO,
        });
        DensityMatrix::new(m, layout).unwrap()
    }

    #[test]
    fn bell_negativity_is_one() {
        let n = negativity(&bell_pair(), &[QubitLabel::A]).unwrap();
        assert!((n - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_negativity_is_zero() {
        let layout = QubitLayout::new(vec![QubitLabel::A, QubitLabel::BI]).unwrap();
        let rho = DensityMatrix::new(
            kron(&ComplexMatrix::diag(&[0.3, 0.7]), &ComplexMatrix::diag(&[0.9, 0.1])),
            layout,
        )
        .unwrap();
        assert_eq!(negativity(&rho, &[QubitLabel::BI]).unwrap(), 0.0);
    }

    #[test]
    fn w_marginal_negativity() {
        let rho = DensityMatrix::from_pure(&w_state());
        let n = two_tangle(&rho, (QubitLabel::A, QubitLabel::BI)).unwrap();
        let expected = (5.0f64.sqrt() - 1.0) / 3.0;
        assert!((n - expected).abs() < 1e-12);
    }

    #[test]
    fn pure_state_one_tangles() {
        let ghz = DensityMatrix::from_pure(&ghz_state());
        assert!((one_tangle(&ghz, QubitLabel::A).unwrap() - 1.0).abs() < 1e-12);

        let w = DensityMatrix::from_pure(&w_state());
        let expected = 2.0 * 2.0f64.sqrt() / 3.0;
        assert!((one_tangle(&w, QubitLabel::A).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn alice_damped_ghz_decays_linearly() {
        for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let assignment = NoiseAssignment::new(
                amplitude_damping(p).unwrap(),
                identity_channel(),
                identity_channel(),
            );
            let rho = apply_local(&DensityMatrix::from_pure(&ghz_state()), &assignment).unwrap();
            let n = one_tangle(&rho, QubitLabel::A).unwrap();
            assert!((n - (1.0 - p)).abs() < 1e-12, "p = {p}");
        }
    }

    #[test]
    fn ghz_two_tangles_vanish() {
        let rho = DensityMatrix::from_pure(&ghz_state());
        for pair in [
            (QubitLabel::A, QubitLabel::BI),
            (QubitLabel::A, QubitLabel::CI),
            (QubitLabel::BI, QubitLabel::CI),
        ] {
            assert_eq!(two_tangle(&rho, pair).unwrap(), 0.0);
        }
    }

    #[test]
    fn pi_tangle_reference_values() {
        let ghz = tangle_set(&DensityMatrix::from_pure(&ghz_state())).unwrap();
        assert!((ghz.pi_tangle - 1.0).abs() < 1e-12);

        let w = tangle_set(&DensityMatrix::from_pure(&w_state())).unwrap();
        let expected = (4.0 * 5.0f64.sqrt() - 4.0) / 9.0;
        assert!((w.pi_tangle - expected).abs() < 1e-12);
        // pi is exactly the mean of the stored residuals.
        let mean = w.residuals.iter().sum::<f64>() / 3.0;
        assert_eq!(w.pi_tangle, mean);
    }

    #[test]
    fn fully_mixed_state_has_no_entanglement() {
        let rho = DensityMatrix::new(
            ComplexMatrix::identity(8).scale(c(1.0 / 8.0)),
            QubitLayout::tripartite(),
        )
        .unwrap();
        let t = tangle_set(&rho).unwrap();
        assert_eq!(t.one_tangles, [0.0; 3]);
        assert_eq!(t.two_tangles, [0.0; 3]);
        assert_eq!(t.pi_tangle, 0.0);
    }

    #[test]
    fn ckw_gap_values() {
        let w = DensityMatrix::from_pure(&w_state());
        let gap = ckw_gap(&w, QubitLabel::A).unwrap();
        let expected = 8.0 / 9.0 - 2.0 * (6.0 - 2.0 * 5.0f64.sqrt()) / 9.0;
        assert!((gap - expected).abs() < 1e-12);

        let ghz = DensityMatrix::from_pure(&ghz_state());
        let gap = ckw_gap(&ghz, QubitLabel::A).unwrap();
        assert!((gap - 1.0).abs() < 1e-12);
    }
}
