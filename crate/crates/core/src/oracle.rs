//! Closed-form reference expressions for the amplitude-damped GHZ/W system,
//! used exclusively to cross-check the numerical pipeline.
//!
//! These expressions were transcribed term-by-term from their published form
//! and are deliberately NOT simplified or repaired: several of them are known
//! to disagree with brute-force negativity in the interior of the parameter
//! domain (see the sweep tool's discrepancy report, which quantifies the
//! gaps). They never feed the main pipeline.
//!
//! Where the published form is internally inconsistent, both a verbatim and a
//! corrected variant exist:
//!
//! * [`w_rindler_verbatim`] keeps a cross term that breaks Hermiticity;
//!   [`w_rindler`] restores the symmetric partner instead.
//! * [`ghz_pi_symmetric_verbatim`] keeps the published polynomial, which
//!   fails its own stated endpoint (it is nonzero at `p = 1`);
//!   [`ghz_pi_symmetric`] evaluates the documented combination
//!   `(1/3) * sum of squared one-tangles` from the published one-tangle
//!   expressions instead, which does satisfy the stated properties.
//!
//! Radicands in these formulas are nonnegative in exact arithmetic; values
//! that round below zero by at most [`tolerances::RADICAND_CLAMP`] are
//! clamped, anything more negative raises [`Error::Evaluation`].

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tolerances;

/// Mixing angle plus the three decay probabilities (Alice, Bob, Charlie).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleParams {
    pub r: f64,
    pub p: f64,
    pub m: f64,
    pub n: f64,
}

impl OracleParams {
    pub fn new(r: f64, p: f64, m: f64, n: f64) -> Result<Self> {
        if !r.is_finite()
            || !(-tolerances::R_DOMAIN_EPS..=FRAC_PI_4 + tolerances::R_DOMAIN_EPS).contains(&r)
        {
            return Err(Error::Domain {
                what: "acceleration parameter r",
                value: r,
                range: "[0, pi/4]",
            });
        }
        for (what, value) in [("p", p), ("m", m), ("n", n)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::Domain {
                    what: match what {
                        "p" => "decay probability p",
                        "m" => "decay probability m",
                        _ => "decay probability n",
                    },
                    value,
                    range: "[0, 1]",
                });
            }
        }
        Ok(Self {
            r: r.clamp(0.0, FRAC_PI_4),
            p,
            m,
            n,
        })
    }
}

/// Shorthand symbols shared by the W-state closed forms.
#[derive(Debug, Clone, Copy)]
pub struct AuxSymbols {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub tau: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub varepsilon: f64,
    pub zeta: f64,
    pub eta: f64,
}

impl AuxSymbols {
    pub fn from_params(params: &OracleParams) -> Self {
        let OracleParams { r, p, m, n } = *params;
        let (sr, cr) = r.sin_cos();
        let s2 = sr * sr;
        let c2 = cr * cr;
        let c4 = c2 * c2;
        Self {
            alpha: -1.0 + p,
            beta: -1.0 + m,
            gamma: -1.0 + n,
            tau: 2.0 + p * s2,
            delta: (cr * c2 + m * cr * s2).powi(2),
            epsilon: (cr * c2 + n * cr * s2).powi(2),
            varepsilon: (p * c4 + (m + n) * c2 * (1.0 + p * s2) + m * n * s2 * (2.0 + p * s2))
                .powi(2),
            zeta: c2 + m * s2,
            eta: c2 + n * s2,
        }
    }
}

/// Square root with the documented clamp on slightly negative radicands.
fn sqrt_clamped(radicand: f64, context: &'static str) -> Result<f64> {
    if radicand < -tolerances::RADICAND_CLAMP {
        return Err(Error::Evaluation { context, radicand });
    }
    Ok(radicand.max(0.0).sqrt())
}

fn real_matrix(dim: usize, entries: &[(usize, usize, f64)]) -> ComplexMatrix {
    let mut data = vec![Complex64::ZERO; dim * dim];
    for &(i, j, v) in entries {
        data[i * dim + j] += Complex64::new(v, 0.0);
    }
    ComplexMatrix::from_rows(dim, dim, data).unwrap()
}

fn check_r(r: f64) -> Result<f64> {
    if !r.is_finite()
        || !(-tolerances::R_DOMAIN_EPS..=FRAC_PI_4 + tolerances::R_DOMAIN_EPS).contains(&r)
    {
        return Err(Error::Domain {
            what: "acceleration parameter r",
            value: r,
            range: "[0, pi/4]",
        });
    }
    Ok(r.clamp(0.0, FRAC_PI_4))
}

/// GHZ state after the region-II trace, with Bob and Charlie at `r_b`, `r_c`.
pub fn ghz_rindler(r_b: f64, r_c: f64) -> Result<ComplexMatrix> {
    let r_b = check_r(r_b)?;
    let r_c = check_r(r_c)?;
    let (sb, cb) = r_b.sin_cos();
    let (sc, cc) = r_c.sin_cos();
    let (cb2, sb2, cc2, sc2) = (cb * cb, sb * sb, cc * cc, sc * sc);
    Ok(real_matrix(
        8,
        &[
            (0, 0, 0.5 * cb2 * cc2),
            (1, 1, 0.5 * cb2 * sc2),
            (2, 2, 0.5 * sb2 * cc2),
            (3, 3, 0.5 * sb2 * sc2),
            (0, 7, 0.5 * cb * cc),
            (7, 0, 0.5 * cb * cc),
            (7, 7, 0.5),
        ],
    ))
}

fn w_rindler_entries(r_b: f64, r_c: f64) -> Vec<(usize, usize, f64)> {
    let (sb, cb) = r_b.sin_cos();
    let (sc, cc) = r_c.sin_cos();
    let (cb2, sb2, cc2, sc2) = (cb * cb, sb * sb, cc * cc, sc * sc);
    let t = 1.0 / 3.0;
    vec![
        (1, 1, t * cb2),
        (2, 2, t * cc2),
        (3, 3, t * (sb2 + sc2)),
        (4, 4, t * cb2 * cc2),
        (5, 5, t * cb2 * sc2),
        (6, 6, t * cc2 * sb2),
        (7, 7, t * sb2 * sc2),
        (4, 1, t * cb2 * cc),
        (1, 4, t * cb2 * cc),
        (4, 2, t * cb * cc2),
        (2, 4, t * cb * cc2),
        (5, 3, t * cb * sc2),
        (3, 5, t * cb * sc2),
        (6, 3, t * cc * sb2),
        (3, 6, t * cc * sb2),
    ]
}

/// W state after the region-II trace, with the non-Hermitian cross term
/// replaced by its symmetric partner (the form the numerical pipeline
/// reproduces).
pub fn w_rindler(r_b: f64, r_c: f64) -> Result<ComplexMatrix> {
    let r_b = check_r(r_b)?;
    let r_c = check_r(r_c)?;
    let (_, cb) = r_b.sin_cos();
    let (_, cc) = r_c.sin_cos();
    let mut entries = w_rindler_entries(r_b, r_c);
    let t = 1.0 / 3.0;
    entries.push((2, 1, t * cb * cc));
    entries.push((1, 2, t * cb * cc));
    Ok(real_matrix(8, &entries))
}

/// W state after the region-II trace, keeping the published cross-term pair
/// `|010><001| + |001><011|` exactly as printed. Not Hermitian for `r > 0`;
/// the discrepancy report flags the mismatch against the pipeline.
pub fn w_rindler_verbatim(r_b: f64, r_c: f64) -> Result<ComplexMatrix> {
    let r_b = check_r(r_b)?;
    let r_c = check_r(r_c)?;
    let (_, cb) = r_b.sin_cos();
    let (_, cc) = r_c.sin_cos();
    let mut entries = w_rindler_entries(r_b, r_c);
    let t = 1.0 / 3.0;
    entries.push((2, 1, t * cb * cc));
    entries.push((1, 3, t * cb * cc));
    Ok(real_matrix(8, &entries))
}

/// GHZ state evolved under per-party amplitude damping, equal accelerations.
pub fn ghz_evolved_ad(params: &OracleParams) -> Result<ComplexMatrix> {
    let OracleParams { r, p, m, n } = *params;
    let (sr, cr) = r.sin_cos();
    let (s2, c2) = (sr * sr, cr * cr);
    let (s4, c4) = (s2 * s2, c2 * c2);
    let coherence = ((1.0 - p) * (1.0 - m) * (1.0 - n)).sqrt() * c2;
    Ok(real_matrix(
        8,
        &[
            (0, 0, 0.5 * (c4 + (n + m) * c2 * s2 + m * n * s4 + p * m * n)),
            (1, 1, 0.5 * ((1.0 - n) * (c2 * s2 + m * s4 + p * m))),
            (2, 2, 0.5 * ((1.0 - m) * (c2 * s2 + n * s4 + p * n))),
            (3, 3, 0.5 * ((1.0 - m) * (1.0 - n) * (s4 + p))),
            (4, 4, 0.5 * ((1.0 - p) * m * n)),
            (5, 5, 0.5 * ((1.0 - p) * (1.0 - n) * m)),
            (6, 6, 0.5 * ((1.0 - p) * (1.0 - m) * n)),
            (7, 7, 0.5 * ((1.0 - p) * (1.0 - m) * (1.0 - n))),
            (0, 7, 0.5 * coherence),
            (7, 0, 0.5 * coherence),
        ],
    ))
}

/// W state evolved under per-party amplitude damping, equal accelerations.
pub fn w_evolved_ad(params: &OracleParams) -> Result<ComplexMatrix> {
    let OracleParams { r, p, m, n } = *params;
    let (sr, cr) = r.sin_cos();
    let (s2, c2) = (sr * sr, cr * cr);
    let (s4, c4) = (s2 * s2, c2 * c2);
    let cos2r = (2.0 * r).cos();
    let cos4r = (4.0 * r).cos();
    let t = 1.0 / 3.0;

    let d000 = (m + n) * c2 * (1.0 + p * s2) + p * c4 + m * n * s2 * (2.0 + p * s2);
    let d001 = 0.125
        * (1.0 - n)
        * (4.0 + 8.0 * m + p + 3.0 * m * p - 4.0 * (-1.0 + m * (2.0 + p)) * cos2r
            + (-1.0 + m) * p * cos4r);
    let d010 = 0.125
        * (1.0 - m)
        * (4.0 + 8.0 * n + p + 3.0 * n * p - 4.0 * (-1.0 + n * (2.0 + p)) * cos2r
            + (-1.0 + n) * p * cos4r);
    let d011 = -0.5 * (-1.0 + m) * (-1.0 + n) * (-4.0 - p + p * cos2r) * s2;
    let d100 = -0.25
        * (-1.0 + p)
        * (-1.0 - m + (-1.0 + m) * cos2r)
        * (-1.0 - n + (-1.0 + n) * cos2r);
    let d101 = -0.5 * (-1.0 + n) * (-1.0 + p) * (-1.0 - m + (-1.0 + m) * cos2r) * s2;
    let d110 = -0.5 * (-1.0 + m) * (-1.0 + p) * (-1.0 - n + (-1.0 + n) * cos2r) * s2;
    let d111 = -(-1.0 + m) * (-1.0 + n) * (-1.0 + p) * s4;

    let coh_001_010 = (1.0 - m).sqrt() * (1.0 - n).sqrt() * c2;
    let coh_100_001 =
        sqrt_clamped((-1.0 + n) * (-1.0 + p), "w evolved coherence (100,001)")? * cr * (c2 + m * s2);
    let coh_100_010 =
        sqrt_clamped((-1.0 + m) * (-1.0 + p), "w evolved coherence (100,010)")? * cr * (c2 + n * s2);
    let coh_101_011 = sqrt_clamped(
        (-1.0 + m) * (-1.0 + n) * (-1.0 + n) * (-1.0 + p),
        "w evolved coherence (101,011)",
    )? * cr
        * s2;
    let coh_110_011 = sqrt_clamped(
        (-1.0 + m) * (-1.0 + m) * (-1.0 + n) * (-1.0 + p),
        "w evolved coherence (110,011)",
    )? * cr
        * s2;

    Ok(real_matrix(
        8,
        &[
            (0, 0, t * d000),
            (1, 1, t * d001),
            (2, 2, t * d010),
            (3, 3, t * d011),
            (4, 4, t * d100),
            (5, 5, t * d101),
            (6, 6, t * d110),
            (7, 7, t * d111),
            (1, 2, t * coh_001_010),
            (2, 1, t * coh_001_010),
            (4, 1, t * coh_100_001),
            (1, 4, t * coh_100_001),
            (4, 2, t * coh_100_010),
            (2, 4, t * coh_100_010),
            (5, 3, t * coh_101_011),
            (3, 5, t * coh_101_011),
            (6, 3, t * coh_110_011),
            (3, 6, t * coh_110_011),
        ],
    ))
}

/// Published closed forms for the GHZ one-tangles under amplitude damping,
/// in `A, B, C` order.
pub fn ghz_one_tangles_ad(params: &OracleParams) -> Result<[f64; 3]> {
    let OracleParams { r, p, m, n } = *params;
    let (sr, cr) = r.sin_cos();
    let (s2, c2) = (sr * sr, cr * cr);
    let (s4, c4) = (s2 * s2, c2 * c2);

    let n_a = 0.5
        * (-1.0 - m * n - p + m * p + n * p + c4 + 2.0 * c2 * s2 + m * s4 + n * s4 - m * n * s4
            + sqrt_clamped(
                (-1.0 + p) * (m * m * n * n * (-1.0 + p) - (-1.0 + m) * (-1.0 + n) * c4),
                "ghz one-tangle A, first radical",
            )?
            + sqrt_clamped(
                (-1.0 + m)
                    * (-1.0 + n)
                    * (-(-1.0 + p) * c4 + (-1.0 + m) * (-1.0 + n) * (p + s4) * (p + s4)),
                "ghz one-tangle A, second radical",
            )?);

    let n_b = 0.5
        * (sqrt_clamped(
            (-1.0 + m)
                * (-(-1.0 + p) * (-1.0 + n) * c4
                    + (-1.0 + m) * (c2 * s2 + n * (p + s4)) * (c2 * s2 + n * (p + s4))),
            "ghz one-tangle B, first radical",
        )? + sqrt_clamped(
            (-1.0 + n) * (-1.0 + p) * (m * m * (-1.0 + n) * (-1.0 + p) - (-1.0 + m) * c4),
            "ghz one-tangle B, second radical",
        )? + s4
            + m * n * s4
            - 1.0
            - m
            + m * n
            + m * p
            - n * p
            + c4
            + c2 * s2
            + m * c2 * s2
            - n * s4);

    let n_c = 0.5
        * (sqrt_clamped(
            (-1.0 + n)
                * (-(-1.0 + p) * (-1.0 + m) * c4
                    + (-1.0 + n) * (c2 * s2 + m * (p + s4)) * (c2 * s2 + m * (p + s4))),
            "ghz one-tangle C, first radical",
        )? + sqrt_clamped(
            (-1.0 + m) * (-1.0 + p) * (n * n * (-1.0 + m) * (-1.0 + p) - (-1.0 + n) * c4),
            "ghz one-tangle C, second radical",
        )? + s4
            + m * n * s4
            - 1.0
            - n
            + m * n
            - m * p
            + n * p
            + c4
            + c2 * s2
            + n * c2 * s2
            - m * s4);

    Ok([n_a, n_b, n_c])
}

/// Published closed forms for the W one-tangles under amplitude damping,
/// in `A, B, C` order.
pub fn w_one_tangles_ad(params: &OracleParams) -> Result<[f64; 3]> {
    let OracleParams { r, p, m, n } = *params;
    let aux = AuxSymbols::from_params(params);
    let AuxSymbols {
        alpha,
        beta,
        gamma,
        tau,
        delta,
        epsilon,
        varepsilon,
        zeta,
        eta,
    } = aux;
    let (sr, cr) = r.sin_cos();
    let (s2, c2) = (sr * sr, cr * cr);
    let (s4, c4) = (s2 * s2, c2 * c2);
    let cos2r = (2.0 * r).cos();

    let n_a = (1.0 / 6.0)
        * (-6.0 - beta * gamma * (-4.0 - p + p * cos2r) * s2 - 2.0 * alpha * zeta * eta
            + sqrt_clamped(
                beta * alpha
                    * (beta * alpha * (1.0 + n - gamma * cos2r).powi(2) * s4 + 4.0 * epsilon),
                "w one-tangle A, radical 1",
            )?
            + 2.0
                * sqrt_clamped(
                    beta * gamma * alpha * s4 * ((-2.0 + m + n) * c2 + beta * gamma * alpha * s4),
                    "w one-tangle A, radical 2",
                )?
            + 2.0
                * sqrt_clamped(
                    gamma
                        * (beta * c4
                            + beta * gamma * alpha * c2 * s4
                            + gamma * (c2 * (1.0 + p * s2) + m * tau * s2).powi(2)),
                    "w one-tangle A, radical 3",
                )?
            + 2.0
                * sqrt_clamped(
                    beta * (gamma * c4
                        + beta * gamma * alpha * c2 * s4
                        + beta * (c2 * (1.0 + p * s2) + n * tau * s2).powi(2)),
                    "w one-tangle A, radical 4",
                )?
            + 2.0
                * sqrt_clamped(
                    gamma * alpha * delta + beta * alpha * epsilon + varepsilon,
                    "w one-tangle A, radical 5",
                )?
            + sqrt_clamped(
                gamma * alpha * (gamma * alpha * (1.0 + m - beta * cos2r).powi(2) * s4 + 4.0 * delta),
                "w one-tangle A, radical 6",
            )?);

    let n_b = (1.0 / 6.0)
        * (-6.0 - alpha * gamma * (-1.0 - m + beta * cos2r) * s2
            - 2.0
                * gamma
                * sqrt_clamped(
                    beta * alpha * s4 * (c2 + alpha * beta * s4),
                    "w one-tangle B, radical 1",
                )?
            + 2.0
                * sqrt_clamped(
                    beta * gamma * c4
                        + alpha * beta * epsilon
                        + (p * c4 + (m + n) * c2 * (1.0 + p * s2) + m * n * tau * s2).powi(2),
                    "w one-tangle B, radical 2",
                )?
            + sqrt_clamped(
                beta * gamma
                    * (4.0 * c4
                        + 4.0 * alpha * beta * c2 * s4
                        + beta * gamma * (4.0 + p - p * cos2r).powi(2)),
                "w one-tangle B, radical 3",
            )?
            + 2.0
                * sqrt_clamped(
                    alpha * (alpha * zeta * zeta * eta * eta + gamma * delta),
                    "w one-tangle B, radical 4",
                )?
            + sqrt_clamped(
                alpha * beta
                    * (4.0 * beta * gamma * c2 * s4
                        + alpha * beta * (1.0 + n - gamma * cos2r).powi(2) * s4
                        + 4.0 * epsilon),
                "w one-tangle B, radical 5",
            )?
            + 2.0
                * sqrt_clamped(
                    gamma
                        * (alpha * beta * gamma * c2 * s4
                            + alpha * delta
                            + gamma * (c2 * (1.0 + p * s2) + m * tau * s2).powi(2)),
                    "w one-tangle B, radical 6",
                )?
            - 2.0 * beta * (c2 * (1.0 + p * s2) + n * s2 * (2.0 + p * s2)));

    let n_c = (1.0 / 6.0)
        * (-6.0 - alpha * beta * (-1.0 - n + gamma * cos2r) * s2
            - 2.0
                * beta
                * sqrt_clamped(
                    gamma * alpha * s4 * (c2 + alpha * gamma * s4),
                    "w one-tangle C, radical 1",
                )?
            + 2.0
                * sqrt_clamped(
                    beta * gamma * c4
                        + alpha * gamma * delta
                        + (p * c4 + (m + n) * c2 * (1.0 + p * s2) + m * n * tau * s2).powi(2),
                    "w one-tangle C, radical 2",
                )?
            + sqrt_clamped(
                beta * gamma
                    * (4.0 * c4
                        + 4.0 * alpha * gamma * c2 * s4
                        + beta * gamma * (4.0 + p - p * cos2r).powi(2)),
                "w one-tangle C, radical 3",
            )?
            + 2.0
                * sqrt_clamped(
                    alpha * (alpha * zeta * zeta * eta * eta + beta * delta),
                    "w one-tangle C, radical 4",
                )?
            + sqrt_clamped(
                alpha * gamma
                    * (4.0 * beta * gamma * c2 * s4
                        + alpha * gamma * (1.0 + m - beta * cos2r).powi(2) * s4
                        + 4.0 * delta),
                "w one-tangle C, radical 5",
            )?
            + 2.0
                * sqrt_clamped(
                    beta * (alpha * beta * gamma * c2 * s4
                        + alpha * epsilon
                        + beta * (c2 * (1.0 + p * s2) + n * tau * s2).powi(2)),
                    "w one-tangle C, radical 6",
                )?
            - 2.0 * gamma * (c2 * (1.0 + p * s2) + m * s2 * (2.0 + p * s2)));

    Ok([n_a, n_b, n_c])
}

/// Published closed forms for the W two-tangles under amplitude damping,
/// in `AB, AC, BC` order.
pub fn w_two_tangles_ad(params: &OracleParams) -> Result<[f64; 3]> {
    let OracleParams { r, p, m, n } = *params;
    let (sr, cr) = r.sin_cos();
    let (s2, c2) = (sr * sr, cr * cr);
    let (s4, c4) = (s2 * s2, c2 * c2);
    let cos2r = (2.0 * r).cos();
    let cos4r = (4.0 * r).cos();
    let beta = -1.0 + m;
    let gamma = -1.0 + n;

    let pair = |x: f64, ctx1: &'static str, ctx2: &'static str| -> Result<f64> {
        // Shared shape of the AB and AC expressions, with x the partner's
        // decay probability.
        Ok((1.0 / 6.0)
            * (-2.0 - 2.0 * x - 2.0 * p * cos2r + 2.0 * x * p * cos2r
                + 2.0
                    * sqrt_clamped(
                        (1.0 - x) * (1.0 - p) * (c2 + (1.0 - x) * (1.0 - p) * s4),
                        ctx1,
                    )?
                + sqrt_clamped(
                    4.0 * (1.0 - x) * (1.0 - p) * c2
                        + (1.0 + p + x * (3.0 + p) - (-1.0 + x) * (1.0 + p) * cos2r).powi(2),
                    ctx2,
                )?
                - 2.0 * x * p))
    };
    let n_ab = pair(m, "w two-tangle AB, radical 1", "w two-tangle AB, radical 2")?;
    let n_ac = pair(n, "w two-tangle AC, radical 1", "w two-tangle AC, radical 2")?;

    let n_bc = (1.0 / 12.0)
        * (4.0 * cos2r - 8.0 * (m + n) * cos2r + 12.0 * m * n * cos2r - cos4r
            + (m + n) * cos4r
            - m * n * cos4r
            + 2.0
                * sqrt_clamped(
                    beta * gamma * (4.0 * c4 + beta * gamma * (-5.0 + cos2r).powi(2) * s4),
                    "w two-tangle BC, radical 1",
                )?
            - 7.0
            + 3.0 * m
            + 3.0 * n
            - 11.0 * m * n
            + 4.0
                * sqrt_clamped(
                    beta * gamma * c4
                        + (c4 - 0.5 * (m + n) * c2 * (-3.0 + cos2r) + m * n * s2 * (2.0 + s2))
                            .powi(2),
                    "w two-tangle BC, radical 2",
                )?);

    Ok([n_ab, n_ac, n_bc])
}

/// Decay probability at which the three GHZ one-tangles cross when only
/// Alice is damped: `p = cos(2r) sin^2(r)`.
pub fn intersection_p(r: f64) -> Result<f64> {
    let r = check_r(r)?;
    Ok((2.0 * r).cos() * r.sin().powi(2))
}

/// Pi-tangle of the fully symmetric worst case (`m = n = p`, `r = pi/4`)
/// evaluated as the documented combination of the published one-tangles:
/// `(1/3) * sum N^2` (the GHZ two-tangles vanish identically).
pub fn ghz_pi_symmetric(p: f64) -> Result<f64> {
    let params = OracleParams::new(FRAC_PI_4, p, p, p)?;
    let tangles = ghz_one_tangles_ad(&params)?;
    Ok(tangles.iter().map(|t| t * t).sum::<f64>() / 3.0)
}

/// The published symmetric-case pi-tangle polynomial, kept verbatim. It
/// matches [`ghz_pi_symmetric`] at `p = 0` but fails the stated endpoint
/// behavior (value 45/192 instead of 0 at `p = 1`); the discrepancy report
/// quantifies the gap.
pub fn ghz_pi_symmetric_verbatim(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain {
            what: "decay probability p",
            value: p,
            range: "[0, 1]",
        });
    }
    let first = 1.0 + 4.0 * p
        - 2.0
            * sqrt_clamped(
                (p - 1.0).powi(3) * (-1.0 - 4.0 * p * p + 4.0 * p * p * p),
                "symmetric pi-tangle, radical 1",
            )?
        - (1.0 - p)
            * sqrt_clamped(
                5.0 - 2.0 * p + 9.0 * p * p + 8.0 * p * p * p + 16.0 * p * p * p * p,
                "symmetric pi-tangle, radical 2",
            )?;
    let second = 3.0 * p * p - 1.0 - 2.0 * p
        + sqrt_clamped(
            (p - 1.0).powi(3) * (-5.0 - 7.0 * p - 8.0 * p * p + 16.0 * p * p * p),
            "symmetric pi-tangle, radical 3",
        )?
        - 2.0
            * (p - 1.0)
            * sqrt_clamped(
                1.0 - p + 4.0 * p * p * p * p,
                "symmetric pi-tangle, radical 4",
            )?;
    Ok((2.0 * first * first + second * second - 5.0 * p * p) / 192.0)
}

/// Pi-tangle from the published GHZ one-tangles at arbitrary amplitude
/// damping parameters (the GHZ two-tangles vanish identically).
pub fn ghz_pi_ad(params: &OracleParams) -> Result<f64> {
    let tangles = ghz_one_tangles_ad(params)?;
    Ok(tangles.iter().map(|t| t * t).sum::<f64>() / 3.0)
}
