//! Pure states over labeled qubit registers.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::layout::QubitLayout;

/// A pure state: amplitudes in the computational basis of its layout.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
    layout: QubitLayout,
}

impl StateVector {
    pub fn new(amps: Vec<Complex64>, layout: QubitLayout) -> Result<Self> {
        if amps.len() != layout.dim() {
            return Err(Error::Shape(format!(
                "state has {} amplitudes but layout {} implies {}",
                amps.len(),
                layout,
                layout.dim()
            )));
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Shape("state amplitudes must be finite".into()));
        }
        Ok(Self { amps, layout })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn layout(&self) -> &QubitLayout {
        &self.layout
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}
