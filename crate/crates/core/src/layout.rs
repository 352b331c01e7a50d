//! Qubit labels and multi-qubit register layouts.
//!
//! The tripartite system uses the fixed ordering `A, B_I, C_I` (Alice's qubit
//! is the most significant bit of a basis index). During the Rindler
//! expansion a region-II qubit slots in directly after its region-I partner.

use std::fmt;

use crate::error::{Error, Result};

/// Label of one qubit slot in a register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QubitLabel {
    /// Alice.
    A,
    /// Alice's causally disconnected partner mode (only while expanded).
    AII,
    /// Bob's accessible (region-I) mode.
    BI,
    /// Bob's region-II partner mode.
    BII,
    /// Charlie's accessible (region-I) mode.
    CI,
    /// Charlie's region-II partner mode.
    CII,
}

impl QubitLabel {
    /// The standard tripartite ordering.
    pub const TRIPARTITE: [QubitLabel; 3] = [QubitLabel::A, QubitLabel::BI, QubitLabel::CI];

    /// The inaccessible partner label appended when this party accelerates.
    pub fn region_ii_partner(self) -> Option<QubitLabel> {
        match self {
            QubitLabel::A => Some(QubitLabel::AII),
            QubitLabel::BI => Some(QubitLabel::BII),
            QubitLabel::CI => Some(QubitLabel::CII),
            _ => None,
        }
    }

    pub fn is_region_ii(self) -> bool {
        matches!(self, QubitLabel::AII | QubitLabel::BII | QubitLabel::CII)
    }
}

impl fmt::Display for QubitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QubitLabel::A => "A",
            QubitLabel::AII => "A_II",
            QubitLabel::BI => "B_I",
            QubitLabel::BII => "B_II",
            QubitLabel::CI => "C_I",
            QubitLabel::CII => "C_II",
        };
        f.write_str(s)
    }
}

/// Ordered list of distinct qubit labels; every subsystem has dimension 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitLayout {
    labels: Vec<QubitLabel>,
}

impl QubitLayout {
    pub fn new(labels: Vec<QubitLabel>) -> Result<Self> {
        for (i, a) in labels.iter().enumerate() {
            if labels[i + 1..].contains(a) {
                return Err(Error::Label(format!("duplicate label {a} in layout")));
            }
        }
        Ok(Self { labels })
    }

    pub fn tripartite() -> Self {
        Self {
            labels: QubitLabel::TRIPARTITE.to_vec(),
        }
    }

    pub fn labels(&self) -> &[QubitLabel] {
        &self.labels
    }

    pub fn num_qubits(&self) -> usize {
        self.labels.len()
    }

    /// Total Hilbert-space dimension, `2^n`.
    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    /// Position of a label, or a label error naming the offender.
    pub fn position(&self, label: QubitLabel) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| Error::Label(format!("label {label} not in layout {self}")))
    }

    /// Bit mask selecting `label`'s position within a basis index (qubit 0 is
    /// the most significant bit).
    pub fn bit_mask(&self, label: QubitLabel) -> Result<usize> {
        let pos = self.position(label)?;
        Ok(1 << (self.labels.len() - 1 - pos))
    }

    pub fn contains(&self, label: QubitLabel) -> bool {
        self.labels.contains(&label)
    }

    /// Layout restricted to `keep`, preserving the original order.
    pub fn restricted(&self, keep: &[QubitLabel]) -> Result<Self> {
        for &l in keep {
            self.position(l)?;
        }
        let labels = self
            .labels
            .iter()
            .copied()
            .filter(|l| keep.contains(l))
            .collect();
        Ok(Self { labels })
    }
}

impl fmt::Display for QubitLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}
