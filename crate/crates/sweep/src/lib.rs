//! Parameter-sweep driver for the tripartite entanglement pipeline.
//!
//! Expands a declarative scenario (initial state, noise channel, noisy
//! parties, acceleration values, probability grid) into independent grid
//! points, evaluates the requested entanglement measures at each point
//! (optionally against the closed-form reference expressions), and emits
//! deterministic CSV plus qualitative feature and discrepancy reports.
//!
//! Grid evaluation is data-parallel via rayon under the default `parallel`
//! feature; building with `--no-default-features` swaps in a sequential
//! loop with byte-identical output.

pub mod config;
pub mod discrepancy;
pub mod emit;
pub mod error;
pub mod features;
pub mod run;

pub use config::{parse_config, parse_config_str, preset, preset_names, SweepConfig};
pub use discrepancy::{discrepancy_report, DiscrepancyReport};
pub use emit::{emit_csv, read_records, records_to_csv};
pub use error::SweepError;
pub use features::{detect_features, ScenarioFeatures};
pub use run::{run_scenarios, run_sweep, MeasureRecord};
