//! `sweep` — parameter sweeps, feature detection, and discrepancy reports
//! for tripartite entanglement under acceleration and local noise.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use tritangle_sweep::config::{self, Normalization, SweepConfig};
use tritangle_sweep::emit;
use tritangle_sweep::error::{Result, SweepError};
use tritangle_sweep::{detect_features, discrepancy, features, run};

#[derive(Parser)]
#[command(
    name = "sweep",
    about = "Tripartite entanglement sweeps for accelerated observers in noisy environments",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a parameter sweep and write records.csv.
    Run(RunArgs),
    /// Detect qualitative features (zero crossings, rebounds, intersections,
    /// sudden death) in a records CSV.
    Features(FeaturesArgs),
    /// Quantify numeric-vs-closed-form gaps for a scenario.
    Discrepancy(DiscrepancyArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Scenario config (JSON). Optional when --preset is given.
    config: Option<PathBuf>,
    /// Output directory for records.csv.
    #[arg(long)]
    out: PathBuf,
    /// Built-in figure preset to run instead of a config file.
    #[arg(long, value_parser = preset_name_parser)]
    preset: Option<String>,
    /// Override the output normalization.
    #[arg(long, value_parser = ["raw", "figure"])]
    normalization: Option<String>,
    /// Fill the oracle/diff columns from the closed forms where covered.
    #[arg(long)]
    oracle: bool,
    /// Decay rate for time-domain sweeps; requires --t-grid.
    #[arg(long)]
    gamma: Option<f64>,
    /// Time grid "start:stop:step", mapped through p = 1 - exp(-gamma t).
    #[arg(long, value_name = "A:B:STEP")]
    t_grid: Option<String>,
}

#[derive(Args)]
struct FeaturesArgs {
    /// Records CSV produced by `sweep run`.
    records: PathBuf,
    /// Optional directory for features.csv and features.txt.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DiscrepancyArgs {
    /// Scenario config (JSON); must be an amplitude_damping scenario.
    config: PathBuf,
    /// Optional directory for discrepancy.csv and discrepancy.txt.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn preset_name_parser(s: &str) -> std::result::Result<String, String> {
    if config::preset_names().contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unknown preset \"{s}\"; available: {}",
            config::preset_names().join(", ")
        ))
    }
}

fn parse_t_grid(spec: &str) -> Result<(f64, f64, f64)> {
    let parts: Vec<&str> = spec.split(':').collect();
    let nums: Option<Vec<f64>> = parts.iter().map(|s| s.parse::<f64>().ok()).collect();
    match nums.as_deref() {
        Some([a, b, step]) if *step > 0.0 && *b >= *a && *a >= 0.0 => Ok((*a, *b, *step)),
        _ => Err(SweepError::Usage(format!(
            "--t-grid must be \"start:stop:step\" with 0 <= start <= stop and step > 0, got \"{spec}\""
        ))),
    }
}

/// Replaces each scenario's probability grid with decay probabilities from a
/// time grid under p = 1 - exp(-gamma t).
fn apply_time_grid(configs: &mut [SweepConfig], gamma: f64, spec: &str) -> Result<()> {
    if gamma < 0.0 || !gamma.is_finite() {
        return Err(SweepError::Usage(format!(
            "--gamma must be a nonnegative finite rate, got {gamma}"
        )));
    }
    let (start, stop, step) = parse_t_grid(spec)?;
    let mut probs = Vec::new();
    let mut i = 0usize;
    loop {
        let t = start + i as f64 * step;
        if t > stop + step * 1e-9 {
            break;
        }
        probs.push(1.0 - (-gamma * t).exp());
        i += 1;
    }
    for c in configs.iter_mut() {
        if c.per_party.is_some() {
            return Err(SweepError::Usage(
                "--t-grid cannot be combined with per_party_grids".to_string(),
            ));
        }
        c.explicit_p_points = Some(probs.clone());
    }
    Ok(())
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let mut scenarios: Vec<SweepConfig> = match (&args.config, &args.preset) {
        (Some(path), None) => vec![config::parse_config(path)?],
        (None, Some(name)) => config::preset(name).expect("validated preset name"),
        (Some(_), Some(_)) => {
            return Err(SweepError::Usage(
                "give either a config file or --preset, not both".to_string(),
            ))
        }
        (None, None) => {
            return Err(SweepError::Usage(
                "a config file or --preset is required".to_string(),
            ))
        }
    };

    if let Some(norm) = &args.normalization {
        let norm = match norm.as_str() {
            "figure" => Normalization::Figure,
            _ => Normalization::Raw,
        };
        for c in &mut scenarios {
            c.normalization = norm;
        }
    }
    if args.oracle {
        for c in &mut scenarios {
            c.oracle_compare = true;
        }
    }
    match (args.gamma, &args.t_grid) {
        (None, None) => {}
        (Some(gamma), Some(spec)) => apply_time_grid(&mut scenarios, gamma, spec)?,
        _ => {
            return Err(SweepError::Usage(
                "--gamma and --t-grid must be given together".to_string(),
            ))
        }
    }

    std::fs::create_dir_all(&args.out).map_err(SweepError::io(&args.out))?;
    let records = run::run_scenarios(&scenarios)?;
    let path = args.out.join("records.csv");
    emit::emit_csv(&records, &path)?;
    println!("wrote {} records to {}", records.len(), path.display());
    Ok(())
}

fn cmd_features(args: FeaturesArgs) -> Result<()> {
    let records = emit::read_records(&args.records)?;
    let found = detect_features(&records)?;
    print!("{}", features::render_text(&found));
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).map_err(SweepError::io(dir))?;
        emit::write_text(&dir.join("features.txt"), &features::render_text(&found))?;
        emit::write_text(&dir.join("features.csv"), &features::render_csv(&found))?;
        println!(
            "wrote {} and {}",
            dir.join("features.txt").display(),
            dir.join("features.csv").display()
        );
    }
    Ok(())
}

fn cmd_discrepancy(args: DiscrepancyArgs) -> Result<()> {
    let config = config::parse_config(&args.config)?;
    let report = discrepancy::discrepancy_report(&config)?;
    print!("{}", report.render_text());
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).map_err(SweepError::io(dir))?;
        emit::write_text(&dir.join("discrepancy.txt"), &report.render_text())?;
        emit::write_text(&dir.join("discrepancy.csv"), &report.render_csv())?;
        println!(
            "wrote {} and {}",
            dir.join("discrepancy.txt").display(),
            dir.join("discrepancy.csv").display()
        );
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Features(args) => cmd_features(args),
        Command::Discrepancy(args) => cmd_discrepancy(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
