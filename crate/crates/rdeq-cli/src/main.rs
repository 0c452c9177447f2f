//! Command-line front end.
//!
//! Subcommands: `simulate`, `compare`, `analyze`, `period`, `symmetry`,
//! `figure`. Exit codes: 0 success/agreement, 1 mismatch or analysis
//! failure, 2 usage/config error.

mod config;
mod presets;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rdeq::analysis;
use rdeq::closed_form::{self, ComparisonReport};
use rdeq::invariants;
use rdeq::SystemSpec;

use config::ConfigError;

#[derive(Parser)]
#[command(
    name = "rdeq",
    about = "Exact orbits, closed forms, and stability reports for strided rational difference equations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Iterate the recurrence and emit the orbit as CSV
    Simulate {
        #[arg(long)]
        config: PathBuf,
        /// Last index to compute
        #[arg(long)]
        steps: usize,
        /// Write CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed-form solution against brute-force iteration
    Compare {
        #[arg(long)]
        config: PathBuf,
        /// Last index to compare
        #[arg(long)]
        horizon: usize,
    },
    /// Equilibria, characteristic roots, stability, and periodicity
    Analyze {
        #[arg(long)]
        config: PathBuf,
        /// Also detect the minimal period over this horizon
        #[arg(long)]
        horizon: Option<usize>,
        /// Largest period to search for (default: 4 times the order)
        #[arg(long)]
        max_period: Option<usize>,
    },
    /// Predict and detect the minimal period
    Period {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        horizon: Option<usize>,
        /// Largest period to search for (default: 4 times the order)
        #[arg(long)]
        max_period: Option<usize>,
    },
    /// Verify the symmetry-generator exponents for order parameter K
    Symmetry { k: usize },
    /// Emit a built-in preset orbit as CSV
    Figure {
        /// Preset name: fig1 (period 8) or fig2 (decay)
        #[arg(long)]
        preset: String,
        #[arg(long, default_value_t = 40)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Config(#[from] ConfigError),
    #[error("unknown preset {0:?} (available: fig1, fig2)")]
    UnknownPreset(String),
    #[error("{0}")]
    Lib(#[from] rdeq::Error),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::UnknownPreset(_) | CliError::Read { .. } => 2,
            CliError::Lib(_) | CliError::Io(_) => 1,
        }
    }
}

fn load_config(path: &Path) -> Result<SystemSpec, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(config::parse_config(&text)?)
}

fn emit<F>(out: Option<&Path>, write: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> std::io::Result<()>,
{
    match out {
        Some(path) => {
            let mut file = fs::File::create(path)?;
            write(&mut file)?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
        }
    }
    Ok(())
}

/// Exit-code contract for `compare`: zero exactly when nothing mismatched.
fn compare_exit_code(report: &ComparisonReport) -> u8 {
    u8::from(!report.is_clean())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Simulate { config, steps, out } => {
            let spec = load_config(&config)?;
            let orbit = spec.iterate(steps);
            emit(out.as_deref(), |w| report::write_orbit_csv(w, &orbit))?;
            Ok(0)
        }
        Command::Compare { config, horizon } => {
            let spec = load_config(&config)?;
            let comparison = closed_form::compare(&spec, horizon);
            let stdout = std::io::stdout();
            report::write_compare_report(stdout.lock(), &comparison)?;
            Ok(compare_exit_code(&comparison))
        }
        Command::Analyze {
            config,
            horizon,
            max_period,
        } => {
            let spec = load_config(&config)?;
            let stability = analysis::classify(&spec)?;
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            writeln!(
                w,
                "system: k={}, order {}, A={}, B={}",
                spec.k(),
                spec.order(),
                sequence_text(spec.a()),
                sequence_text(spec.b()),
            )?;
            report::write_stability(&mut w, &stability)?;
            let max_period = max_period.unwrap_or(4 * spec.order());
            match horizon {
                Some(h) => {
                    let period = analysis::period_report(&spec, max_period, h)?;
                    report::write_period(&mut w, &period)?;
                }
                None => match analysis::predict_period(&spec) {
                    Some(p) => writeln!(w, "predicted period: {} ({})", p.period, p.rule)?,
                    None => writeln!(w, "predicted period: none")?,
                },
            }
            Ok(0)
        }
        Command::Period {
            config,
            horizon,
            max_period,
        } => {
            let spec = load_config(&config)?;
            let max_period = max_period.unwrap_or(4 * spec.order());
            let period = analysis::period_report(&spec, max_period, horizon.unwrap_or(0))?;
            let stdout = std::io::stdout();
            report::write_period(stdout.lock(), &period)?;
            Ok(0)
        }
        Command::Symmetry { k } => {
            let certificate = invariants::symmetry_roots(k);
            let stdout = std::io::stdout();
            report::write_symmetry(stdout.lock(), &certificate)?;
            Ok(u8::from(!certificate.all_pass(1e-12)))
        }
        Command::Figure { preset, steps, out } => {
            let spec =
                presets::by_name(&preset).ok_or_else(|| CliError::UnknownPreset(preset))?;
            let orbit = spec.iterate(steps);
            emit(out.as_deref(), |w| report::write_orbit_csv(w, &orbit))?;
            Ok(0)
        }
    }
}

fn sequence_text(seq: &rdeq::SequenceSpec) -> String {
    match seq.constant_value() {
        Some(v) => v.to_string(),
        None => {
            let values: Vec<String> = seq.values().iter().map(|v| v.to_string()).collect();
            format!("periodic[{}]", values.join(", "))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
