//! `abfrac` command-line driver.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a run
//! breaks down numerically, 2 for input errors (bad flags, invalid
//! scenarios, violated preconditions).

mod commands;
pub mod output;
pub mod suite;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "abfrac", version, about = "Atangana-Baleanu fractional calculus and Mittag-Leffler observers")]
pub struct Cli {
    /// Scenario file (JSON).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,
    /// Seed overriding the scenario seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate E_{α,β} at a point or on a grid.
    MlEval(MlEvalArgs),
    /// Integrate the scenario plant.
    Simulate,
    /// Run plant and observer and check the Mittag-Leffler envelope.
    Observe,
    /// Run the verification suite and scenario cases.
    Verify,
    /// Compute the observer gain and certificate without simulating.
    Design,
}

#[derive(Debug, Args)]
pub struct MlEvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["z_min", "z_max", "points"])]
    pub z: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["z_max", "points"])]
    pub z_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["z_min", "points"])]
    pub z_max: Option<f64>,
    #[arg(long, requires_all = ["z_min", "z_max"])]
    pub points: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Runtime(_) => EXIT_FAIL,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let recorded: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return EXIT_FAIL;
        }
    };
    match pool.install(|| commands::dispatch(&cli, &recorded)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
