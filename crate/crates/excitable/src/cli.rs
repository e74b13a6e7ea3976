//! Command-line definition and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::{self, Common, Outcome};
use crate::config::Format;
use crate::error::{EXIT_CONFIG, EXIT_OK};
use crate::CliResult;

#[derive(Parser, Debug)]
#[command(name = "excitable", version, about = "Excitable media on graphs and trees: simulation and experiments")]
pub struct Cli {
    /// All randomness in a run derives from this seed.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Monte Carlo trials (er-phase, cloud-speed); other commands run once.
    #[arg(long, global = true, default_value_t = 1)]
    pub trials: u64,
    /// Worker threads. Output does not depend on this.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Report destination; stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one trajectory to its limit cycle or for a fixed number of steps.
    Simulate(commands::simulate::SimulateArgs),
    /// Exact activity from the maximum cycle mean, optionally cross-checked.
    Activity(commands::activity::ActivityArgs),
    /// Synchronization and oscillation frequencies on Erdős–Rényi graphs.
    ErPhase(commands::er_phase::ErPhaseArgs),
    /// Predicted and empirical cloud speed on an infinite tree.
    CloudSpeed(commands::cloud_speed::CloudSpeedArgs),
    /// Tabulate Λ and Λ*.
    RateFn(commands::rate_fn::RateFnArgs),
    /// Write PPM snapshots of a grid-embedded trajectory.
    Snapshot(commands::snapshot::SnapshotArgs),
}

impl Cli {
    pub fn common(&self) -> Common {
        Common { seed: self.seed, trials: self.trials, jobs: self.jobs, format: self.format }
    }
}

pub fn execute(cli: &Cli) -> CliResult<Outcome> {
    let common = cli.common();
    match &cli.command {
        Command::Simulate(a) => commands::simulate::run(&common, a),
        Command::Activity(a) => commands::activity::run(&common, a),
        Command::ErPhase(a) => commands::er_phase::run(&common, a),
        Command::CloudSpeed(a) => commands::cloud_speed::run(&common, a),
        Command::RateFn(a) => commands::rate_fn::run(&common, a),
        Command::Snapshot(a) => commands::snapshot::run(&common, a),
    }
}

/// Parses `args`, runs the command, writes the report and returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    if let Err(e) = outcome.report.emit(cli.format, cli.output.as_deref()) {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    for w in &outcome.report.warnings {
        eprintln!("warning: {w}");
    }
    let _ = std::io::stdout().flush();
    match outcome.failure {
        Some(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        None => EXIT_OK,
    }
}
