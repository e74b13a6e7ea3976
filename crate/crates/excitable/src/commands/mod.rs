//! Subcommand implementations. Each takes the global options plus its own clap
//! arguments and returns an [`Outcome`].

use std::path::PathBuf;

use clap::Args;
use excitable_core::ensembles::{random_coloring, uniform_coloring};
use excitable_core::rate::ColorDensities;
use excitable_core::{Coloring, DynamicsKind, Graph, RngStream};

use crate::config::{Format, RunConfig};
use crate::report::Report;
use crate::spec::{parse_densities, GraphSpec};
use crate::{io, CliError, CliResult};

pub mod activity;
pub mod cloud_speed;
pub mod er_phase;
pub mod rate_fn;
pub mod simulate;
pub mod snapshot;

/// Options shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Common {
    pub seed: u64,
    pub trials: u64,
    pub jobs: usize,
    pub format: Format,
}

impl Common {
    pub fn config(&self, command: &str) -> RunConfig {
        let mut c = RunConfig::new(command);
        c.seed = self.seed;
        c.trials = self.trials;
        c.format = self.format;
        c
    }

    pub fn require_single_trial(&self, command: &str) -> CliResult<()> {
        if self.trials != 1 {
            return Err(CliError::config(format!("{command} runs a single trajectory; --trials must be 1")));
        }
        Ok(())
    }
}

/// A report plus the failure that cut the run short, if any. The report is
/// always written, so budget overruns still leave partial data behind.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub failure: Option<CliError>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, failure: None }
    }
}

#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    /// Edge-list file.
    #[arg(long, conflicts_with = "gen")]
    pub graph: Option<PathBuf>,
    /// Generator spec such as `torus-ust:100x100+12` or `er-lambda:2000:0.5`.
    #[arg(long)]
    pub gen: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DynamicsArgs {
    /// `cca` or `ghm`.
    #[arg(long, default_value = "cca")]
    pub dynamics: String,
    /// Color densities `p0,p1,p2`, or `uniform`.
    #[arg(long, default_value = "uniform")]
    pub densities: String,
}

#[derive(Args, Debug, Clone)]
pub struct ColorArgs {
    /// Coloring file; a random coloring is drawn when absent.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    /// Number of colors.
    #[arg(long, default_value_t = 3)]
    pub kappa: u8,
    #[command(flatten)]
    pub dynamics: DynamicsArgs,
}

pub struct Resolved {
    pub kind: DynamicsKind,
    pub densities: ColorDensities,
}

impl DynamicsArgs {
    pub fn resolve(&self, config: &mut RunConfig) -> CliResult<Resolved> {
        let kind: DynamicsKind = self.dynamics.parse()?;
        let densities = parse_densities(&self.densities)?;
        config.dynamics = kind.as_str().to_string();
        config.densities = densities.as_array();
        Ok(Resolved { kind, densities })
    }
}

pub struct GraphInput {
    pub graph: Graph,
    pub spec: Option<GraphSpec>,
}

impl GraphArgs {
    pub fn resolve(&self, config: &mut RunConfig, rng: &mut RngStream) -> CliResult<GraphInput> {
        match (&self.graph, &self.gen) {
            (Some(path), None) => {
                config.graph = Some(format!("file:{}", path.display()));
                Ok(GraphInput { graph: io::read_graph(path)?, spec: None })
            }
            (None, Some(gen)) => {
                let spec: GraphSpec = gen.parse()?;
                config.graph = Some(spec.to_string());
                Ok(GraphInput { graph: spec.build(rng)?, spec: Some(spec) })
            }
            _ => Err(CliError::config("give exactly one of --graph FILE or --gen SPEC")),
        }
    }
}

impl ColorArgs {
    /// Loads the coloring file, or draws one: i.i.d. with the given densities for
    /// κ = 3, uniform over `Z_κ` otherwise.
    pub fn resolve(&self, n: usize, config: &mut RunConfig, rng: &mut RngStream) -> CliResult<(Coloring, Resolved)> {
        let resolved = self.dynamics.resolve(config)?;
        config.kappa = self.kappa;
        let coloring = match &self.coloring {
            Some(path) => {
                config.coloring = Some(format!("file:{}", path.display()));
                io::read_coloring(path, self.kappa)?
            }
            None => {
                config.coloring = Some("random".to_string());
                if self.kappa == 3 {
                    random_coloring(n, &resolved.densities, rng)
                } else if resolved.densities == ColorDensities::uniform() {
                    uniform_coloring(n, self.kappa, rng)?
                } else {
                    return Err(CliError::config("non-uniform densities need κ = 3"));
                }
            }
        };
        if coloring.len() != n {
            return Err(CliError::config(format!("coloring has {} entries, graph has {n} vertices", coloring.len())));
        }
        Ok((coloring, resolved))
    }
}

/// Streams used by single-run commands: the graph and the coloring draw from
/// separate substreams of `(seed, 0)`.
pub fn single_run_streams(seed: u64) -> (RngStream, RngStream) {
    let base = RngStream::new(seed, 0);
    (base.substream(1), base.substream(2))
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn rational_string(r: excitable_core::Rational) -> String {
    if *r.denom() == 1 {
        return r.numer().to_string();
    }
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_f64(r: excitable_core::Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
