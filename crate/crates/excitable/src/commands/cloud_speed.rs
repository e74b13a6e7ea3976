use clap::{Args, ValueEnum};
use excitable_core::rate::RateFunction;
use excitable_core::trees::{
    estimate_cloud_speed_histogram, estimate_cloud_speed_with_budget, TreeFamily, WalkFrontier, DEFAULT_NODE_BUDGET,
};
use excitable_core::Error;
use serde_json::{json, Value};

use super::{Common, DynamicsArgs, Outcome};
use crate::harness::run_trials;
use crate::report::{Report, Series};
use crate::spec::{parse_tree_family, tree_family_name};
use crate::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Depth-first traversal of every vertex.
    Dfs,
    /// Per-level histograms of (color, partial sum); cost independent of level sizes.
    Histogram,
}

#[derive(Args, Debug, Clone)]
pub struct CloudSpeedArgs {
    /// `dary:D`, `geometric:D`, `ray-leaves` or `gw:P0,P1,...`.
    #[arg(long, default_value = "dary:2")]
    pub family: String,
    #[command(flatten)]
    pub dynamics: DynamicsArgs,
    #[arg(long, default_value_t = 24)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Engine::Dfs)]
    pub engine: Engine,
    /// Abort a depth-first traversal after this many vertices.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
}

enum TrialResult {
    Done(WalkFrontier),
    OverBudget { visited: u64, partial: Vec<Option<i64>> },
}

/// Predicted cloud speed next to empirical estimates, one per trial.
pub fn run(common: &Common, args: &CloudSpeedArgs) -> CliResult<Outcome> {
    let family = parse_tree_family(&args.family)?;
    if args.depth == 0 {
        return Err(CliError::config("--depth must be positive"));
    }
    if common.trials == 0 {
        return Err(CliError::config("--trials must be positive"));
    }
    let mut config = common.config("cloud-speed");
    let resolved = args.dynamics.resolve(&mut config)?;
    config.depth = Some(args.depth);
    config.graph = Some(tree_family_name(&family));
    config.coloring = Some("random".into());
    let engine = match args.engine {
        Engine::Dfs => "dfs",
        Engine::Histogram => "histogram",
    };
    config.params.insert("engine".into(), engine.into());
    config.params.insert("node_budget".into(), args.node_budget.into());

    let rf = RateFunction::new(resolved.kind, resolved.densities);
    let mut report = Report::new(config);
    report.set("ceiling", rf.ceiling());
    match family.closed_forms() {
        Some(cf) if (cf.log_br - cf.h).abs() <= 1e-12 => {
            report.set("predicted", rf.predict_cloud_speed(cf.log_br, cf.h)?);
        }
        Some(cf) => {
            report.set("predicted", Value::Null);
            report.set("prediction_note", format!("log br = {} differs from h = {}", cf.log_br, cf.h));
        }
        None => {
            report.set("predicted", Value::Null);
            report.set("prediction_note", "no closed form for this tree");
        }
    }
    if let TreeFamily::Geometric(d) = family {
        let l = f64::from(d).ln();
        report.set("subtree_speed", rf.predict_cloud_speed(l, l)?);
    }

    let trials = run_trials(common.seed, common.trials, common.jobs, |_, rng| {
        let r = match args.engine {
            Engine::Dfs => estimate_cloud_speed_with_budget(
                &family,
                resolved.kind,
                &resolved.densities,
                args.depth,
                rng,
                args.node_budget,
            ),
            Engine::Histogram => {
                estimate_cloud_speed_histogram(&family, resolved.kind, &resolved.densities, args.depth, rng)
            }
        };
        match r {
            Ok(f) => Ok(TrialResult::Done(f)),
            Err(Error::NodeBudgetExceeded { visited, partial_level_max, .. }) => {
                Ok(TrialResult::OverBudget { visited, partial: partial_level_max })
            }
            Err(e) => Err(e.into()),
        }
    })?;

    let mut series = Series::new(&["trial", "level", "level_max", "running_max"]);
    let mut estimates = Vec::new();
    let mut failure = None;
    for (i, t) in trials.iter().enumerate() {
        match t {
            TrialResult::Done(f) => {
                estimates.push(f.speed_estimate());
                for (level, (m, r)) in f.level_max.iter().zip(f.running_max()).enumerate() {
                    series.push(vec![json!(i), json!(level), json!(m), json!(r)]);
                }
            }
            TrialResult::OverBudget { visited, partial } => {
                for (level, m) in partial.iter().enumerate() {
                    series.push(vec![json!(i), json!(level), json!(m), Value::Null]);
                }
                failure.get_or_insert_with(|| {
                    CliError::Budget(format!("trial {i} visited {visited} vertices before reaching the depth"))
                });
            }
        }
    }
    report.set("estimates", estimates.clone());
    if !estimates.is_empty() {
        let k = estimates.len() as f64;
        let mean = estimates.iter().sum::<f64>() / k;
        report.set("mean_estimate", mean);
        if estimates.len() > 1 {
            let var = estimates.iter().map(|e| (e - mean) * (e - mean)).sum::<f64>() / (k - 1.0);
            report.set("std_error", (var / k).sqrt());
        }
        if let Some(p) = report.get("predicted").and_then(Value::as_f64) {
            report.set("gap", mean - p);
        }
    }
    report.series = Some(series);
    Ok(Outcome { report, failure })
}
