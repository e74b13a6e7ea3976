use std::path::PathBuf;

use clap::Args;
use excitable_core::{Error, Trajectory};
use serde_json::{json, Value};

use super::{rational_f64, rational_string, single_run_streams, ColorArgs, Common, GraphArgs, Outcome};
use crate::report::{Report, Series};
use crate::{io, CliError, CliResult};

#[derive(Args, Debug, Clone)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub color: ColorArgs,
    /// Run exactly this many steps instead of searching for the limit cycle.
    #[arg(long)]
    pub t_max: Option<u64>,
    /// Step budget for limit-cycle detection (default 4·n·κ).
    #[arg(long)]
    pub max_steps: Option<u64>,
    /// Write the coloring every k steps into --snapshot-dir.
    #[arg(long, requires = "snapshot_dir")]
    pub snapshot_every: Option<u64>,
    #[arg(long)]
    pub snapshot_dir: Option<PathBuf>,
}

/// Runs one trajectory to its limit cycle (or for `--t-max` steps) and reports
/// preperiod, period, activity and synchronization time.
pub fn run(common: &Common, args: &SimulateArgs) -> CliResult<Outcome> {
    common.require_single_trial("simulate")?;
    let mut config = common.config("simulate");
    config.t_max = args.t_max;
    if let Some(k) = args.snapshot_every {
        if k == 0 {
            return Err(CliError::config("--snapshot-every must be positive"));
        }
        config.params.insert("snapshot_every".into(), k.into());
    }
    if let Some(m) = args.max_steps {
        config.params.insert("max_steps".into(), m.into());
    }
    let (mut graph_rng, mut color_rng) = single_run_streams(common.seed);
    let input = args.graph.resolve(&mut config, &mut graph_rng)?;
    let g = &input.graph;
    let (x0, resolved) = args.color.resolve(g.n(), &mut config, &mut color_rng)?;
    let mut report = Report::new(config);
    report.set("n", g.n());
    report.set("edges", g.edge_count());
    let is_tree = g.is_tree();
    report.set("is_tree", is_tree);
    if is_tree {
        report.set("diameter", g.diameter()?);
    }

    let horizon = match args.t_max {
        Some(t) => t,
        None => {
            let mut traj = Trajectory::new(g, x0.clone(), resolved.kind)?;
            let budget = args.max_steps.unwrap_or_else(|| traj.default_budget());
            match traj.run_to_limit_cycle(budget) {
                Ok(lc) => {
                    report.set("status", "limit_cycle");
                    report.set("preperiod", lc.preperiod);
                    report.set("period", lc.period);
                    report.set("fixates", lc.fixates());
                    let total: u64 = lc.excitations_per_period.iter().sum();
                    report.set("excitations_per_period", total);
                    match lc.activity() {
                        Some(a) => {
                            report.set("activity", rational_string(a));
                            report.set("activity_value", rational_f64(a));
                        }
                        None => {
                            report.set("activity", Value::Null);
                            let rates: Vec<String> =
                                (0..g.n()).map(|v| rational_string(lc.vertex_activity(v))).collect();
                            report.set("vertex_activity", rates);
                        }
                    }
                    lc.preperiod + lc.period
                }
                Err(Error::StepBudgetExceeded { max_steps, partial_excitations }) => {
                    report.set("status", "budget_exceeded");
                    report.set("steps_run", max_steps);
                    report.set("partial_excitations", partial_excitations.iter().sum::<u64>());
                    let failure = CliError::Budget(format!("no limit cycle within {max_steps} steps"));
                    return Ok(Outcome { report, failure: Some(failure) });
                }
                Err(e) => return Err(e.into()),
            }
        }
    };

    // Replay for the per-step table, the synchronization time and snapshots.
    let mut traj = Trajectory::new(g, x0, resolved.kind)?;
    let mut series = Series::new(&["t", "total_excitations", "excited_next", "monochromatic"]);
    let mut sync_time = None;
    let mut snapshots = Vec::new();
    if let Some(dir) = &args.snapshot_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    for t in 0..=horizon {
        let mono = traj.is_monochromatic();
        if mono && sync_time.is_none() {
            sync_time = Some(t);
        }
        let total: u64 = traj.excitations().iter().sum();
        series.push(vec![json!(t), json!(total), json!(traj.excited_set().len()), json!(mono)]);
        if let (Some(k), Some(dir)) = (args.snapshot_every, &args.snapshot_dir) {
            if t % k == 0 {
                let name = format!("step_{t:06}.txt");
                io::write_text(&dir.join(&name), &io::write_coloring(traj.colors()))?;
                snapshots.push(name);
            }
        }
        if t < horizon {
            traj.step();
        }
    }
    // Both rules keep a monochromatic state monochromatic.
    let synchronized = traj.is_monochromatic();
    report.set("steps", horizon);
    report.set("synchronized", synchronized);
    report.set("sync_time", if synchronized { json!(sync_time) } else { Value::Null });
    if let (true, Some(Value::Number(d)), Some(t)) = (synchronized, report.get("diameter").cloned(), sync_time) {
        report.set("sync_within_diameter", t <= d.as_u64().unwrap());
    }
    if !snapshots.is_empty() {
        report.set("snapshots", snapshots);
    }
    report.series = Some(series);
    Ok(report.into())
}
