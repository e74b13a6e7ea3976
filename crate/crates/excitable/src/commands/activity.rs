use clap::Args;
use excitable_core::{max_cycle_mean, OneForm, Trajectory};

use super::{rational_f64, rational_string, single_run_streams, ColorArgs, Common, GraphArgs, Outcome};
use crate::report::Report;
use crate::{CliError, CliResult};

#[derive(Args, Debug, Clone)]
pub struct ActivityArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub color: ColorArgs,
    /// Also simulate to the limit cycle and require the two activities to agree.
    #[arg(long)]
    pub simulate: bool,
    /// Step budget for the simulation (default 4·n·κ).
    #[arg(long)]
    pub max_steps: Option<u64>,
}

/// Exact activity as the maximum cycle mean of `dX_0`; optionally cross-checked
/// against the simulated limit cycle. A disagreement exits with the oracle code.
pub fn run(common: &Common, args: &ActivityArgs) -> CliResult<Outcome> {
    common.require_single_trial("activity")?;
    let mut config = common.config("activity");
    config.params.insert("simulate".into(), args.simulate.into());
    if let Some(m) = args.max_steps {
        config.params.insert("max_steps".into(), m.into());
    }
    let (mut graph_rng, mut color_rng) = single_run_streams(common.seed);
    let g = args.graph.resolve(&mut config, &mut graph_rng)?.graph;
    let (x0, resolved) = args.color.resolve(g.n(), &mut config, &mut color_rng)?;
    x0.require_kappa3()?;
    let form = OneForm::new(&g, &x0, resolved.kind)?;
    let mcm = max_cycle_mean(&g, &form)?;
    let mut report = Report::new(config);
    report.set("n", g.n());
    report.set("edges", g.edge_count());
    report.set("max_cycle_mean", rational_string(mcm));
    report.set("max_cycle_mean_value", rational_f64(mcm));
    report.set("irrotational", *mcm.numer() == 0);
    if !args.simulate {
        return Ok(report.into());
    }
    let mut traj = Trajectory::new(&g, x0, resolved.kind)?;
    let budget = args.max_steps.unwrap_or_else(|| traj.default_budget());
    let lc = match traj.run_to_limit_cycle(budget) {
        Ok(lc) => lc,
        Err(excitable_core::Error::StepBudgetExceeded { max_steps, .. }) => {
            report.set("status", "budget_exceeded");
            let failure = CliError::Budget(format!("no limit cycle within {max_steps} steps"));
            return Ok(Outcome { report, failure: Some(failure) });
        }
        Err(e) => return Err(e.into()),
    };
    report.set("preperiod", lc.preperiod);
    report.set("period", lc.period);
    let simulated = lc.activity();
    report.set("simulated_activity", simulated.map(rational_string));
    let agree = simulated == Some(mcm);
    report.set("agree", agree);
    let failure = (!agree).then(|| {
        CliError::OracleMismatch(format!(
            "max cycle mean {} but simulated activity {}",
            rational_string(mcm),
            simulated.map_or("not uniform".to_string(), rational_string)
        ))
    });
    Ok(Outcome { report, failure })
}
