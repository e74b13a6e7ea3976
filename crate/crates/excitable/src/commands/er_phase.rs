use clap::Args;
use excitable_core::ensembles::{erdos_renyi, random_coloring};
use excitable_core::rate::{acyclic_limit, er_sync_constant, giant_fraction, oscillation_rate, ColorDensities};
use excitable_core::{Coloring, DynamicsKind, Graph, OneForm, RngStream};
use serde_json::json;

use super::{Common, Outcome};
use crate::harness::run_trials;
use crate::report::{Report, Series};
use crate::{CliError, CliResult};

#[derive(Args, Debug, Clone)]
pub struct ErPhaseArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: usize,
    /// Mean degree λ; the edge probability is λ/n.
    #[arg(long, conflicts_with = "p")]
    pub lambda: Option<f64>,
    /// Edge probability.
    #[arg(long)]
    pub p: Option<f64>,
    /// `cca` or `ghm`.
    #[arg(long, default_value = "cca")]
    pub dynamics: String,
    /// Cycle lengths summed in the theoretical constant.
    #[arg(long, default_value_t = 40)]
    pub k_max: usize,
}

/// One sampled `(G(n, p), X_0)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ErTrial {
    pub components: usize,
    /// Every component is irrotational, i.e. synchronizes.
    pub sync_all: bool,
    pub giant_size: usize,
    pub giant_oscillates: bool,
}

/// Samples a graph and a uniform coloring and tests each component for
/// irrotationality (equivalently, synchronization).
pub fn er_trial(n: usize, p: f64, kind: DynamicsKind, rng: &mut RngStream) -> CliResult<ErTrial> {
    let g = erdos_renyi(n, p, rng)?;
    let x = random_coloring(n, &ColorDensities::uniform(), rng);
    let comps = g.components();
    let giant = comps.iter().enumerate().max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i))).map(|(i, _)| i);
    let mut sync_all = true;
    let mut giant_oscillates = false;
    for (i, comp) in comps.iter().enumerate() {
        let sync = component_synchronizes(&g, &x, comp, kind)?;
        sync_all &= sync;
        if Some(i) == giant {
            giant_oscillates = !sync;
        }
    }
    Ok(ErTrial {
        components: comps.len(),
        sync_all,
        giant_size: giant.map_or(0, |i| comps[i].len()),
        giant_oscillates,
    })
}

fn component_synchronizes(g: &Graph, x: &Coloring, comp: &[usize], kind: DynamicsKind) -> CliResult<bool> {
    let h = g.induced(comp);
    if h.edge_count() + 1 == h.n() {
        // Trees are always irrotational.
        return Ok(true);
    }
    let colors = Coloring::new(3, comp.iter().map(|&v| x.get(v)).collect())?;
    Ok(OneForm::new(&h, &colors, kind)?.irrotationality(&h)?.is_irrotational())
}

/// Monte Carlo over `(G(n, p), X_0)` with the matching theoretical constants.
pub fn run(common: &Common, args: &ErPhaseArgs) -> CliResult<Outcome> {
    let kind: DynamicsKind = args.dynamics.parse()?;
    let n = args.n;
    if n == 0 {
        return Err(CliError::config("--n must be positive"));
    }
    let (p, lambda) = match (args.lambda, args.p) {
        (Some(l), None) => (l / n as f64, l),
        (None, Some(p)) => (p, p * n as f64),
        _ => return Err(CliError::config("give exactly one of --lambda or --p")),
    };
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::config("edge probability must lie in [0, 1]"));
    }
    if common.trials == 0 {
        return Err(CliError::config("--trials must be positive"));
    }
    let mut config = common.config("er-phase");
    config.dynamics = kind.as_str().to_string();
    config.graph = Some(format!("er:{n}:{p}"));
    config.coloring = Some("random".into());
    config.params.insert("n".into(), n.into());
    config.params.insert("lambda".into(), json!(lambda));
    config.params.insert("p".into(), json!(p));
    config.params.insert("k_max".into(), args.k_max.into());

    let trials = run_trials(common.seed, common.trials, common.jobs, |_, rng| er_trial(n, p, kind, rng))?;
    let count = trials.len() as f64;
    let mut report = Report::new(config);
    report.set("n", n);
    report.set("lambda", lambda);
    report.set("p", p);
    report.set("trials", trials.len());
    let sync = trials.iter().filter(|t| t.sync_all).count() as f64 / count;
    report.set("sync_all_frequency", sync);
    report.set("sync_all_sigma", (sync * (1.0 - sync) / count).sqrt());
    let mean_giant = trials.iter().map(|t| t.giant_size as f64).sum::<f64>() / count / n as f64;
    report.set("mean_giant_fraction", mean_giant);

    if lambda > 0.0 && lambda < 1.0 {
        let c = acyclic_limit(lambda)?;
        let (lo, hi) = (c, 1.0 - 2.0 / 9.0 * (1.0 - c));
        report.set("c", c);
        report.set("sync_constant", er_sync_constant(kind, lambda, args.k_max)?);
        report.set("bracket_lo", lo);
        report.set("bracket_hi", hi);
        let (s_lo, s_hi) = ((lo * (1.0 - lo) / count).sqrt(), (hi * (1.0 - hi) / count).sqrt());
        let inside = sync >= lo - 3.0 * s_lo && sync <= hi + 3.0 * s_hi;
        report.set("inside_bracket_3sigma", inside);
        if !inside {
            report.warnings.push(format!("sync frequency {sync} outside [{lo}, {hi}] ± 3σ"));
        }
    }
    if lambda > 1.0 {
        let osc = trials.iter().filter(|t| t.giant_oscillates).count() as f64 / count;
        report.set("giant_oscillation_frequency", osc);
        report.set("beta", giant_fraction(lambda)?);
        report.set("oscillation_rate", oscillation_rate(lambda)?);
    }
    let mut series = Series::new(&["trial", "components", "sync_all", "giant_size", "giant_oscillates"]);
    for (i, t) in trials.iter().enumerate() {
        series.push(vec![json!(i), json!(t.components), json!(t.sync_all), json!(t.giant_size), json!(t.giant_oscillates)]);
    }
    report.series = Some(series);
    Ok(report.into())
}
