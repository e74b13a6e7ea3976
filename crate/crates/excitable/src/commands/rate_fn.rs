use clap::Args;
use excitable_core::rate::{closed_form_lambda_uniform, closed_form_legendre_uniform, ColorDensities, RateFunction};
use excitable_core::DynamicsKind;
use serde_json::{json, Value};

use super::{Common, DynamicsArgs, Outcome};
use crate::report::{Report, Series};
use crate::{CliError, CliResult};

/// Closed-form deviations above these are flagged.
const LAMBDA_TOL: f64 = 1e-10;
const LEGENDRE_TOL: f64 = 1e-8;

#[derive(Args, Debug, Clone)]
pub struct RateFnArgs {
    #[command(flatten)]
    pub dynamics: DynamicsArgs,
    /// Largest `t` in the Λ grid.
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 0.1)]
    pub t_step: f64,
    /// The Λ* grid is `u = B·i/N` for `i = 1..N-1`.
    #[arg(long, default_value_t = 20)]
    pub u_steps: usize,
}

/// Tabulates `Λ` and `Λ*`; with uniform densities each value is compared with
/// its closed form.
pub fn run(common: &Common, args: &RateFnArgs) -> CliResult<Outcome> {
    common.require_single_trial("rate-fn")?;
    if !(args.t_step > 0.0 && args.t_max >= 0.0 && args.t_max.is_finite()) || args.u_steps < 2 {
        return Err(CliError::config("need t_step > 0, finite t_max ≥ 0 and u_steps ≥ 2"));
    }
    let mut config = common.config("rate-fn");
    let resolved = args.dynamics.resolve(&mut config)?;
    config.params.insert("t_max".into(), json!(args.t_max));
    config.params.insert("t_step".into(), json!(args.t_step));
    config.params.insert("u_steps".into(), args.u_steps.into());
    let rf = RateFunction::new(resolved.kind, resolved.densities);
    let uniform = resolved.densities == ColorDensities::uniform();
    // Λ_GHM(t) = Λ_CCA(t/3) and Λ*_GHM(u) = Λ*_CCA(3u).
    let scale = match resolved.kind {
        DynamicsKind::Cca => 1.0,
        DynamicsKind::Ghm => 3.0,
    };

    let mut series = Series::new(&["quantity", "x", "value", "closed_form", "deviation"]);
    let (mut dev_lambda, mut dev_legendre) = (0.0f64, 0.0f64);
    let steps = (args.t_max / args.t_step + 1e-9).floor() as usize;
    for i in 0..=steps {
        let t = i as f64 * args.t_step;
        let v = rf.lambda(t)?;
        let (cf, dev) = if uniform {
            let c = closed_form_lambda_uniform(t / scale);
            dev_lambda = dev_lambda.max((v - c).abs());
            (json!(c), json!((v - c).abs()))
        } else {
            (Value::Null, Value::Null)
        };
        series.push(vec![json!("lambda"), json!(t), json!(v), cf, dev]);
    }
    let b = rf.ceiling();
    for i in 1..args.u_steps {
        let u = b * i as f64 / args.u_steps as f64;
        let v = rf.legendre(u)?.value;
        let (cf, dev) = if uniform {
            let c = closed_form_legendre_uniform(u * scale);
            dev_legendre = dev_legendre.max((v - c).abs());
            (json!(c), json!((v - c).abs()))
        } else {
            (Value::Null, Value::Null)
        };
        series.push(vec![json!("legendre"), json!(u), json!(v), cf, dev]);
    }

    let mut report = Report::new(config);
    report.set("ceiling", b);
    report.set("ceiling_value", rf.ceiling_value());
    if uniform {
        report.set("max_lambda_deviation", dev_lambda);
        report.set("max_legendre_deviation", dev_legendre);
        if dev_lambda > LAMBDA_TOL {
            report.warnings.push(format!("Λ deviates from its closed form by {dev_lambda:e}"));
        }
        if dev_legendre > LEGENDRE_TOL {
            report.warnings.push(format!("Λ* deviates from its closed form by {dev_legendre:e}"));
        }
    }
    report.series = Some(series);
    Ok(report.into())
}
