use std::path::PathBuf;

use clap::Args;
use excitable_core::Trajectory;

use super::{single_run_streams, ColorArgs, Common, GraphArgs, Outcome};
use crate::report::Report;
use crate::{ppm, CliError, CliResult};

#[derive(Args, Debug, Clone)]
pub struct SnapshotArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub color: ColorArgs,
    /// Grid shape `WxH` for a graph file whose vertices are numbered row-major.
    /// Torus generators supply their own shape.
    #[arg(long)]
    pub grid: Option<String>,
    /// Comma-separated steps to capture.
    #[arg(long, default_value = "100,200,300")]
    pub steps: String,
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Pixels per vertex along each axis.
    #[arg(long, default_value_t = 1)]
    pub scale: usize,
}

/// Writes `snapshot_TTTTTT.ppm` into the output directory for every requested step.
pub fn run(common: &Common, args: &SnapshotArgs) -> CliResult<Outcome> {
    common.require_single_trial("snapshot")?;
    let mut steps: Vec<u64> = args
        .steps
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::config(format!("bad step `{s}`"))))
        .collect::<CliResult<_>>()?;
    steps.sort_unstable();
    steps.dedup();
    if args.scale == 0 {
        return Err(CliError::config("--scale must be positive"));
    }
    let mut config = common.config("snapshot");
    config.params.insert("steps".into(), steps.clone().into());
    config.params.insert("scale".into(), args.scale.into());
    let (mut graph_rng, mut color_rng) = single_run_streams(common.seed);
    let input = args.graph.resolve(&mut config, &mut graph_rng)?;
    let (width, height) = match (&args.grid, input.spec.as_ref().and_then(|s| s.grid_shape())) {
        (Some(grid), _) => {
            let (w, h) = grid.split_once('x').ok_or_else(|| CliError::config("--grid expects WxH"))?;
            let parse = |s: &str| s.parse::<usize>().map_err(|_| CliError::config(format!("bad grid size `{s}`")));
            (parse(w)?, parse(h)?)
        }
        (None, Some(shape)) => shape,
        (None, None) => return Err(CliError::config("snapshots need a torus generator or --grid WxH")),
    };
    if width * height != input.graph.n() {
        return Err(CliError::config(format!("grid {width}x{height} does not match {} vertices", input.graph.n())));
    }
    config.params.insert("grid".into(), format!("{width}x{height}").into());
    let (x0, resolved) = args.color.resolve(input.graph.n(), &mut config, &mut color_rng)?;
    let palette = ppm::palette(resolved.kind, x0.kappa());
    std::fs::create_dir_all(&args.out_dir).map_err(|e| CliError::io(&args.out_dir, e))?;

    let mut traj = Trajectory::new(&input.graph, x0, resolved.kind)?;
    let mut files = Vec::new();
    for &t in &steps {
        traj.advance(t - traj.step_index());
        let name = format!("snapshot_{t:06}.ppm");
        let path = args.out_dir.join(&name);
        let bytes = ppm::encode(traj.colors(), width, height, &palette, args.scale);
        std::fs::write(&path, bytes).map_err(|e| CliError::io(&path, e))?;
        files.push(name);
    }
    let mut report = Report::new(config);
    report.set("width", width * args.scale);
    report.set("height", height * args.scale);
    report.set("files", files);
    report.set("total_excitations", traj.excitations().iter().sum::<u64>());
    Ok(report.into())
}
