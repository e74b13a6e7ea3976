//! Textual specs for generated graphs, tree families and color densities.
//!
//! Graph generators:
//!
//! ```text
//! path:N  cycle:N  complete:N  star:LEAVES  random-tree:N
//! torus:WxH  torus-ust:WxH  torus-ust:WxH+E
//! er:N:P  er-lambda:N:LAMBDA
//! ```
//!
//! `torus-ust:WxH+E` is a uniform spanning tree of the torus with `E` uniformly
//! chosen extra edges. Tree families: `dary:D`, `geometric:D`, `ray-leaves`,
//! `gw:P0,P1,...` (offspring pmf).

use std::fmt;
use std::str::FromStr;

use excitable_core::ensembles::{
    add_random_edges, erdos_renyi, erdos_renyi_lambda, random_tree, torus_grid, wilson_ust,
};
use excitable_core::rate::ColorDensities;
use excitable_core::trees::TreeFamily;
use excitable_core::{Graph, RngStream};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    RandomTree(usize),
    Torus { width: usize, height: usize },
    TorusUst { width: usize, height: usize, extra: usize },
    Er { n: usize, p: f64 },
    ErLambda { n: usize, lambda: f64 },
}

fn num<T: FromStr>(s: &str, what: &str) -> CliResult<T> {
    s.parse().map_err(|_| CliError::config(format!("bad {what} `{s}`")))
}

fn dims(s: &str) -> CliResult<(usize, usize)> {
    let (w, h) = s.split_once('x').ok_or_else(|| CliError::config(format!("expected WxH, got `{s}`")))?;
    Ok((num(w, "width")?, num(h, "height")?))
}

impl FromStr for GraphSpec {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let spec = match parts.as_slice() {
            ["path", n] => GraphSpec::Path(num(n, "size")?),
            ["cycle", n] => GraphSpec::Cycle(num(n, "size")?),
            ["complete", n] => GraphSpec::Complete(num(n, "size")?),
            ["star", n] => GraphSpec::Star(num(n, "leaf count")?),
            ["random-tree", n] => GraphSpec::RandomTree(num(n, "size")?),
            ["torus", d] => {
                let (width, height) = dims(d)?;
                GraphSpec::Torus { width, height }
            }
            ["torus-ust", d] => {
                let (d, extra) = match d.split_once('+') {
                    Some((d, e)) => (d, num(e, "extra edge count")?),
                    None => (*d, 0),
                };
                let (width, height) = dims(d)?;
                GraphSpec::TorusUst { width, height, extra }
            }
            ["er", n, p] => GraphSpec::Er { n: num(n, "size")?, p: num(p, "edge probability")? },
            ["er-lambda", n, l] => GraphSpec::ErLambda { n: num(n, "size")?, lambda: num(l, "λ")? },
            _ => return Err(CliError::config(format!("unknown graph generator `{s}`"))),
        };
        match spec {
            GraphSpec::Cycle(n) if n < 3 => Err(CliError::config("cycle needs at least 3 vertices")),
            GraphSpec::Torus { width, height } | GraphSpec::TorusUst { width, height, .. }
                if width < 2 || height < 2 =>
            {
                Err(CliError::config("torus sides must be at least 2"))
            }
            _ => Ok(spec),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::RandomTree(n) => write!(f, "random-tree:{n}"),
            GraphSpec::Torus { width, height } => write!(f, "torus:{width}x{height}"),
            GraphSpec::TorusUst { width, height, extra: 0 } => write!(f, "torus-ust:{width}x{height}"),
            GraphSpec::TorusUst { width, height, extra } => write!(f, "torus-ust:{width}x{height}+{extra}"),
            GraphSpec::Er { n, p } => write!(f, "er:{n}:{p}"),
            GraphSpec::ErLambda { n, lambda } => write!(f, "er-lambda:{n}:{lambda}"),
        }
    }
}

impl GraphSpec {
    pub fn build(&self, rng: &mut RngStream) -> CliResult<Graph> {
        Ok(match *self {
            GraphSpec::Path(n) => Graph::path(n),
            GraphSpec::Cycle(n) => Graph::cycle(n),
            GraphSpec::Complete(n) => Graph::complete(n),
            GraphSpec::Star(n) => Graph::star(n),
            GraphSpec::RandomTree(n) => random_tree(n, rng),
            GraphSpec::Torus { width, height } => torus_grid(width, height)?,
            GraphSpec::TorusUst { width, height, extra } => {
                let tree = wilson_ust(&torus_grid(width, height)?, rng)?;
                add_random_edges(&tree, extra, rng)?
            }
            GraphSpec::Er { n, p } => erdos_renyi(n, p, rng)?,
            GraphSpec::ErLambda { n, lambda } => erdos_renyi_lambda(n, lambda, rng)?,
        })
    }

    /// Row-major grid shape for generators embedded in a torus.
    pub fn grid_shape(&self) -> Option<(usize, usize)> {
        match *self {
            GraphSpec::Torus { width, height } | GraphSpec::TorusUst { width, height, .. } => Some((width, height)),
            _ => None,
        }
    }
}

pub fn parse_tree_family(s: &str) -> CliResult<TreeFamily> {
    let family = match s.split_once(':') {
        None if s == "ray-leaves" => TreeFamily::RayWithLeaves,
        Some(("dary", d)) => TreeFamily::DAry(num(d, "degree")?),
        Some(("geometric", d)) => TreeFamily::Geometric(num(d, "degree")?),
        Some(("gw", pmf)) => {
            TreeFamily::GaltonWatson(pmf.split(',').map(|p| num(p, "probability")).collect::<CliResult<_>>()?)
        }
        _ => return Err(CliError::config(format!("unknown tree family `{s}`"))),
    };
    family.validate()?;
    Ok(family)
}

pub fn tree_family_name(family: &TreeFamily) -> String {
    match family {
        TreeFamily::DAry(d) => format!("dary:{d}"),
        TreeFamily::Geometric(d) => format!("geometric:{d}"),
        TreeFamily::RayWithLeaves => "ray-leaves".to_string(),
        TreeFamily::GaltonWatson(pmf) => {
            format!("gw:{}", pmf.iter().map(f64::to_string).collect::<Vec<_>>().join(","))
        }
    }
}

/// `uniform` or `p0,p1,p2`.
pub fn parse_densities(s: &str) -> CliResult<ColorDensities> {
    if s == "uniform" {
        return Ok(ColorDensities::uniform());
    }
    let p: Vec<f64> = s.split(',').map(|x| num(x, "density")).collect::<CliResult<_>>()?;
    let [p0, p1, p2] = p.as_slice() else {
        return Err(CliError::config("densities need three comma-separated values"));
    };
    Ok(ColorDensities::new(*p0, *p1, *p2)?)
}
