use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_distr::{Binomial, Distribution, Poisson};

use super::{draw_tree_seed, is_power_of_four, leaves_at, Node, TreeFamily, MAX_SURVIVAL_ATTEMPTS};
use crate::ensembles::RngStream;
use crate::rate::ColorDensities;
use crate::{DynamicsKind, Error, Result};

/// Abort a depth-first traversal after this many visited vertices.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Histogram cells are capped here; far beyond any count that affects where the
/// front of the walk sits.
const COUNT_CAP: f64 = 1e150;

/// Per-level maxima `max_{|σ|=n} S_σ` of a tree-indexed walk.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkFrontier {
    pub level_max: Vec<i64>,
    /// Vertices visited by a depth-first traversal; `None` for the histogram engine.
    pub nodes_visited: Option<u64>,
}

impl WalkFrontier {
    /// Deepest level reached.
    pub fn level(&self) -> usize {
        self.level_max.len() - 1
    }

    /// `max_{|σ|=n} S_σ` at the deepest level.
    pub fn max_partial_sum(&self) -> i64 {
        *self.level_max.last().expect("level 0 is always present")
    }

    /// `max_{|σ|≤n} S_σ`, which equals `ne_n(root)`.
    pub fn running_max(&self) -> Vec<i64> {
        let mut best = i64::MIN;
        self.level_max
            .iter()
            .map(|&m| {
                best = best.max(m);
                best
            })
            .collect()
    }

    /// `max_{|σ|=depth} S_σ / depth`.
    pub fn speed_estimate(&self) -> f64 {
        match self.level() {
            0 => 0.0,
            d => self.max_partial_sum() as f64 / d as f64,
        }
    }
}

/// Depth-first estimate with the default node budget.
pub fn estimate_cloud_speed(
    family: &TreeFamily,
    kind: DynamicsKind,
    densities: &ColorDensities,
    depth: usize,
    rng: &mut RngStream,
) -> Result<WalkFrontier> {
    estimate_cloud_speed_with_budget(family, kind, densities, depth, rng, DEFAULT_NODE_BUDGET)
}

/// Streams the truncation of `family` at `depth` depth-first, sampling colors
/// from vertex keys, and records the per-level maxima of `S_σ`.
///
/// Galton–Watson trees are conditioned on reaching `depth` by redrawing.
pub fn estimate_cloud_speed_with_budget(
    family: &TreeFamily,
    kind: DynamicsKind,
    densities: &ColorDensities,
    depth: usize,
    rng: &mut RngStream,
    node_budget: u64,
) -> Result<WalkFrontier> {
    family.validate()?;
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1"));
    }
    for _ in 0..MAX_SURVIVAL_ATTEMPTS {
        let seed = draw_tree_seed(rng);
        let frontier = dfs(family, kind, densities, depth, seed, node_budget)?;
        if frontier.level_max[depth] != i64::MIN {
            return Ok(frontier);
        }
        if !family.needs_survival() {
            unreachable!("families without leaves reach every depth");
        }
    }
    Err(Error::Extinct { depth, attempts: MAX_SURVIVAL_ATTEMPTS })
}

struct Frame {
    node: Node,
    s: i64,
    next_child: u64,
    children: u64,
}

fn dfs(
    family: &TreeFamily,
    kind: DynamicsKind,
    densities: &ColorDensities,
    depth: usize,
    seed: u64,
    node_budget: u64,
) -> Result<WalkFrontier> {
    let mut level_max = vec![i64::MIN; depth + 1];
    let root = family.root(seed, densities);
    level_max[0] = 0;
    let mut visited = 1u64;
    let mut stack = Vec::with_capacity(depth + 1);
    stack.push(Frame { node: root, s: 0, next_child: 0, children: family.child_count(&root, 0) });
    loop {
        let level = match stack.len() {
            0 => break,
            len => len - 1,
        };
        let top = stack.last_mut().expect("nonempty");
        if level == depth || top.next_child == top.children {
            stack.pop();
            continue;
        }
        let index = top.next_child;
        top.next_child += 1;
        let child = family.child(&top.node, level, index, densities);
        let s = top.s + i64::from(kind.increment(top.node.color, child.color));
        visited += 1;
        if visited > node_budget {
            let partial = level_max.iter().map(|&m| (m != i64::MIN).then_some(m)).collect();
            return Err(Error::NodeBudgetExceeded { limit: node_budget, visited, partial_level_max: partial });
        }
        let slot = &mut level_max[level + 1];
        *slot = (*slot).max(s);
        let children = if level + 1 < depth { family.child_count(&child, level + 1) } else { 0 };
        stack.push(Frame { node: child, s, next_child: 0, children });
    }
    Ok(WalkFrontier { level_max, nodes_visited: Some(visited) })
}

/// Counts of vertices per `(color, S)` on one level, `S ∈ [-span, span]`.
#[derive(Clone)]
struct Histogram {
    span: i64,
    cells: Vec<f64>,
}

impl Histogram {
    fn new(span: usize) -> Self {
        Histogram { span: span as i64, cells: vec![0.0; 3 * (2 * span + 1)] }
    }

    fn idx(&self, color: u8, s: i64) -> usize {
        usize::from(color) * (2 * self.span as usize + 1) + (s + self.span) as usize
    }

    fn add(&mut self, color: u8, s: i64, count: f64) {
        let i = self.idx(color, s);
        self.cells[i] = (self.cells[i] + count).min(COUNT_CAP);
    }

    fn max_s(&self) -> Option<i64> {
        let w = 2 * self.span as usize + 1;
        (0..w).rev().find(|&j| (0..3).any(|c| self.cells[c * w + j] > 0.0)).map(|j| j as i64 - self.span)
    }

    fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| c == 0.0)
    }

    fn clear(&mut self) {
        self.cells.iter_mut().for_each(|c| *c = 0.0);
    }
}

/// Splits `total` children into colors according to `densities`: exact
/// multinomial while the total fits a `u64`, expected counts beyond that
/// (Poisson for the rare small cells).
fn split_colors(total: f64, densities: &ColorDensities, rng: &mut RngStream) -> [f64; 3] {
    let p = densities.as_array();
    if total <= 0.0 {
        return [0.0; 3];
    }
    if total < 1.8e19 {
        let mut left = libm::round(total) as u64;
        let mut rest = 1.0;
        let mut out = [0.0; 3];
        for c in 0..2 {
            let q = if rest > 0.0 { (p[c] / rest).clamp(0.0, 1.0) } else { 0.0 };
            let k = if left == 0 || q == 0.0 {
                0
            } else if q >= 1.0 {
                left
            } else {
                Binomial::new(left, q).expect("valid binomial").sample(rng)
            };
            out[c] = k as f64;
            left -= k;
            rest -= p[c];
        }
        out[2] = left as f64;
        return out;
    }
    core::array::from_fn(|c| {
        let mean = total * p[c];
        if mean == 0.0 {
            0.0
        } else if mean < 1e12 {
            Poisson::new(mean).expect("positive mean").sample(rng)
        } else {
            mean
        }
    })
}

fn branch_into(from: &Histogram, to: &mut Histogram, per_vertex: f64, kind: DynamicsKind, d: &ColorDensities, rng: &mut RngStream) {
    for c in 0..3u8 {
        for s in -from.span..=from.span {
            let n = from.cells[from.idx(c, s)];
            if n == 0.0 {
                continue;
            }
            let parts = split_colors(n * per_vertex, d, rng);
            for (c2, &k) in parts.iter().enumerate() {
                if k > 0.0 {
                    to.add(c2 as u8, s + i64::from(kind.increment(c, c2 as u8)), k);
                }
            }
        }
    }
}

fn sample_color(d: &ColorDensities, rng: &mut RngStream) -> u8 {
    let u: f64 = rng.random();
    let [p0, p1, _] = d.as_array();
    if u < p0 {
        0
    } else if u < p0 + p1 {
        1
    } else {
        2
    }
}

/// Level-by-level estimate that tracks how many vertices of each level sit in
/// each `(color, S)` state instead of visiting vertices.
///
/// Given a level's histogram, the colors of the next level are independent
/// across vertices, so the next histogram is a multinomial split of each cell.
/// This has the same law as the per-level maxima of the depth-first engine but
/// costs `O(depth²)` regardless of level sizes. Galton–Watson trees are not
/// supported.
pub fn estimate_cloud_speed_histogram(
    family: &TreeFamily,
    kind: DynamicsKind,
    densities: &ColorDensities,
    depth: usize,
    rng: &mut RngStream,
) -> Result<WalkFrontier> {
    family.validate()?;
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1"));
    }
    let mut level_max = Vec::with_capacity(depth + 1);
    level_max.push(0);
    let root_color = sample_color(densities, rng);
    match family {
        TreeFamily::DAry(d) => {
            let mut cur = Histogram::new(depth);
            cur.add(root_color, 0, 1.0);
            for _ in 0..depth {
                let mut next = Histogram::new(depth);
                branch_into(&cur, &mut next, f64::from(*d), kind, densities, rng);
                level_max.push(next.max_s().expect("d-ary levels are nonempty"));
                cur = next;
            }
        }
        TreeFamily::Geometric(d) => {
            let (mut ray_color, mut ray_s) = (root_color, 0i64);
            let mut sub = Histogram::new(depth);
            let mut bottom = 0usize;
            for level in 0..depth {
                let mut next = Histogram::new(depth);
                if !sub.is_empty() && level < bottom {
                    branch_into(&sub, &mut next, f64::from(*d), kind, densities, rng);
                }
                if is_power_of_four(level) {
                    bottom = 2 * level;
                    let mut ray = Histogram::new(depth);
                    ray.add(ray_color, ray_s, 1.0);
                    branch_into(&ray, &mut next, f64::from(*d), kind, densities, rng);
                }
                let c = sample_color(densities, rng);
                ray_s += i64::from(kind.increment(ray_color, c));
                ray_color = c;
                level_max.push(next.max_s().map_or(ray_s, |m| m.max(ray_s)));
                sub = next;
                if level + 1 >= bottom {
                    sub.clear();
                }
            }
        }
        TreeFamily::RayWithLeaves => {
            let (mut ray_color, mut ray_s) = (root_color, 0i64);
            for level in 0..depth {
                let leaves = split_colors(leaves_at(level) as f64, densities, rng);
                let leaf_max = (0..3u8)
                    .filter(|&c| leaves[usize::from(c)] > 0.0)
                    .map(|c| ray_s + i64::from(kind.increment(ray_color, c)))
                    .max();
                let c = sample_color(densities, rng);
                ray_s += i64::from(kind.increment(ray_color, c));
                ray_color = c;
                level_max.push(leaf_max.map_or(ray_s, |m| m.max(ray_s)));
            }
        }
        TreeFamily::GaltonWatson(_) => return Err(Error::UnsupportedFamily),
    }
    Ok(WalkFrontier { level_max, nodes_visited: None })
}
