//! Infinite rooted trees, tree-indexed walks `S_σ` and growth statistics.
//!
//! A tree is never stored. Every vertex carries a 64-bit key derived from its
//! parent's key and its child index, so its color (and, for Galton–Watson trees,
//! its offspring count) is a pure function of the tree seed and the path from
//! the root. Depth-first traversals therefore need only `O(depth)` memory.

mod stats;
mod truncated;
mod walk;

pub use stats::{entropy_estimates, level_stats, EntropyEstimates, LevelStats};
pub use truncated::{materialize_truncated_tree, simulate_on_truncated_tree, TruncatedTree, MATERIALIZE_LIMIT};
pub use walk::{
    estimate_cloud_speed, estimate_cloud_speed_histogram, estimate_cloud_speed_with_budget, WalkFrontier,
    DEFAULT_NODE_BUDGET,
};

use alloc::vec::Vec;

use libm::log;

use crate::ensembles::RngStream;
use crate::rate::ColorDensities;
use crate::{Error, Result};
use rand::RngCore;

/// Galton–Watson trees that die out before the target depth are redrawn at most
/// this many times.
pub const MAX_SURVIVAL_ATTEMPTS: u32 = 1000;

/// A locally finite infinite rooted tree.
#[derive(Debug, Clone, PartialEq)]
pub enum TreeFamily {
    /// Every vertex has `d` children.
    DAry(u32),
    /// Offspring counts i.i.d. with `pmf[k] = P(k children)`.
    GaltonWatson(Vec<f64>),
    /// A ray with a `d`-ary tree of depth `4^k` hanging from the ray vertex at
    /// level `4^k`, for every `k ≥ 0`.
    Geometric(u32),
    /// A ray whose vertex at level `k` also carries `2^{k+1} - 1` leaves, so that
    /// level `k` holds exactly `2^k` vertices.
    RayWithLeaves,
}

/// Growth invariants known in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForms {
    pub log_br: f64,
    pub h: f64,
    pub h_bar: f64,
}

impl TreeFamily {
    pub fn validate(&self) -> Result<()> {
        match self {
            TreeFamily::DAry(d) | TreeFamily::Geometric(d) if *d < 2 => Err(Error::Domain("tree degree d must be at least 2")),
            TreeFamily::GaltonWatson(pmf) => {
                let total: f64 = pmf.iter().sum();
                if pmf.is_empty() || pmf.iter().any(|p| !(*p >= 0.0)) || (total - 1.0).abs() > 1e-12 {
                    Err(Error::Domain("offspring distribution must be a probability vector"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// `log br`, `h` and `h̄`. Galton–Watson values hold almost surely on
    /// survival and are only reported for supercritical offspring laws.
    pub fn closed_forms(&self) -> Option<ClosedForms> {
        match self {
            TreeFamily::DAry(d) => {
                let l = log(f64::from(*d));
                Some(ClosedForms { log_br: l, h: l, h_bar: l })
            }
            TreeFamily::GaltonWatson(pmf) => {
                let mean: f64 = pmf.iter().enumerate().map(|(k, p)| k as f64 * p).sum();
                (mean > 1.0).then(|| {
                    let l = log(mean);
                    ClosedForms { log_br: l, h: l, h_bar: l }
                })
            }
            TreeFamily::Geometric(d) => {
                let h = log(f64::from(*d)) / 2.0;
                Some(ClosedForms { log_br: 0.0, h, h_bar: h })
            }
            TreeFamily::RayWithLeaves => Some(ClosedForms { log_br: 0.0, h: log(2.0), h_bar: 0.0 }),
        }
    }

    fn needs_survival(&self) -> bool {
        matches!(self, TreeFamily::GaltonWatson(_))
    }

    /// Number of children of a vertex.
    fn child_count(&self, node: &Node, level: usize) -> u64 {
        match (self, node.role) {
            (TreeFamily::DAry(d), _) => u64::from(*d),
            (TreeFamily::GaltonWatson(pmf), _) => {
                let u = unit(splitmix(node.key ^ 0x6a09_e667_f3bc_c908));
                let mut acc = 0.0;
                for (k, p) in pmf.iter().enumerate() {
                    acc += p;
                    if u < acc {
                        return k as u64;
                    }
                }
                pmf.iter().rposition(|&p| p > 0.0).unwrap_or(0) as u64
            }
            (TreeFamily::Geometric(d), Role::Ray) => 1 + if is_power_of_four(level) { u64::from(*d) } else { 0 },
            (TreeFamily::Geometric(d), Role::Subtree { bottom }) => {
                if level < bottom {
                    u64::from(*d)
                } else {
                    0
                }
            }
            (TreeFamily::RayWithLeaves, Role::Ray) => leaves_at(level) + 1,
            (_, _) => 0,
        }
    }

    /// Role of child `index`; the ray continues through child 0.
    fn child_role(&self, node: &Node, level: usize, index: u64) -> Role {
        match (self, node.role) {
            (TreeFamily::Geometric(_), Role::Ray) if index > 0 => Role::Subtree { bottom: 2 * level },
            (TreeFamily::RayWithLeaves, Role::Ray) if index > 0 => Role::Leaf,
            (_, role) => role,
        }
    }

    fn root(&self, tree_seed: u64, densities: &ColorDensities) -> Node {
        let key = splitmix(tree_seed);
        let role = match self {
            TreeFamily::DAry(_) | TreeFamily::GaltonWatson(_) => Role::Plain,
            _ => Role::Ray,
        };
        Node { key, color: color_of(key, densities), role }
    }

    fn child(&self, parent: &Node, level: usize, index: u64, densities: &ColorDensities) -> Node {
        let key = splitmix(parent.key.wrapping_add((index + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)));
        Node { key, color: color_of(key, densities), role: self.child_role(parent, level, index) }
    }
}

/// Leaves on the ray vertex at `level` of [`TreeFamily::RayWithLeaves`].
fn leaves_at(level: usize) -> u64 {
    if level >= 63 {
        u64::MAX - 1
    } else {
        (1u64 << (level + 1)) - 1
    }
}

fn is_power_of_four(n: usize) -> bool {
    n.is_power_of_two() && n.trailing_zeros() % 2 == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Plain,
    Ray,
    Subtree { bottom: usize },
    Leaf,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    key: u64,
    color: u8,
    role: Role,
}

fn splitmix(x: u64) -> u64 {
    crate::ensembles::splitmix64(x)
}

fn unit(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn color_of(key: u64, densities: &ColorDensities) -> u8 {
    let u = unit(key);
    let [p0, p1, _] = densities.as_array();
    if u < p0 {
        0
    } else if u < p0 + p1 {
        1
    } else {
        2
    }
}

fn draw_tree_seed(rng: &mut RngStream) -> u64 {
    rng.next_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let l2 = log(2.0);
        assert_eq!(TreeFamily::DAry(2).closed_forms().unwrap().h, l2);
        let g = TreeFamily::Geometric(16).closed_forms().unwrap();
        assert_eq!((g.log_br, g.h), (0.0, log(16.0) / 2.0));
        let r = TreeFamily::RayWithLeaves.closed_forms().unwrap();
        assert_eq!((r.log_br, r.h), (0.0, l2));
        assert!(TreeFamily::GaltonWatson(alloc::vec![0.5, 0.5]).closed_forms().is_none());
    }

    #[test]
    fn validation() {
        assert!(TreeFamily::DAry(1).validate().is_err());
        assert!(TreeFamily::GaltonWatson(alloc::vec![0.5, 0.6]).validate().is_err());
        assert!(TreeFamily::GaltonWatson(alloc::vec![0.25, 0.25, 0.5]).validate().is_ok());
    }

    #[test]
    fn geometric_degrees() {
        let f = TreeFamily::Geometric(3);
        let ray = Node { key: 0, color: 0, role: Role::Ray };
        assert_eq!(f.child_count(&ray, 0), 1);
        assert_eq!(f.child_count(&ray, 1), 4);
        assert_eq!(f.child_count(&ray, 2), 1);
        assert_eq!(f.child_count(&ray, 16), 4);
        assert_eq!(f.child_role(&ray, 16, 2), Role::Subtree { bottom: 32 });
        let sub = Node { key: 0, color: 0, role: Role::Subtree { bottom: 32 } };
        assert_eq!(f.child_count(&sub, 31), 3);
        assert_eq!(f.child_count(&sub, 32), 0);
    }
}
