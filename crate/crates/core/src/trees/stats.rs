use alloc::vec;
use alloc::vec::Vec;

use libm::{exp, floor, log, log1p};

use super::{materialize_truncated_tree, TreeFamily};
use crate::ensembles::RngStream;
use crate::rate::ColorDensities;
use crate::{Error, Result};

/// Level sizes of a tree truncated at `depth`, grouped by how deep each vertex's
/// subtree reaches.
///
/// Counts are kept as natural logarithms since they overflow `f64` quickly.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelStats {
    pub depth: usize,
    /// `levels[n]` lists `(reach, ln count)`: `count` vertices at level `n` whose
    /// deepest descendant sits at level `reach` (capped at `depth`).
    pub levels: Vec<Vec<(usize, f64)>>,
}

impl LevelStats {
    /// `ln A_n`.
    pub fn ln_a_n(&self, n: usize) -> f64 {
        log_sum_exp(self.levels[n].iter().map(|&(_, l)| l))
    }

    /// `A_n`, possibly `+∞` once it leaves the `f64` range.
    pub fn a_n(&self, n: usize) -> f64 {
        exp(self.ln_a_n(n))
    }

    /// `ln A_{n,m}` for `n ≤ m ≤ depth`.
    pub fn ln_a_n_m(&self, n: usize, m: usize) -> Result<f64> {
        if n > m || m > self.depth {
            return Err(Error::Domain("A_{n,m} needs n ≤ m ≤ depth"));
        }
        Ok(log_sum_exp(self.levels[n].iter().filter(|&&(r, _)| r >= m).map(|&(_, l)| l)))
    }

    pub fn a_n_m(&self, n: usize, m: usize) -> Result<f64> {
        self.ln_a_n_m(n, m).map(exp)
    }
}

fn log_sum_exp(terms: impl Iterator<Item = f64> + Clone) -> f64 {
    let top = terms.clone().fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return top;
    }
    top + log(terms.map(|l| exp(l - top)).sum::<f64>())
}

/// `ln(2^k - 1)`.
fn ln_pow2_minus_one(k: usize) -> f64 {
    k as f64 * log(2.0) + log1p(-exp(-(k as f64) * log(2.0)))
}

/// Exact `A_n` and `A_{n,m}` of the truncation at `depth`. Only Galton–Watson
/// trees are random; they are materialized and conditioned on reaching `depth`.
pub fn level_stats(family: &TreeFamily, depth: usize, rng: &mut RngStream) -> Result<LevelStats> {
    family.validate()?;
    let levels = match family {
        TreeFamily::DAry(d) => {
            let ld = log(f64::from(*d));
            (0..=depth).map(|n| vec![(depth, n as f64 * ld)]).collect()
        }
        TreeFamily::RayWithLeaves => (0..=depth)
            .map(|n| {
                let mut level = vec![(depth, 0.0)];
                if n >= 1 {
                    level.push((n, ln_pow2_minus_one(n)));
                }
                level
            })
            .collect(),
        TreeFamily::Geometric(d) => {
            let ld = log(f64::from(*d));
            (0..=depth)
                .map(|n| {
                    let mut level = vec![(depth, 0.0)];
                    // Largest 4^k strictly below n, if its subtree reaches level n.
                    let mut top = 1usize;
                    while top * 4 < n {
                        top *= 4;
                    }
                    if n > top && n <= 2 * top {
                        level.push(((2 * top).min(depth), (n - top) as f64 * ld));
                    }
                    level
                })
                .collect()
        }
        TreeFamily::GaltonWatson(_) => {
            let tree = materialize_truncated_tree(family, &ColorDensities::uniform(), depth, rng)?;
            let n = tree.graph.n();
            let mut reach = tree.levels.clone();
            // Vertices are stored in BFS order, so children follow their parents.
            for v in (1..n).rev() {
                let p = tree.parent[v];
                reach[p] = reach[p].max(reach[v]);
            }
            let mut counts = vec![vec![0u64; depth + 1]; depth + 1];
            for v in 0..n {
                counts[tree.levels[v]][reach[v]] += 1;
            }
            counts
                .into_iter()
                .map(|row| {
                    row.into_iter().enumerate().filter(|&(_, c)| c > 0).map(|(r, c)| (r, log(c as f64))).collect()
                })
                .collect()
        }
    };
    Ok(LevelStats { depth, levels })
}

/// Finite-depth volume-entropy estimators.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyEstimates {
    /// `(1/n) ln A_n` at `n = depth`.
    pub h_hat: f64,
    /// `(1/n) ln A_{n,⌊rn⌋}` at the largest `n` with `⌊rn⌋ ≤ depth`.
    pub h_r_hat: f64,
    /// `(n, (1/n) ln A_n)` for `n = 1..=depth`.
    pub h_series: Vec<(usize, f64)>,
    /// `(n, (1/n) ln A_{n,⌊rn⌋})` for every admissible `n ≥ 1`.
    pub h_r_series: Vec<(usize, f64)>,
}

pub fn entropy_estimates(stats: &LevelStats, r: f64) -> Result<EntropyEstimates> {
    if !(r > 1.0 && r.is_finite()) {
        return Err(Error::Domain("r must exceed 1"));
    }
    let h_series: Vec<(usize, f64)> = (1..=stats.depth).map(|n| (n, stats.ln_a_n(n) / n as f64)).collect();
    let mut h_r_series = Vec::new();
    for n in 1..=stats.depth {
        let m = floor(r * n as f64) as usize;
        if m > stats.depth {
            break;
        }
        h_r_series.push((n, stats.ln_a_n_m(n, m)? / n as f64));
    }
    let (Some(&(_, h_hat)), Some(&(_, h_r_hat))) = (h_series.last(), h_r_series.last()) else {
        return Err(Error::Domain("truncation too shallow for the requested r"));
    };
    Ok(EntropyEstimates { h_hat, h_r_hat, h_series, h_r_series })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats(family: TreeFamily, depth: usize) -> LevelStats {
        level_stats(&family, depth, &mut RngStream::new(0, 0)).unwrap()
    }

    #[test]
    fn dary_counts() {
        let s = stats(TreeFamily::DAry(2), 20);
        for n in 0..=20 {
            assert!((s.a_n(n) - (1u64 << n) as f64).abs() < 1e-6);
            assert_eq!(s.a_n_m(n, 20).unwrap(), s.a_n(n));
        }
        let e = entropy_estimates(&stats(TreeFamily::DAry(5), 30), 1.5).unwrap();
        assert!(e.h_series.iter().all(|&(_, h)| (h - log(5.0)).abs() < 1e-14));
        assert!((e.h_r_hat - e.h_hat).abs() < 1e-14);
    }

    #[test]
    fn ray_with_leaves_counts() {
        let s = stats(TreeFamily::RayWithLeaves, 30);
        for n in 0..=30usize {
            assert!((s.a_n(n) / (1u64 << n) as f64 - 1.0).abs() < 1e-12);
            let m = (3 * n) / 2;
            if n >= 2 && m <= 30 {
                assert!((s.a_n_m(n, m).unwrap() - 1.0).abs() < 1e-12);
            }
        }
        let e = entropy_estimates(&s, 1.5).unwrap();
        assert_eq!(e.h_r_hat, 0.0);
        assert!((e.h_hat - log(2.0)).abs() < 1e-12);
    }

    #[test]
    fn geometric_r_entropy_bound() {
        let d = 4u32;
        let s = stats(TreeFamily::Geometric(d), 512);
        for r in [1.25, 1.5, 1.75] {
            let e = entropy_estimates(&s, r).unwrap();
            let best = e.h_r_series.iter().filter(|&&(n, _)| n >= 64).map(|&(_, h)| h).fold(f64::MIN, f64::max);
            assert!(best >= (1.0 - r / 2.0) * log(f64::from(d)) - 0.02, "r={r}: {best}");
        }
        // Level 2·4^k holds d^{4^k} subtree vertices plus the ray vertex.
        assert!((s.ln_a_n(512) - (256.0 * log(f64::from(d)))).abs() < 1e-9);
    }

    #[test]
    fn galton_watson_invariants() {
        let s = stats(TreeFamily::GaltonWatson(alloc::vec![0.2, 0.3, 0.5]), 12);
        for n in 0..=12 {
            assert_eq!(s.ln_a_n_m(n, n).unwrap(), s.ln_a_n(n));
            for m in n..=12 {
                assert!(s.ln_a_n_m(n, m).unwrap() <= s.ln_a_n(n) + 1e-12);
            }
        }
        assert!(s.a_n(12) >= 1.0);
    }

    #[test]
    fn shallow_truncation() {
        assert!(entropy_estimates(&stats(TreeFamily::DAry(2), 1), 2.5).is_err());
        assert!(entropy_estimates(&stats(TreeFamily::DAry(2), 5), 1.0).is_err());
    }
}
