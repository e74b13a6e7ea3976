use alloc::vec;
use core::ops::{Add, Mul};

use num_rational::Ratio;
use num_traits::Zero;

use super::ColorDensities;
use crate::{DynamicsKind, Error, Result};

/// Exact densities for [`cycle_sum_zero_probability_exact`].
pub type ExactDensities = [Ratio<i128>; 3];

/// Largest cycle length evaluated in exact arithmetic. With denominators `3^k`
/// the `i128` DP stays far from overflow up to here.
pub const EXACT_CYCLE_LIMIT: usize = 12;

/// `P(∮_{C_k} dX_0 = 0)` for i.i.d. colors on a `k`-cycle, as `f64`.
pub fn cycle_sum_zero_probability(kind: DynamicsKind, densities: &ColorDensities, k: usize) -> Result<f64> {
    zero_sum_dp(kind, densities.as_array(), k)
}

/// Exact version of [`cycle_sum_zero_probability`] for `3 ≤ k ≤ EXACT_CYCLE_LIMIT`.
pub fn cycle_sum_zero_probability_exact(
    kind: DynamicsKind,
    densities: &ExactDensities,
    k: usize,
) -> Result<Ratio<i128>> {
    if k > EXACT_CYCLE_LIMIT {
        return Err(Error::Domain("exact cycle sums are limited to k ≤ 12"));
    }
    let total = densities[0] + densities[1] + densities[2];
    if densities.iter().any(|p| *p < Ratio::zero()) || total != Ratio::from_integer(1) {
        return Err(Error::BadDensities("densities must be nonnegative and sum to 1"));
    }
    zero_sum_dp(kind, *densities, k)
}

/// Forward DP over `(first color, current color, running sum)`; the closing
/// edge back to the first vertex is added at the end.
fn zero_sum_dp<T>(kind: DynamicsKind, p: [T; 3], k: usize) -> Result<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    if k < 3 {
        return Err(Error::Domain("cycles have length k ≥ 3"));
    }
    let width = 2 * k + 1;
    let idx = |first: usize, cur: usize, sum: i64| (first * 3 + cur) * width + (sum + k as i64) as usize;
    let mut cur = vec![T::zero(); 9 * width];
    for c in 0..3 {
        cur[idx(c, c, 0)] = p[c].clone();
    }
    // k - 1 open steps along the path v_0 … v_{k-1}.
    for step in 1..k {
        let reach = step as i64 - 1;
        let mut next = vec![T::zero(); 9 * width];
        for first in 0..3 {
            for a in 0..3 {
                for sum in -reach..=reach {
                    let w = cur[idx(first, a, sum)].clone();
                    if w.is_zero() {
                        continue;
                    }
                    for b in 0..3 {
                        let s = sum + i64::from(kind.increment(a as u8, b as u8));
                        let slot = &mut next[idx(first, b, s)];
                        *slot = slot.clone() + w.clone() * p[b].clone();
                    }
                }
            }
        }
        cur = next;
    }
    let mut total = T::zero();
    let reach = k as i64 - 1;
    for first in 0..3 {
        for last in 0..3 {
            let close = i64::from(kind.increment(last as u8, first as u8));
            let sum = -close;
            if sum.abs() <= reach {
                total = total + cur[idx(first, last, sum)].clone();
            }
        }
    }
    Ok(total)
}
