use libm::{exp, expm1, lgamma, log, log1p, sqrt};

use super::{cycle_sum_zero_probability, ColorDensities};
use crate::{DynamicsKind, Error, Result};

const TREE_TERM_TOL: f64 = 1e-15;
const TREE_TERM_CAP: u32 = 200;

/// `τ(x) = Σ_{s≥1} s^{s-1} x^s / s!` for `0 ≤ x ≤ 1/e`.
///
/// Terms are summed until they drop below `1e-15`, at most 200 of them.
pub fn tree_function(x: f64) -> Result<f64> {
    if !(0.0..=exp(-1.0)).contains(&x) {
        return Err(Error::Domain("τ(x) needs 0 ≤ x ≤ 1/e"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let lx = log(x);
    let mut sum = 0.0;
    for s in 1..=TREE_TERM_CAP {
        let sf = f64::from(s);
        let term = exp((sf - 1.0) * log(sf) + sf * lx - lgamma(sf + 1.0));
        sum += term;
        if term < TREE_TERM_TOL {
            break;
        }
    }
    Ok(sum)
}

fn require_subcritical(lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::Domain("λ must lie in (0, 1)"));
    }
    Ok(())
}

fn require_supercritical(lambda: f64) -> Result<()> {
    if !(lambda > 1.0 && lambda.is_finite()) {
        return Err(Error::Domain("λ must exceed 1"));
    }
    Ok(())
}

/// Mean number of `s`-cycles in `G(n, λ/n)` as `n → ∞`:
/// `ν_s = τ(λe^{-λ})^s / (2s)`.
pub fn unicyclic_mean(lambda: f64, s: usize) -> Result<f64> {
    require_subcritical(lambda)?;
    let tau = tree_function(lambda * exp(-lambda))?;
    Ok(exp(s as f64 * log(tau)) / (2.0 * s as f64))
}

/// `c(λ) = (1-λ)^{1/2} e^{λ/2 + λ²/4}`, the limiting probability that
/// `G(n, λ/n)` has no cycles.
pub fn acyclic_limit(lambda: f64) -> Result<f64> {
    require_subcritical(lambda)?;
    Ok(sqrt(1.0 - lambda) * exp(lambda / 2.0 + lambda * lambda / 4.0))
}

/// Truncated limit `C(λ) = Π_{k=3}^{k_max} exp(-ν_k (1 - z_k))` of the
/// probability that a uniform coloring of `G(n, λ/n)` synchronizes on every
/// component, where `z_k` is the probability that a `k`-cycle has zero contour.
pub fn er_sync_constant(kind: DynamicsKind, lambda: f64, k_max: usize) -> Result<f64> {
    require_subcritical(lambda)?;
    let tau = tree_function(lambda * exp(-lambda))?;
    let log_tau = log(tau);
    let mut log_c = 0.0;
    for k in 3..=k_max {
        let nu = exp(k as f64 * log_tau) / (2.0 * k as f64);
        let z = cycle_sum_zero_probability(kind, &ColorDensities::uniform(), k)?;
        log_c -= nu * (1.0 - z);
    }
    Ok(exp(log_c))
}

/// Largest-component fraction `β_λ > 0` solving `β = 1 - e^{-λβ}`, for `λ > 1`.
pub fn giant_fraction(lambda: f64) -> Result<f64> {
    require_supercritical(lambda)?;
    // (1 - e^{-λβ})/β is decreasing in β, equal to λ > 1 at 0+ and < 1 at β = 1.
    let g = |b: f64| -expm1(-lambda * b) / b - 1.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `β(λ)`: the giant fraction at `λ' = (λ + 1)/2`.
pub fn supercritical_beta(lambda: f64) -> Result<f64> {
    require_supercritical(lambda)?;
    giant_fraction((lambda + 1.0) / 2.0)
}

/// Large-deviation rate `A(x, λ)` for the largest component of `G(n, λ/n)`
/// holding fewer than `xn` vertices.
pub fn component_rate(x: f64, lambda: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain("A(x, λ) needs 0 < x < 1"));
    }
    if !(lambda > 0.0) {
        return Err(Error::Domain("A(x, λ) needs λ > 0"));
    }
    Ok(-x * log(-expm1(-lambda * x)) + x * log(x) + (1.0 - x) * log1p(-x) + lambda * x * (1.0 - x))
}

/// Exponential rate `D(λ)` of the bound on the probability that a uniform
/// coloring of `G(n, λ/n)` fails to oscillate on its largest component.
pub fn oscillation_rate(lambda: f64) -> Result<f64> {
    let beta = supercritical_beta(lambda)?;
    let lp = (lambda + 1.0) / 2.0;
    let a = 192.0 * component_rate(beta / 2.0, lp)?;
    let m = 4.0 * beta * (-expm1(-(lambda - 1.0) * beta / 24.0)) * log(9.0 / 7.0);
    Ok(a.min(beta).min(m) / 384.0)
}

/// The Erdős–Rényi constants at one `λ`; each field carries its own domain error.
#[derive(Debug, Clone, PartialEq)]
pub struct ErConstants {
    pub lambda: f64,
    /// `c(λ)`, defined for `λ ∈ (0, 1)`.
    pub c: Result<f64>,
    /// `β(λ)` at `λ' = (λ+1)/2`, defined for `λ > 1`.
    pub beta: Result<f64>,
    /// `D(λ)`, defined for `λ > 1`.
    pub d: Result<f64>,
}

impl ErConstants {
    /// `A(x, λ)` at this record's `λ`.
    pub fn a(&self, x: f64) -> Result<f64> {
        component_rate(x, self.lambda)
    }
}

pub fn er_constants(lambda: f64) -> ErConstants {
    ErConstants {
        lambda,
        c: acyclic_limit(lambda),
        beta: supercritical_beta(lambda),
        d: oscillation_rate(lambda),
    }
}
