use libm::{exp, expm1, log, log1p, sinh, sqrt};

use super::ColorDensities;
use crate::{DynamicsKind, Error, Result};

/// Two values closer than this are treated as the ceiling `B`.
const CEILING_TOL: f64 = 1e-12;

/// `Λ` and `Λ*` for one dynamics kind and one product measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateFunction {
    pub kind: DynamicsKind,
    pub densities: ColorDensities,
}

/// `Λ*(u)` together with the maximizing `t` when it is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendrePoint {
    pub u: f64,
    /// `+∞` above the ceiling.
    pub value: f64,
    pub argmax_t: Option<f64>,
}

impl RateFunction {
    pub fn new(kind: DynamicsKind, densities: ColorDensities) -> Self {
        RateFunction { kind, densities }
    }

    /// Speed ceiling: 1 for CCA, 1/3 for GHM.
    pub fn ceiling(&self) -> f64 {
        match self.kind {
            DynamicsKind::Cca => 1.0,
            DynamicsKind::Ghm => 1.0 / 3.0,
        }
    }

    /// `Λ*(B) = -log(p0 p1 p2) / 3`; infinite if a density vanishes.
    pub fn ceiling_value(&self) -> f64 {
        -log(self.densities.product()) / 3.0
    }

    /// `Λ(t)` for `t ≥ 0`.
    pub fn lambda(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain("Λ is evaluated on t ≥ 0"));
        }
        let s = match self.kind {
            DynamicsKind::Cca => 3.0 * t,
            DynamicsKind::Ghm => t,
        };
        Ok(log_cubic_root(self.densities.product(), s))
    }

    /// `Λ*(u) = sup_{t ≥ 0} [u t - Λ(t)]`.
    pub fn legendre(&self, u: f64) -> Result<LegendrePoint> {
        if !(u >= 0.0) {
            return Err(Error::Domain("Λ* is evaluated on u ≥ 0"));
        }
        let b = self.ceiling();
        if u == 0.0 {
            return Ok(LegendrePoint { u, value: 0.0, argmax_t: Some(0.0) });
        }
        if self.densities.product() == 0.0 {
            // Λ ≡ 0, so the supremum is infinite for every u > 0.
            return Ok(LegendrePoint { u, value: f64::INFINITY, argmax_t: None });
        }
        if (u - b).abs() < CEILING_TOL {
            return Ok(LegendrePoint { u, value: self.ceiling_value(), argmax_t: None });
        }
        if u > b {
            return Ok(LegendrePoint { u, value: f64::INFINITY, argmax_t: None });
        }
        let phi = |t: f64| u * t - self.lambda(t).expect("t ≥ 0");
        // φ is concave; double until it stops increasing.
        let mut hi = 1.0;
        while phi(2.0 * hi) > phi(hi) && hi < 1e6 {
            hi *= 2.0;
        }
        let (t, value) = golden_max(phi, 0.0, 2.0 * hi);
        Ok(LegendrePoint { u, value, argmax_t: Some(t) })
    }

    /// Predicted cloud speed on a tree with `log br = h`.
    ///
    /// Returns `B` when `h ≥ -log(p0 p1 p2)/3`, otherwise the root of `Λ*(v) = h`
    /// on `[0, B]`.
    pub fn predict_cloud_speed(&self, log_br: f64, entropy: f64) -> Result<f64> {
        if (log_br - entropy).abs() > CEILING_TOL {
            return Err(Error::HypothesisViolated { log_br, entropy });
        }
        if !(entropy >= 0.0) {
            return Err(Error::Domain("volume entropy must be nonnegative"));
        }
        let b = self.ceiling();
        if self.densities.product() == 0.0 {
            return Ok(0.0);
        }
        if entropy >= self.ceiling_value() - CEILING_TOL {
            return Ok(b);
        }
        let (mut lo, mut hi) = (0.0f64, b);
        while hi - lo > 1e-15 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.legendre(mid)?.value < entropy {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

/// `log x` for the largest root of `x³ - x² = P·(e^s + e^{-s} - 2)`.
fn log_cubic_root(product: f64, s: f64) -> f64 {
    if product == 0.0 || s == 0.0 {
        return 0.0;
    }
    // e^s + e^{-s} - 2 = (2 sinh(s/2))², taken in log space to survive large s.
    let log_sinh2 = if s > 40.0 { s / 2.0 + log1p(-exp(-s)) } else { log(2.0 * sinh(s / 2.0)) };
    let log_rhs = log(product) + 2.0 * log_sinh2;
    if log_rhs <= 0.0 {
        // x = 1 + δ with δ (1 + δ)² = R, δ ∈ [0, R].
        let r = exp(log_rhs);
        let delta = newton_bracketed(|d| d * (1.0 + d) * (1.0 + d) - r, |d| (1.0 + d) * (1.0 + 3.0 * d), 0.0, r);
        log1p(delta)
    } else {
        // x = R^{1/3} y with y³ - σ y² - 1 = 0, σ = R^{-1/3}, y ∈ [1, 1 + σ].
        let sigma = exp(-log_rhs / 3.0);
        let y = newton_bracketed(|y| y * y * (y - sigma) - 1.0, |y| y * (3.0 * y - 2.0 * sigma), 1.0, 1.0 + sigma);
        log_rhs / 3.0 + log(y)
    }
}

/// Root of an increasing `f` on `[lo, hi]` with `f(lo) ≤ 0 ≤ f(hi)`; Newton steps
/// that leave the bracket fall back to bisection.
fn newton_bracketed(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let d = df(x);
        let mut next = x - fx / d;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-17 * (1.0 + x.abs()) || hi - lo <= 1e-17 * (1.0 + x.abs()) {
            return next;
        }
        x = next;
    }
    x
}

/// Golden-section maximization of a concave function.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (sqrt(5.0) - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..400 {
        if b - a <= 1e-13 * (1.0 + a.abs()) {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    let ft = f(t);
    [(t, ft), (c, fc), (d, fd)].into_iter().fold((t, ft), |best, cand| if cand.1 > best.1 { cand } else { best })
}

/// `Λ_CCA(t) = log(1 + e^t + e^{-t}) - log 3` for uniform densities.
pub fn closed_form_lambda_uniform(t: f64) -> f64 {
    // log(1 + 2 cosh t) - log 3 = log(1 + 2 (cosh t - 1) / 3)
    log1p((expm1(t) + expm1(-t)) / 3.0)
}

/// `Λ*_CCA(u)` for uniform densities; `+∞` above 1.
pub fn closed_form_legendre_uniform(u: f64) -> f64 {
    if u > 1.0 {
        return f64::INFINITY;
    }
    let ln3 = log(3.0);
    if u == 1.0 {
        return ln3;
    }
    let root = sqrt(4.0 - 3.0 * u * u);
    let first = if u == 0.0 { 0.0 } else { u * log((u + root) / (2.0 * (1.0 - u))) };
    first - log((1.0 + root) / (1.0 - u * u)) + ln3
}
