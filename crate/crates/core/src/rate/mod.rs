//! Rate functions of the tree-indexed walk and the constants of the
//! Erdős–Rényi phase transition.
//!
//! `Λ_CCA(t) = log x(t)` where `x(t)` is the largest root of
//! `x³ - x² = p0·p1·p2·(e^{3t} + e^{-3t} - 2)`, and `Λ_GHM(t) = Λ_CCA(t/3)`.
//! The speed ceiling `B` is 1 for CCA and 1/3 for GHM; `Λ*` is finite on `[0, B]`
//! with `Λ*(B) = -log(p0·p1·p2)/3`.

mod cramer;
mod cycles;
mod erdos_renyi;
mod transfer;

pub use cramer::{closed_form_lambda_uniform, closed_form_legendre_uniform, LegendrePoint, RateFunction};
pub use cycles::{
    cycle_sum_zero_probability, cycle_sum_zero_probability_exact, ExactDensities, EXACT_CYCLE_LIMIT,
};
pub use erdos_renyi::{
    acyclic_limit, component_rate, er_constants, er_sync_constant, giant_fraction, oscillation_rate,
    supercritical_beta, tree_function, unicyclic_mean, ErConstants,
};
pub use transfer::{transfer_lambda, transfer_matrix};

use crate::{Error, Result};

/// Marginal color densities `(p0, p1, p2)` of a product measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColorDensities {
    p: [f64; 3],
}

impl ColorDensities {
    pub const UNIFORM: ColorDensities = ColorDensities { p: [1.0 / 3.0; 3] };

    pub fn new(p0: f64, p1: f64, p2: f64) -> Result<Self> {
        let p = [p0, p1, p2];
        if p.iter().any(|x| !(0.0..=1.0).contains(x)) {
            return Err(Error::BadDensities("each density must lie in [0, 1]"));
        }
        if ((p0 + p1) + p2 - 1.0).abs() > 1e-12 {
            return Err(Error::BadDensities("densities must sum to 1"));
        }
        Ok(ColorDensities { p })
    }

    pub fn uniform() -> Self {
        Self::UNIFORM
    }

    #[inline]
    pub fn get(&self, color: usize) -> f64 {
        self.p[color]
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.p
    }

    pub fn product(&self) -> f64 {
        self.p[0] * self.p[1] * self.p[2]
    }

    /// Densities with colors relabelled: new color `i` gets old density `p[perm[i]]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        ColorDensities { p: [self.p[perm[0]], self.p[perm[1]], self.p[perm[2]]] }
    }
}

impl Default for ColorDensities {
    fn default() -> Self {
        Self::UNIFORM
    }
}
