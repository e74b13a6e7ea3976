//! Seeded random colorings, graphs, spanning trees and the matching-cycle
//! certificate.
//!
//! All randomness flows through [`RngStream`], a ChaCha8 generator addressed by a
//! 64-bit seed and a stream index. Every generator here is a pure function of its
//! parameters and the stream it is handed.

mod certificate;
mod graphs;
mod rng;

pub use certificate::{find_certificate, CycleMatchingCertificate, ER_CERTIFICATE_CONSTANT};
pub use graphs::{add_random_edges, erdos_renyi, erdos_renyi_lambda, random_tree, torus_grid, wilson_ust};
pub use rng::RngStream;
pub(crate) use rng::splitmix64;

use alloc::vec::Vec;
use rand::Rng;

use crate::rate::ColorDensities;
use crate::{Coloring, Error, Result};

/// I.i.d. 3-coloring with marginals `densities`.
pub fn random_coloring(n: usize, densities: &ColorDensities, rng: &mut RngStream) -> Coloring {
    let [p0, p1, _] = densities.as_array();
    let colors = (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            if u < p0 {
                0
            } else if u < p0 + p1 {
                1
            } else {
                2
            }
        })
        .collect();
    Coloring::new(3, colors).expect("colors below 3")
}

/// Uniform i.i.d. `κ`-coloring.
pub fn uniform_coloring(n: usize, kappa: u8, rng: &mut RngStream) -> Result<Coloring> {
    if kappa < 2 {
        return Err(Error::BadKappa(kappa));
    }
    let colors: Vec<u8> = (0..n).map(|_| rng.random_range(0..kappa)).collect();
    Coloring::new(kappa, colors)
}
