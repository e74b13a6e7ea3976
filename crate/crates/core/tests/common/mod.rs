#![allow(dead_code)]

use excitable_core::ensembles::{add_random_edges, random_coloring, random_tree};
use excitable_core::rate::ColorDensities;
use excitable_core::{Coloring, Graph, RngStream};
use rand::Rng;

/// Connected graph on `n` vertices: a uniform tree plus up to `extra` random edges.
pub fn random_connected(n: usize, extra: usize, rng: &mut RngStream) -> Graph {
    let t = random_tree(n, rng);
    let missing = n * n.saturating_sub(1) / 2 - t.edge_count();
    add_random_edges(&t, extra.min(missing), rng).unwrap()
}

pub fn uniform_coloring(n: usize, rng: &mut RngStream) -> Coloring {
    random_coloring(n, &ColorDensities::uniform(), rng)
}

pub fn size_in(rng: &mut RngStream, lo: usize, hi: usize) -> usize {
    rng.random_range(lo..=hi)
}
