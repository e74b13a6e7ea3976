use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use libm::{floor, log1p};
use rand::seq::SliceRandom;
use rand::Rng;

use super::RngStream;
use crate::{Error, Graph, Result};

/// `G(n, p)` by geometric skipping over the `C(n, 2)` vertex pairs.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut RngStream) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain("edge probability must lie in [0, 1]"));
    }
    if p == 0.0 || n < 2 {
        return Ok(Graph::empty(n));
    }
    if p == 1.0 {
        return Ok(Graph::complete(n));
    }
    let log_q = log1p(-p);
    let mut edges = Vec::new();
    // Pairs (v, w) with w < v in lexicographic order.
    let (mut v, mut w) = (1usize, -1i64);
    while v < n {
        let r: f64 = rng.random();
        let skip = floor(log1p(-r) / log_q);
        w += 1 + if skip < n as f64 * n as f64 { skip as i64 } else { (n * n) as i64 };
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as usize, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `G(n, λ/n)`.
pub fn erdos_renyi_lambda(n: usize, lambda: f64, rng: &mut RngStream) -> Result<Graph> {
    if n == 0 {
        return Ok(Graph::empty(0));
    }
    erdos_renyi(n, (lambda / n as f64).min(1.0), rng)
}

/// Uniform spanning tree by Wilson's algorithm (loop-erased random walks
/// rooted at vertex 0).
pub fn wilson_ust(base: &Graph, rng: &mut RngStream) -> Result<Graph> {
    base.require_connected()?;
    let n = base.n();
    if n == 0 {
        return Ok(Graph::empty(0));
    }
    let mut in_tree = vec![false; n];
    let mut next = vec![usize::MAX; n];
    in_tree[0] = true;
    for start in 1..n {
        let mut u = start;
        while !in_tree[u] {
            let nb = base.neighbors(u);
            next[u] = nb[rng.random_range(0..nb.len())];
            u = next[u];
        }
        u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u];
        }
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v, next[v])).collect();
    Graph::from_edges(n, &edges)
}

/// `width × height` torus with 4-neighborhoods; vertex `(x, y)` is `x + width·y`.
///
/// A side of length 2 would produce parallel edges; they are merged, so the
/// torus is 4-regular only for `width, height ≥ 3`.
pub fn torus_grid(width: usize, height: usize) -> Result<Graph> {
    if width < 2 || height < 2 {
        return Err(Error::Domain("torus sides must be at least 2"));
    }
    let mut edges = Vec::with_capacity(2 * width * height);
    for y in 0..height {
        for x in 0..width {
            let v = x + width * y;
            edges.push((v, (x + 1) % width + width * y));
            edges.push((v, x + width * ((y + 1) % height)));
        }
    }
    Graph::from_edges(width * height, &edges)
}

/// Uniformly random labelled tree on `n` vertices (Prüfer decoding).
pub fn random_tree(n: usize, rng: &mut RngStream) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a simple tree")
}

/// `graph` plus `count` distinct non-edges chosen uniformly.
pub fn add_random_edges(graph: &Graph, count: usize, rng: &mut RngStream) -> Result<Graph> {
    let n = graph.n();
    let available = n * n.saturating_sub(1) / 2 - graph.edge_count();
    if count > available {
        return Err(Error::InsufficientNonEdges { requested: count, available });
    }
    let mut edges = graph.edges();
    if 2 * count <= available {
        let mut added = BTreeSet::new();
        while added.len() < count {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            let e = (u.min(v), u.max(v));
            if u != v && !graph.has_edge(u, v) {
                added.insert(e);
            }
        }
        edges.extend(added);
    } else {
        let mut missing: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !graph.has_edge(u, v)).collect();
        let (chosen, _) = missing.partial_shuffle(rng, count);
        edges.extend_from_slice(chosen);
    }
    Graph::from_edges(n, &edges)
}
