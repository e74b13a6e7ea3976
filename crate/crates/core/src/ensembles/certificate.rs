use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;

use super::RngStream;
use crate::form::fundamental_cycle;
use crate::{Graph, Result, Walk};

/// Calibrated lower bound on `k / n` for the largest component of `G(500, 2/500)`.
///
/// Over 200 seeds the certificate size on the largest component ranged from 7 to
/// about 30 with median 17, so `k ≥ 0.014 · 500 = 7` held on every seed. The
/// greedy matching is far from maximum, hence the small constant.
pub const ER_CERTIFICATE_CONSTANT: f64 = 0.014;

/// Vertex-disjoint edges `e_1 … e_k` with cycles `C_1 … C_k` such that
/// `e_i ∈ C_j` exactly when `i = j`. Each such pair independently fails to be
/// irrotational with probability at least `2/9` under uniform CCA colorings, so
/// the graph synchronizes with probability at most `(7/9)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleMatchingCertificate {
    pub matching_edges: Vec<(usize, usize)>,
    pub cycles: Vec<Walk>,
}

impl CycleMatchingCertificate {
    pub fn len(&self) -> usize {
        self.matching_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matching_edges.is_empty()
    }

    /// Checks both structural invariants directly against `graph`.
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        if self.matching_edges.len() != self.cycles.len() {
            return false;
        }
        let mut used = vec![false; graph.n()];
        for &(u, v) in &self.matching_edges {
            if u >= graph.n() || v >= graph.n() || !graph.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        self.cycles.iter().enumerate().all(|(j, c)| {
            c.is_valid_in(graph)
                && c.is_cycle()
                && c.len() >= 3
                && self.matching_edges.iter().enumerate().all(|(i, &(u, v))| walk_uses_edge(c, u, v) == (i == j))
        })
    }
}

fn walk_uses_edge(walk: &Walk, u: usize, v: usize) -> bool {
    walk.vertices().windows(2).any(|w| (w[0], w[1]) == (u, v) || (w[0], w[1]) == (v, u))
}

/// Spanning tree `T` (BFS from vertex 0), the larger parity class `S` of `T`, a
/// greedy matching among the edges inside `S` taken in random order, and the
/// fundamental cycle of each matched edge.
///
/// `S` is independent in `T`, so every edge inside it is a non-tree edge and
/// appears in no other matched edge's fundamental cycle.
pub fn find_certificate(graph: &Graph, rng: &mut RngStream) -> Result<CycleMatchingCertificate> {
    graph.require_connected()?;
    let n = graph.n();
    if n == 0 {
        return Ok(CycleMatchingCertificate { matching_edges: Vec::new(), cycles: Vec::new() });
    }
    let (parent, order) = graph.bfs_tree(0);
    let mut depth = vec![0usize; n];
    for &v in order.iter().skip(1) {
        depth[v] = depth[parent[v]] + 1;
    }
    let even = depth.iter().filter(|&&d| d % 2 == 0).count();
    let side = usize::from(2 * even < n);
    let in_s = |v: usize| depth[v] % 2 == side;
    let mut candidates: Vec<(usize, usize)> =
        graph.edges().into_iter().filter(|&(u, v)| in_s(u) && in_s(v)).collect();
    candidates.shuffle(rng);
    let mut used = vec![false; n];
    let mut matching_edges = Vec::new();
    let mut cycles = Vec::new();
    for (u, v) in candidates {
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        matching_edges.push((u, v));
        cycles.push(fundamental_cycle(&parent, u, v));
    }
    Ok(CycleMatchingCertificate { matching_edges, cycles })
}
