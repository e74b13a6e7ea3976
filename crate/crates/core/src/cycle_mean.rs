//! Exact activity of a finite graph (maximum cycle mean of `dX`) and the
//! walk-maximum dynamic program that replaces the universal cover.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, OneForm, Rational, Result};

const NEG_INF: i64 = i64::MIN / 4;

/// Maximum over directed cycles `C` of `∮_C dX / |V(C)|`, by Karp's algorithm.
///
/// Every edge gives the 2-cycle `u, v, u` with integral 0, so the result is
/// never negative, and it is zero exactly when the form is irrotational.
pub fn max_cycle_mean(graph: &Graph, form: &OneForm) -> Result<Rational> {
    graph.require_connected()?;
    if graph.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let n = graph.n();
    // best[k][v]: largest weight of a walk with exactly k edges from vertex 0 to v.
    let mut best = vec![vec![NEG_INF; n]; n + 1];
    best[0][0] = 0;
    for k in 0..n {
        let (done, rest) = best.split_at_mut(k + 1);
        let (prev, next) = (&done[k], &mut rest[0]);
        for u in 0..n {
            if prev[u] == NEG_INF {
                continue;
            }
            for (slot, &v) in graph.slots(u).zip(graph.neighbors(u)) {
                let cand = prev[u] + i64::from(form.slot_value(slot));
                if cand > next[v] {
                    next[v] = cand;
                }
            }
        }
    }
    let mut answer: Option<Rational> = None;
    for v in 0..n {
        if best[n][v] == NEG_INF {
            continue;
        }
        let worst = (0..n)
            .filter(|&k| best[k][v] != NEG_INF)
            .map(|k| Rational::new(best[n][v] - best[k][v], (n - k) as i64))
            .min();
        if let Some(w) = worst {
            answer = Some(match answer {
                Some(a) if a >= w => a,
                _ => w,
            });
        }
    }
    Ok(answer.expect("a connected graph with an edge has closed walks of every length"))
}

/// `max` of the path integral over walks from `start` with at most `t` edges.
///
/// `h_0(start) = 0`, `h_{s+1}(v) = max(h_s(v), max_{u ~ v} h_s(u) + dX(u, v))`.
pub fn walk_max_dp(graph: &Graph, form: &OneForm, start: usize, t: usize) -> Result<i64> {
    Ok(*walk_max_series(graph, form, start, t)?.last().unwrap())
}

/// The values of [`walk_max_dp`] for `0..=t`, computed in one sweep.
pub fn walk_max_series(graph: &Graph, form: &OneForm, start: usize, t: usize) -> Result<Vec<i64>> {
    graph.check_vertex(start)?;
    let n = graph.n();
    let mut h = vec![NEG_INF; n];
    let mut next = vec![NEG_INF; n];
    h[start] = 0;
    let mut out = Vec::with_capacity(t + 1);
    out.push(0);
    for _ in 0..t {
        next.copy_from_slice(&h);
        for u in 0..n {
            if h[u] == NEG_INF {
                continue;
            }
            for (slot, &v) in graph.slots(u).zip(graph.neighbors(u)) {
                let cand = h[u] + i64::from(form.slot_value(slot));
                if cand > next[v] {
                    next[v] = cand;
                }
            }
        }
        core::mem::swap(&mut h, &mut next);
        out.push(h.iter().copied().max().unwrap());
    }
    Ok(out)
}
