//! The antisymmetric 1-form `dX` of a 3-coloring, walks, path integrals and the
//! irrotationality test.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Coloring, DynamicsKind, Error, Graph, Result};

/// Antisymmetric `{-1, 0, +1}`-valued function on directed edges, stored per slot
/// of the graph it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForm {
    kind: DynamicsKind,
    values: Vec<i8>,
}

impl OneForm {
    /// `dX` for a 3-coloring under the given dynamics.
    pub fn new(graph: &Graph, coloring: &Coloring, kind: DynamicsKind) -> Result<Self> {
        coloring.require_kappa3()?;
        coloring.require_len(graph.n())?;
        let mut values = vec![0i8; graph.slot_count()];
        for u in 0..graph.n() {
            let cu = coloring.get(u);
            for (slot, &v) in graph.slots(u).zip(graph.neighbors(u)) {
                values[slot] = kind.increment(cu, coloring.get(v));
            }
        }
        Ok(OneForm { kind, values })
    }

    /// Builds a form from per-slot values, checking antisymmetry.
    pub fn from_slots(graph: &Graph, kind: DynamicsKind, values: Vec<i8>) -> Result<Self> {
        if values.len() != graph.slot_count() {
            return Err(Error::LengthMismatch { expected: graph.slot_count(), got: values.len() });
        }
        for u in 0..graph.n() {
            for (slot, &v) in graph.slots(u).zip(graph.neighbors(u)) {
                let back = graph.slot(v, u).expect("adjacency is symmetric");
                if !(-1..=1).contains(&values[slot]) || values[slot] != -values[back] {
                    return Err(Error::Domain("1-form values must be antisymmetric in {-1, 0, 1}"));
                }
            }
        }
        Ok(OneForm { kind, values })
    }

    pub fn kind(&self) -> DynamicsKind {
        self.kind
    }

    #[inline]
    pub fn slot_value(&self, slot: usize) -> i8 {
        self.values[slot]
    }

    pub fn slot_values(&self) -> &[i8] {
        &self.values
    }

    /// `dX(u, v)`, or `None` when `uv` is not an edge.
    pub fn value(&self, graph: &Graph, u: usize, v: usize) -> Option<i8> {
        graph.slot(u, v).map(|s| self.values[s])
    }

    /// `Σ dX(v_i, v_{i+1})` along the walk.
    pub fn path_integral(&self, graph: &Graph, walk: &Walk) -> Result<i64> {
        let mut total = 0i64;
        for w in walk.vertices().windows(2) {
            let d = self.value(graph, w[0], w[1]).ok_or(Error::InvalidWalk(w[0], w[1]))?;
            total += i64::from(d);
        }
        Ok(total)
    }

    /// Spanning-tree potential test. On a connected graph `dX` is irrotational iff
    /// every non-tree edge agrees with the BFS-tree potential; otherwise the
    /// fundamental cycle of the first violating edge is returned.
    pub fn irrotationality(&self, graph: &Graph) -> Result<Irrotationality> {
        graph.require_connected()?;
        let n = graph.n();
        if n == 0 {
            return Ok(Irrotationality::Irrotational { potential: Vec::new() });
        }
        let (parent, order) = graph.bfs_tree(0);
        let mut potential = vec![0i64; n];
        for &v in order.iter().skip(1) {
            let p = parent[v];
            potential[v] = potential[p] + i64::from(self.value(graph, p, v).unwrap());
        }
        for u in 0..n {
            for (slot, &v) in graph.slots(u).zip(graph.neighbors(u)) {
                if u < v && i64::from(self.values[slot]) != potential[v] - potential[u] {
                    let witness = fundamental_cycle(&parent, u, v);
                    return Ok(Irrotationality::Violated { witness });
                }
            }
        }
        Ok(Irrotationality::Irrotational { potential })
    }

    /// `dX(u, v) = -dX(v, u)` on every edge.
    pub fn is_antisymmetric(&self, graph: &Graph) -> bool {
        (0..graph.n()).all(|u| {
            graph.slots(u).zip(graph.neighbors(u)).all(|(s, &v)| {
                self.values[s] == -self.values[graph.slot(v, u).unwrap()]
            })
        })
    }
}

/// Closed walk `u → … → lca → … → v → u` through the tree given by `parent`.
pub(crate) fn fundamental_cycle(parent: &[usize], u: usize, v: usize) -> Walk {
    let up = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != x {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = up(u);
    let pv = up(v);
    // Strip the common suffix down to the lowest common ancestor.
    let mut i = pu.len();
    let mut j = pv.len();
    while i > 1 && j > 1 && pu[i - 2] == pv[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut vertices: Vec<usize> = pu[..i].to_vec();
    vertices.extend(pv[..j - 1].iter().rev());
    vertices.push(u);
    Walk { vertices }
}

/// Result of [`OneForm::irrotationality`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irrotationality {
    /// Potential `φ` with `dX(u, v) = φ(v) - φ(u)` on every edge and `φ(0) = 0`.
    Irrotational { potential: Vec<i64> },
    /// A cycle whose contour integral is nonzero.
    Violated { witness: Walk },
}

impl Irrotationality {
    pub fn is_irrotational(&self) -> bool {
        matches!(self, Irrotationality::Irrotational { .. })
    }
}

/// A nonempty vertex sequence. Adjacency is checked when the walk is used
/// against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyWalk);
        }
        Ok(Walk { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }

    pub fn is_valid_in(&self, graph: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < graph.n())
            && self.vertices.windows(2).all(|w| graph.has_edge(w[0], w[1]))
    }

    pub fn is_closed(&self) -> bool {
        !self.is_empty() && self.start() == self.end()
    }

    /// All vertices distinct.
    pub fn is_path(&self) -> bool {
        all_distinct(&self.vertices)
    }

    /// Closed, and only the first and last vertex coincide.
    pub fn is_cycle(&self) -> bool {
        self.is_closed() && all_distinct(&self.vertices[..self.vertices.len() - 1])
    }
}

fn all_distinct(vs: &[usize]) -> bool {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}
