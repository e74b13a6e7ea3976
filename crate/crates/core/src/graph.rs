//! Immutable simple undirected graphs over dense vertex ids `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A simple undirected graph stored as sorted adjacency lists (CSR layout).
///
/// Edges are identified with both of their orientations; the directed edge
/// `(v, adj(v)[i])` has slot `offsets[v] + i`, which is how per-orientation data
/// such as a [`OneForm`](crate::OneForm) is laid out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::BadVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        Graph { offsets, neighbors }
    }

    pub fn empty(n: usize) -> Self {
        Graph { offsets: vec![0; n + 1], neighbors: Vec::new() }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    /// Disjoint union, relabelling `other` to `self.n()..`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.n(), &edges).expect("union of valid graphs")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Number of directed edges, i.e. twice the edge count.
    #[inline]
    pub fn slot_count(&self) -> usize {
        self.neighbors.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Slot range of the directed edges leaving `v`.
    #[inline]
    pub fn slots(&self, v: usize) -> core::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// Slot of the directed edge `(u, v)`, if `uv` is an edge.
    pub fn slot(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n() {
            return None;
        }
        self.neighbors(u).binary_search(&v).ok().map(|i| self.offsets[u] + i)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.slot(u, v).is_some()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::BadVertex { vertex: v, n: self.n() })
        }
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS tree from `root` as a parent array (`parent[root] == root`,
    /// `usize::MAX` for unreachable vertices) together with the visiting order.
    pub fn bfs_tree(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.n()];
        let mut order = Vec::with_capacity(self.n());
        parent[root] = root;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in self.neighbors(u) {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    order.push(v);
                }
            }
        }
        (parent, order)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_tree(0).1.len() == self.n()
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count() == self.n() - 1 && self.is_connected()
    }

    pub fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n() {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![s];
            label[s] = id;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if label[v] == usize::MAX {
                        label[v] = id;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices`, relabelled densely in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Largest eccentricity over all vertices. Requires a connected graph.
    pub fn diameter(&self) -> Result<usize> {
        self.require_connected()?;
        Ok((0..self.n())
            .map(|s| self.bfs_distances(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }
}
