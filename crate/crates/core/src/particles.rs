//! Particle system expansion on trees: branching, annihilating and coalescing
//! edge particles whose configuration equals `-dX_t`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Graph, OneForm, Result};

/// Antisymmetric particle configuration `ξ` on a tree: `ξ(u, v) = 1` means a
/// particle on `uv` heading to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticleConfig<'g> {
    tree: &'g Graph,
    particles: Vec<i8>,
}

impl<'g> ParticleConfig<'g> {
    /// Empty configuration.
    pub fn empty(tree: &'g Graph) -> Result<Self> {
        tree.require_tree()?;
        Ok(ParticleConfig { tree, particles: vec![0; tree.slot_count()] })
    }

    /// `ξ_0 = -dX_0`.
    pub fn from_form(tree: &'g Graph, form: &OneForm) -> Result<Self> {
        tree.require_tree()?;
        let particles = form.slot_values().iter().map(|&d| -d).collect();
        Ok(ParticleConfig { tree, particles })
    }

    /// Places a single particle on the edge `uv` heading to `v`.
    pub fn with_particle(mut self, u: usize, v: usize) -> Result<Self> {
        let s = self.tree.slot(u, v).ok_or(crate::Error::InvalidWalk(u, v))?;
        let back = self.tree.slot(v, u).unwrap();
        self.particles[s] = 1;
        self.particles[back] = -1;
        Ok(self)
    }

    pub fn slot_values(&self) -> &[i8] {
        &self.particles
    }

    /// `ξ(u, v)`, or `None` for a non-edge.
    pub fn value(&self, u: usize, v: usize) -> Option<i8> {
        self.tree.slot(u, v).map(|s| self.particles[s])
    }

    /// Directed edges `(u, v)` carrying a particle `u → v`.
    pub fn particles(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.tree.n() {
            for (s, &v) in self.tree.slots(u).zip(self.tree.neighbors(u)) {
                if self.particles[s] == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertices with at least one incoming particle, ascending.
    pub fn targets(&self) -> Vec<usize> {
        let mut hit = vec![false; self.tree.n()];
        for (_, v) in self.particles() {
            hit[v] = true;
        }
        (0..self.tree.n()).filter(|&v| hit[v]).collect()
    }

    /// Branching, then annihilation, then coalescence.
    pub fn step(&self) -> ParticleConfig<'g> {
        let tree = self.tree;
        // Potential particles per directed slot after branching.
        let mut potential = vec![false; tree.slot_count()];
        for (u, v) in self.particles() {
            for (s, &w) in tree.slots(v).zip(tree.neighbors(v)) {
                // No branching onto an edge already carrying a particle w → v;
                // this includes the edge the particle arrived on.
                let incoming = self.particles[tree.slot(w, v).unwrap()] == 1;
                if !incoming {
                    debug_assert!(w != u);
                    potential[s] = true;
                }
            }
        }
        let mut particles = vec![0i8; tree.slot_count()];
        for a in 0..tree.n() {
            for (s, &b) in tree.slots(a).zip(tree.neighbors(a)) {
                let back = tree.slot(b, a).unwrap();
                // Opposite directions annihilate.
                if potential[s] && !potential[back] {
                    particles[s] = 1;
                    particles[back] = -1;
                }
            }
        }
        ParticleConfig { tree, particles }
    }
}
