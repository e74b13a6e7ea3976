//! Synchronous CCA / GHM stepping for any κ ≥ 2, excitation counting and
//! limit-cycle detection.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Coloring, DynamicsKind, Error, Graph, OneForm, Rational, Result};

/// A running trajectory `X_0, X_1, …` together with the excitation counts `ne_t`.
#[derive(Debug, Clone)]
pub struct Trajectory<'g> {
    graph: &'g Graph,
    kind: DynamicsKind,
    kappa: u8,
    state: Vec<u8>,
    next: Vec<u8>,
    excited: Vec<bool>,
    step_index: u64,
    excitations: Vec<u64>,
}

impl<'g> Trajectory<'g> {
    pub fn new(graph: &'g Graph, initial: Coloring, kind: DynamicsKind) -> Result<Self> {
        initial.require_len(graph.n())?;
        let n = graph.n();
        let kappa = initial.kappa();
        let mut traj = Trajectory {
            graph,
            kind,
            kappa,
            state: initial.into_vec(),
            next: vec![0; n],
            excited: vec![false; n],
            step_index: 0,
            excitations: vec![0; n],
        };
        traj.compute_next();
        Ok(traj)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn kind(&self) -> DynamicsKind {
        self.kind
    }

    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    pub fn step_index(&self) -> u64 {
        self.step_index
    }

    pub fn colors(&self) -> &[u8] {
        &self.state
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::new(self.kappa, self.state.clone()).expect("trajectory states are valid")
    }

    /// `ne_t(v)` for the current `t`.
    pub fn excitations(&self) -> &[u64] {
        &self.excitations
    }

    /// `dX_t` of the current state (κ = 3 only).
    pub fn one_form(&self) -> Result<OneForm> {
        OneForm::new(self.graph, &self.coloring(), self.kind)
    }

    /// Whether each vertex is excited at the current time, i.e. by the step `t → t+1`.
    pub fn excited_flags(&self) -> &[bool] {
        &self.excited
    }

    /// Vertices excited at the current time, ascending.
    pub fn excited_set(&self) -> Vec<usize> {
        self.excited.iter().enumerate().filter(|(_, &e)| e).map(|(v, _)| v).collect()
    }

    pub fn is_monochromatic(&self) -> bool {
        self.state.windows(2).all(|w| w[0] == w[1])
    }

    fn compute_next(&mut self) {
        let k = self.kappa;
        for v in 0..self.state.len() {
            let c = self.state[v];
            let succ = if c + 1 == k { 0 } else { c + 1 };
            let (advance, excited) = match self.kind {
                DynamicsKind::Cca => {
                    let hit = self.graph.neighbors(v).iter().any(|&u| self.state[u] == succ);
                    (hit, hit)
                }
                DynamicsKind::Ghm => {
                    if c == 0 {
                        let hit = self.graph.neighbors(v).iter().any(|&u| self.state[u] == 1);
                        (hit, hit)
                    } else {
                        (true, false)
                    }
                }
            };
            self.next[v] = if advance { succ } else { c };
            self.excited[v] = excited;
        }
    }

    /// One synchronous update; `X_{t+1}` is computed entirely from `X_t`.
    pub fn step(&mut self) {
        for (count, &e) in self.excitations.iter_mut().zip(&self.excited) {
            *count += u64::from(e);
        }
        core::mem::swap(&mut self.state, &mut self.next);
        self.step_index += 1;
        self.compute_next();
    }

    pub fn advance(&mut self, steps: u64) {
        for _ in 0..steps {
            self.step();
        }
    }

    /// Default step budget for limit-cycle detection: `4 · n · κ`.
    pub fn default_budget(&self) -> u64 {
        4 * self.state.len().max(1) as u64 * u64::from(self.kappa)
    }

    /// Runs until a state repeats, then measures one period.
    ///
    /// States are indexed by a 64-bit hash and compared in full on a hash match,
    /// so a collision cannot produce a wrong period.
    pub fn run_to_limit_cycle(&mut self, max_steps: u64) -> Result<LimitCycleReport> {
        let start = self.step_index;
        let mut seen: BTreeMap<u64, Vec<(u64, Vec<u8>)>> = BTreeMap::new();
        loop {
            let h = fnv1a(&self.state);
            let bucket = seen.entry(h).or_default();
            if let Some((first, _)) = bucket.iter().find(|(_, s)| *s == self.state) {
                let preperiod = *first;
                let period = self.step_index - start - preperiod;
                let before = self.excitations.clone();
                self.advance(period);
                let per_period: Vec<u64> =
                    self.excitations.iter().zip(&before).map(|(a, b)| a - b).collect();
                return Ok(LimitCycleReport { preperiod, period, excitations_per_period: per_period });
            }
            bucket.push((self.step_index - start, self.state.clone()));
            if self.step_index - start >= max_steps {
                return Err(Error::StepBudgetExceeded {
                    max_steps,
                    partial_excitations: self.excitations.clone(),
                });
            }
            self.step();
        }
    }

    /// First time all colors agree, or [`SyncOutcome::NeverSynchronizes`] when the
    /// initial 1-form is not irrotational (κ = 3, connected graph).
    ///
    /// The trajectory is advanced to the synchronization time. A monochromatic
    /// state stays monochromatic under both rules.
    pub fn synchronization_time(&mut self) -> Result<SyncOutcome> {
        let form = self.one_form()?;
        if !form.irrotationality(self.graph)?.is_irrotational() {
            return Ok(SyncOutcome::NeverSynchronizes);
        }
        let start = self.step_index;
        // An irrotational start synchronizes by the diameter, which is below n.
        let limit = self.state.len() as u64;
        while !self.is_monochromatic() {
            if self.step_index - start > limit {
                unreachable!("irrotational start failed to synchronize within n steps");
            }
            self.step();
        }
        Ok(SyncOutcome::Synchronized(self.step_index - start))
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Outcome of [`Trajectory::synchronization_time`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyncOutcome {
    Synchronized(u64),
    NeverSynchronizes,
}

/// Eventual periodic behaviour of a finite trajectory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitCycleReport {
    /// Steps before the periodic orbit is entered (relative to the start of the run).
    pub preperiod: u64,
    pub period: u64,
    /// Excitations of each vertex during one period.
    pub excitations_per_period: Vec<u64>,
}

impl LimitCycleReport {
    pub fn vertex_activity(&self, v: usize) -> Rational {
        Rational::new(self.excitations_per_period[v] as i64, self.period as i64)
    }

    /// The common activity when every vertex has the same excitation rate; for
    /// κ = 3 this always holds.
    pub fn activity(&self) -> Option<Rational> {
        let first = *self.excitations_per_period.first()?;
        self.excitations_per_period
            .iter()
            .all(|&e| e == first)
            .then(|| Rational::new(first as i64, self.period as i64))
    }

    pub fn fixates(&self) -> bool {
        self.excitations_per_period.iter().all(|&e| e == 0)
    }
}
