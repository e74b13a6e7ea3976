use alloc::vec::Vec;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    BadVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph has no edges")]
    NoEdges,
    #[error("operation requires kappa = 3, got {0}")]
    UnsupportedKappa(u8),
    #[error("kappa must be at least 2, got {0}")]
    BadKappa(u8),
    #[error("color {color} at vertex {vertex} is not below kappa = {kappa}")]
    BadColor { vertex: usize, color: u8, kappa: u8 },
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("walk is empty")]
    EmptyWalk,
    #[error("walk steps along a non-edge ({0}, {1})")]
    InvalidWalk(usize, usize),
    #[error("invalid color densities: {0}")]
    BadDensities(&'static str),
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
    #[error("hypothesis log br = h violated (log br = {log_br}, h = {entropy})")]
    HypothesisViolated { log_br: f64, entropy: f64 },
    #[error("no periodic orbit within {max_steps} steps")]
    StepBudgetExceeded {
        max_steps: u64,
        /// Excitation counts at the point the budget ran out.
        partial_excitations: Vec<u64>,
    },
    #[error("node budget of {limit} exceeded after {visited} nodes")]
    NodeBudgetExceeded {
        limit: u64,
        visited: u64,
        /// Per-level maxima observed before the traversal stopped.
        partial_level_max: Vec<Option<i64>>,
    },
    #[error("requested {requested} new edges but only {available} non-edges exist")]
    InsufficientNonEdges { requested: usize, available: usize },
    #[error("t_max = {t_max} exceeds the truncation depth {depth}")]
    LocalityViolation { t_max: usize, depth: usize },
    #[error("Galton-Watson tree did not survive to depth {depth} in {attempts} attempts")]
    Extinct { depth: usize, attempts: u32 },
    #[error("tree family is not supported by this engine")]
    UnsupportedFamily,
}
