//! Three-color (and general-κ) cyclic cellular automata and Greenberg–Hastings
//! dynamics on arbitrary graphs.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure function of
//! its inputs and, where randomness is involved, of an explicit [`RngStream`].
//! File formats, the command-line driver and image export live in the
//! `excitable` crate.
//!
//! Module map:
//!
//! * [`graph`], [`coloring`], [`form`], [`cycle_mean`]: graphs, colorings, the
//!   discrete 1-form `dX`, contour integrals and the exact activity of a finite graph.
//! * [`dynamics`], [`tournament`], [`particles`]: synchronous stepping, limit
//!   cycles, and the two monotone comparison processes.
//! * [`rate`]: the rate functions `Λ`, `Λ*`, cloud-speed prediction, cycle-sum
//!   probabilities and the Erdős–Rényi constants.
//! * [`ensembles`]: seeded random colorings, graphs and spanning trees.
//! * [`trees`]: lazily generated infinite trees and tree-indexed walks.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coloring;
pub mod cycle_mean;
pub mod dynamics;
pub mod ensembles;
mod error;
pub mod form;
pub mod graph;
pub mod particles;
pub mod rate;
pub mod tournament;
pub mod trees;

pub use coloring::{Coloring, DynamicsKind};
pub use cycle_mean::{max_cycle_mean, walk_max_dp};
pub use dynamics::{LimitCycleReport, SyncOutcome, Trajectory};
pub use ensembles::RngStream;
pub use error::{Error, Result};
pub use form::{Irrotationality, OneForm, Walk};
pub use graph::Graph;

/// Exact rational used for activities and cycle means.
pub type Rational = num_rational::Ratio<i64>;
