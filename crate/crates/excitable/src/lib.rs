//! File formats, experiment orchestration, reports and snapshot export for
//! [`excitable_core`].
//!
//! The binary in `main.rs` is a thin clap front end over [`cli::run`]. Each
//! subcommand builds a [`config::RunConfig`], does its work through the core
//! crate, and returns a [`report::Report`] that serializes to JSON or CSV.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod harness;
pub mod io;
pub mod ppm;
pub mod report;
pub mod spec;

pub use error::{CliError, CliResult};
