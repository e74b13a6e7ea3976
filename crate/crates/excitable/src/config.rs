//! The resolved configuration echoed into every report.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Every field has a default (see [`RunConfig::new`]). `--jobs` and `--output` are
/// deliberately absent: neither may change the content of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    /// `file:PATH` or a generator spec; `None` for commands without a graph.
    pub graph: Option<String>,
    /// `file:PATH` or `random`.
    pub coloring: Option<String>,
    pub dynamics: String,
    pub kappa: u8,
    pub densities: [f64; 3],
    pub seed: u64,
    pub trials: u64,
    pub t_max: Option<u64>,
    pub depth: Option<usize>,
    pub format: Format,
    /// Command-specific settings.
    pub params: BTreeMap<String, Value>,
}

impl RunConfig {
    /// Defaults: CCA, κ = 3, uniform densities, seed 0, one trial, JSON.
    pub fn new(command: &str) -> Self {
        RunConfig {
            command: command.to_string(),
            graph: None,
            coloring: None,
            dynamics: "cca".to_string(),
            kappa: 3,
            densities: [1.0 / 3.0; 3],
            seed: 0,
            trials: 1,
            t_max: None,
            depth: None,
            format: Format::Json,
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Hex SHA-256 of the canonical JSON encoding.
    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("config serializes");
        Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
    }
}
