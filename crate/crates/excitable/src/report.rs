//! Reports: the echoed config, a flat summary and an optional table.

use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::{Format, RunConfig};
use crate::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Series {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Series {
    pub fn new(columns: &[&str]) -> Self {
        Series { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Output of one command run. Serialization is deterministic: map keys are
/// sorted and nothing depends on wall-clock time or thread scheduling.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub library_version: String,
    pub command: String,
    pub seed: u64,
    pub config_hash: String,
    pub config: RunConfig,
    pub summary: Map<String, Value>,
    pub series: Option<Series>,
    /// Advisory statistical flags; never a failure by themselves.
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(config: RunConfig) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            library_version: env!("CARGO_PKG_VERSION").to_string(),
            command: config.command.clone(),
            seed: config.seed,
            config_hash: config.hash(),
            config,
            summary: Map::new(),
            series: None,
            warnings: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.summary.get(key)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The table if there is one, otherwise the summary as `key,value` rows.
    /// Every row starts with the seed and config hash.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let seed = self.seed.to_string();
        match &self.series {
            Some(series) => {
                let mut header = vec!["seed", "config_hash"];
                header.extend(series.columns.iter().map(String::as_str));
                w.write_record(&header).unwrap();
                for row in &series.rows {
                    let mut rec = vec![seed.clone(), self.config_hash.clone()];
                    rec.extend(row.iter().map(cell));
                    w.write_record(&rec).unwrap();
                }
            }
            None => {
                w.write_record(["seed", "config_hash", "key", "value"]).unwrap();
                for (k, v) in &self.summary {
                    w.write_record([seed.as_str(), self.config_hash.as_str(), k.as_str(), cell(v).as_str()]).unwrap();
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    /// Writes to `output`, or to stdout when `None`.
    pub fn emit(&self, format: Format, output: Option<&Path>) -> CliResult<()> {
        let text = self.render(format);
        match output {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_rows_carry_seed_and_hash() {
        let mut cfg = RunConfig::new("rate-fn");
        cfg.seed = 7;
        let mut r = Report::new(cfg);
        r.set("b", 2);
        r.set("a", "x,y");
        let csv = r.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "seed,config_hash,key,value");
        assert!(lines[1].starts_with(&format!("7,{},a,\"x,y\"", r.config_hash)));
        let mut s = Series::new(&["t", "v"]);
        s.push(vec![json!(0), json!(1.5)]);
        r.series = Some(s);
        assert_eq!(r.to_csv().lines().nth(1).unwrap(), format!("7,{},0,1.5", r.config_hash));
    }

    #[test]
    fn json_embeds_config_and_version() {
        let r = Report::new(RunConfig::new("activity"));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["config"]["command"], "activity");
        assert_eq!(v["library_version"], env!("CARGO_PKG_VERSION"));
        assert_eq!(v["config_hash"], r.config.hash());
    }
}
