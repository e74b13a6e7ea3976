//! Edge-list and coloring text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with `u ≠ v` and both
//! below `n`. Coloring: `n` lines, each a single digit below κ. In both formats
//! `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use excitable_core::{Coloring, Graph};

use crate::{CliError, CliResult};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_err(source_name: &str, line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { source_name: source_name.to_string(), line, message: message.into() }
}

fn parse_pair(source_name: &str, line: usize, body: &str) -> CliResult<(usize, usize)> {
    let mut it = body.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(parse_err(source_name, line, "expected two integers"));
    };
    let num = |s: &str| s.parse::<usize>().map_err(|_| parse_err(source_name, line, format!("`{s}` is not a nonnegative integer")));
    Ok((num(a)?, num(b)?))
}

pub fn parse_edge_list(text: &str, source_name: &str) -> CliResult<Graph> {
    let mut lines = content_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(parse_err(source_name, 1, "missing `n m` header"));
    };
    let (n, m) = parse_pair(source_name, header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let (u, v) = parse_pair(source_name, line, body)?;
        if u >= n || v >= n {
            return Err(parse_err(source_name, line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(source_name, line, "self-loop"));
        }
        edges.push((u.min(v), u.max(v)));
    }
    if edges.len() != m {
        return Err(parse_err(source_name, header_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(parse_err(source_name, header_line, "duplicate edge"));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_edge_list(graph: &Graph) -> String {
    let edges = graph.edges();
    let mut out = format!("{} {}\n", graph.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses a coloring with colors below `kappa` (at most 10, one digit each).
pub fn parse_coloring(text: &str, kappa: u8, source_name: &str) -> CliResult<Coloring> {
    if !(2..=10).contains(&kappa) {
        return Err(CliError::config(format!("coloring files need 2 ≤ κ ≤ 10, got {kappa}")));
    }
    let mut colors = Vec::new();
    for (line, body) in content_lines(text) {
        let mut chars = body.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(parse_err(source_name, line, "expected a single digit"));
        };
        let d = c.to_digit(10).ok_or_else(|| parse_err(source_name, line, format!("`{c}` is not a digit")))?;
        if d >= u32::from(kappa) {
            return Err(parse_err(source_name, line, format!("color {d} is not below κ = {kappa}")));
        }
        colors.push(d as u8);
    }
    Ok(Coloring::new(kappa, colors)?)
}

pub fn write_coloring(colors: &[u8]) -> String {
    let mut out = String::with_capacity(2 * colors.len());
    for &c in colors {
        writeln!(out, "{c}").unwrap();
    }
    out
}

pub fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    parse_edge_list(&read_text(path)?, &path.display().to_string())
}

pub fn read_coloring(path: &Path, kappa: u8) -> CliResult<Coloring> {
    parse_coloring(&read_text(path)?, kappa, &path.display().to_string())
}
