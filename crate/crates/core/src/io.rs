//! Text formats and the machine-readable result record.
//!
//! Graph files start with `n m` followed by `m` lines `u v` with
//! `1 <= u < v <= n`. Numbering files hold one number per vertex, in vertex
//! order. In both, `#` starts a comment and blank lines are ignored.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Graph, Numbering};
use crate::solver::{SearchStats, SolveResult};
use crate::Objective;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn fields<const K: usize>(line_no: usize, line: &str, what: &str) -> Result<[usize; K]> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != K {
        return Err(parse_err(
            line_no,
            format!("expected {what}, found `{line}`"),
        ));
    }
    let mut out = [0; K];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| parse_err(line_no, format!("`{p}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let [n, m] = fields::<2>(header_no, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if edges.len() == m {
            return Err(parse_err(
                line_no,
                format!("more than the {m} declared edges"),
            ));
        }
        let [u, v] = fields::<2>(line_no, line, "edge `u v`")?;
        if u == 0 || v > n {
            return Err(parse_err(line_no, format!("edge {u} {v} outside 1..={n}")));
        }
        if u >= v {
            return Err(parse_err(
                line_no,
                format!("edge {u} {v} must satisfy u < v"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a numbering; with `expected` set, the vertex count must match.
pub fn parse_numbering(text: &str, expected: Option<usize>) -> Result<Numbering> {
    let mut values = Vec::new();
    for (line_no, line) in content_lines(text) {
        let [x] = fields::<1>(line_no, line, "one number per line")?;
        values.push(x);
    }
    if let Some(n) = expected {
        if values.len() != n {
            return Err(Error::NumberingLength {
                expected: n,
                found: values.len(),
            });
        }
    }
    Numbering::new(values)
}

/// One number per line, optionally preceded by a `# validity N` comment.
pub fn write_numbering(pi: &Numbering, validity: Option<u64>) -> String {
    let mut out = String::new();
    if let Some(v) = validity {
        out.push_str(&format!("# validity {v}\n"));
    }
    for x in pi.as_slice() {
        out.push_str(&format!("{x}\n"));
    }
    out
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

pub fn read_numbering(path: &Path, expected: Option<usize>) -> Result<Numbering> {
    parse_numbering(&read(path)?, expected)
}

/// SHA-256 of the canonical serialisation, so formatting and comments in the
/// source file do not change the hash.
pub fn input_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(write_graph(g).as_bytes()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub proven: bool,
}

impl From<&SearchStats> for RecordStats {
    fn from(s: &SearchStats) -> Self {
        Self {
            nodes: s.nodes,
            elapsed_ms: s.elapsed.as_millis() as u64,
            proven: s.proven,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordFlags {
    pub optimal: bool,
    pub formula_conflict: bool,
}

/// One JSON object per line. Only `stats.elapsed_ms` depends on timing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    pub input_hash: String,
    pub objective: Objective,
    pub value: u64,
    pub witness: Vec<usize>,
    pub method: String,
    pub stats: RecordStats,
    pub flags: RecordFlags,
}

impl ResultRecord {
    pub fn from_solve(command: &str, g: &Graph, r: &SolveResult) -> Self {
        Self {
            command: command.to_string(),
            spec: None,
            input_hash: input_hash(g),
            objective: r.objective,
            value: r.value,
            witness: r.witness.as_slice().to_vec(),
            method: r.method.to_string(),
            stats: RecordStats::from(&r.stats),
            flags: RecordFlags {
                optimal: r.stats.proven,
                formula_conflict: false,
            },
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialises")
    }
}
