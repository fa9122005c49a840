//! The `0`/`1` matrix file and the JSON adjacency document.
//!
//! A matrix file is a decimal `n` on the first line followed by `n` lines of
//! `0`/`1` characters; row `u`, column `v` is `1` iff `u → v`. The final
//! newline is optional and no other whitespace is accepted.

use quadtour_core::{BinaryPattern, Tournament};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// Rows of a matrix file. Every row must have the same width; the width is
/// checked against the header by [`parse_tournament`] but not here, so a
/// non-square pattern reaches the caller.
pub fn parse_pattern(text: &str) -> CliResult<BinaryPattern> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or("");
    if header.is_empty() || !header.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(format!("bad header line {header:?}")));
    }
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(format!("bad header line {header:?}")))?;
    if n == 0 {
        return Err(parse_err("n must be positive"));
    }
    let rows: Vec<Vec<bool>> = lines
        .enumerate()
        .map(|(i, line)| {
            line.bytes()
                .map(|b| match b {
                    b'0' => Ok(false),
                    b'1' => Ok(true),
                    _ => Err(parse_err(format!("row {i}: unexpected byte {:?}", b as char))),
                })
                .collect()
        })
        .collect::<CliResult<_>>()?;
    if rows.len() != n {
        return Err(parse_err(format!("expected {n} rows, found {}", rows.len())));
    }
    let width = rows[0].len();
    if let Some(i) = rows.iter().position(|r| r.len() != width || r.is_empty()) {
        return Err(parse_err(format!("row {i} has {} columns", rows[i].len())));
    }
    Ok(BinaryPattern::from_rows(&rows)?)
}

pub fn parse_tournament(text: &str) -> CliResult<Tournament> {
    let p = parse_pattern(text)?;
    if !p.is_square() {
        return Err(parse_err(format!(
            "expected {} columns, found {}",
            p.rows(),
            p.cols()
        )));
    }
    p.to_tournament()
        .map_err(|e| parse_err(format!("not a tournament: {e}")))
}

pub fn render_pattern(p: &BinaryPattern) -> String {
    let mut s = format!("{}\n", p.rows());
    for i in 0..p.rows() {
        s.extend((0..p.cols()).map(|j| if p.get(i, j) { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

pub fn render(t: &Tournament) -> String {
    render_pattern(&BinaryPattern::adjacency(t))
}

/// `{"n": .., "adjacency": [[0,1,..],..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonAdjacency {
    pub n: usize,
    pub adjacency: Vec<Vec<u8>>,
}

impl JsonAdjacency {
    pub fn of(t: &Tournament) -> Self {
        let n = t.n();
        let adjacency = (0..n)
            .map(|u| (0..n).map(|v| u8::from(u != v && t.beats(u, v))).collect())
            .collect();
        JsonAdjacency { n, adjacency }
    }

    pub fn to_tournament(&self) -> CliResult<Tournament> {
        if self.adjacency.len() != self.n || self.adjacency.iter().any(|r| r.len() != self.n) {
            return Err(parse_err(format!("adjacency is not {0}x{0}", self.n)));
        }
        let rows: Vec<Vec<bool>> = self
            .adjacency
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| match x {
                        0 => Ok(false),
                        1 => Ok(true),
                        _ => Err(parse_err(format!("adjacency entry {x}"))),
                    })
                    .collect()
            })
            .collect::<CliResult<_>>()?;
        if self.n == 0 {
            return Err(parse_err("n must be positive"));
        }
        BinaryPattern::from_rows(&rows)?
            .to_tournament()
            .map_err(|e| parse_err(format!("not a tournament: {e}")))
    }
}

pub fn render_json(t: &Tournament) -> String {
    let mut s = serde_json::to_string(&JsonAdjacency::of(t)).expect("plain data");
    s.push('\n');
    s
}

/// Either input format; a leading `{` selects JSON.
pub fn parse_any(text: &str) -> CliResult<Tournament> {
    if text.trim_start().starts_with('{') {
        let doc: JsonAdjacency =
            serde_json::from_str(text).map_err(|e| parse_err(format!("json: {e}")))?;
        doc.to_tournament()
    } else {
        parse_tournament(text)
    }
}

/// One line per arc, sorted lexicographically.
pub fn render_dot(t: &Tournament) -> String {
    let mut s = String::from("digraph T {\n");
    for v in 0..t.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in t.arcs() {
        s.push_str(&format!("  {u} -> {v};\n"));
    }
    s.push_str("}\n");
    s
}
