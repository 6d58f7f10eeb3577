//! Text formats.
//!
//! Edge list:
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m lines, 0-based, u < v, lexicographically increasing)
//! ```
//!
//! Coloring (labels aligned with the canonical edge order):
//!
//! ```text
//! k
//! label      (m lines)
//! ```
//!
//! Blank lines and `#` lines are skipped in both. Line numbers in errors are
//! 1-based physical lines.

use std::fmt::Write as _;
use std::path::Path;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn fields<const N: usize>(line: usize, text: &str, what: &str) -> Result<[usize; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return Err(parse_err(line, format!("expected {what}, found `{text}`")));
    }
    let mut out = [0usize; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .parse()
            .map_err(|_| parse_err(line, format!("`{part}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let [n, m] = fields::<2>(header_line, header, "`n m` header")?;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m.min(1 << 20));
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = fields::<2>(line, text, "`u v` edge")?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("endpoint out of range for n = {n}")));
        }
        if u >= v {
            return Err(parse_err(line, format!("edge `{u} {v}` needs u < v")));
        }
        if let Some(&prev) = edges.last() {
            if prev >= (u, v) {
                return Err(parse_err(
                    line,
                    format!("edge `{u} {v}` is not after `{} {}`", prev.0, prev.1),
                ));
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.m() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_edge_list(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    std::fs::write(path, format_edge_list(g))?;
    Ok(())
}

/// Raw label file contents, before being matched against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFile {
    pub declared_colors: usize,
    pub labels: Vec<usize>,
}

impl ColoringFile {
    /// Binds the labels to `g`. Labels are relabeled by first occurrence;
    /// the declared count must equal the number of distinct labels.
    pub fn into_coloring(self, g: &Graph) -> Result<EdgeColoring> {
        if self.labels.len() != g.m() {
            return Err(Error::ColoringMismatch {
                expected: g.m(),
                found: self.labels.len(),
            });
        }
        let coloring = EdgeColoring::from_labels(self.labels);
        if coloring.num_colors() != self.declared_colors {
            return Err(Error::InvalidColoring(format!(
                "header declares {} colors, labels use {}",
                self.declared_colors,
                coloring.num_colors()
            )));
        }
        Ok(coloring)
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `k` header"))?;
    let [declared_colors] = fields::<1>(header_line, header, "`k` header")?;
    let labels = lines
        .map(|(line, text)| fields::<1>(line, text, "a label").map(|[l]| l))
        .collect::<Result<Vec<_>>>()?;
    Ok(ColoringFile {
        declared_colors,
        labels,
    })
}

pub fn format_coloring(c: &EdgeColoring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", c.num_colors());
    for l in c.labels() {
        let _ = writeln!(out, "{l}");
    }
    out
}

pub fn read_coloring(path: impl AsRef<Path>) -> Result<ColoringFile> {
    parse_coloring(&std::fs::read_to_string(path)?)
}

pub fn write_coloring(path: impl AsRef<Path>, c: &EdgeColoring) -> Result<()> {
    std::fs::write(path, format_coloring(c))?;
    Ok(())
}
