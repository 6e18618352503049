//! Graph file formats.
//!
//! * Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertices.
//! * DIMACS: `c` comment lines, one `p edge n m` header, then `e u v` lines with
//!   1-based vertices. Vertices are shifted to 0-based on load.
//!
//! Blank lines are ignored in both formats. Edge ids follow line order.

use std::io::{BufRead, Write};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "txt" => Ok(Format::EdgeList),
            "dimacs" | "DIMACS" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Simplicity { line: usize, source: GraphError },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> LoadError {
    LoadError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_fields<const N: usize>(line_no: usize, fields: &[&str]) -> Result<[usize; N], LoadError> {
    if fields.len() != N {
        return Err(parse_err(
            line_no,
            format!("expected {N} integers, found {} fields", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line_no, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn load_graph<R: BufRead>(reader: R, format: Format) -> Result<SimpleGraph, LoadError> {
    let mut header: Option<(usize, usize)> = None;
    // (u, v, line) in 0-based coordinates
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        match format {
            Format::EdgeList => {
                if fields[0].starts_with('#') {
                    continue;
                }
                if header.is_none() {
                    let [n, m] = parse_fields::<2>(line_no, &fields)?;
                    header = Some((n, m));
                } else {
                    let [u, v] = parse_fields::<2>(line_no, &fields)?;
                    edges.push((u, v, line_no));
                }
            }
            Format::Dimacs => match fields[0] {
                "c" => continue,
                "p" => {
                    if header.is_some() {
                        return Err(parse_err(line_no, "duplicate `p` line"));
                    }
                    if fields.len() != 4 || fields[1] != "edge" {
                        return Err(parse_err(line_no, "expected `p edge n m`"));
                    }
                    let [n, m] = parse_fields::<2>(line_no, &fields[2..])?;
                    header = Some((n, m));
                }
                "e" => {
                    if header.is_none() {
                        return Err(parse_err(line_no, "edge before `p` line"));
                    }
                    let [u, v] = parse_fields::<2>(line_no, &fields[1..])?;
                    if u == 0 || v == 0 {
                        return Err(parse_err(line_no, "DIMACS vertices are 1-based"));
                    }
                    edges.push((u - 1, v - 1, line_no));
                }
                other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
            },
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing header"))?;
    if edges.len() != m {
        return Err(LoadError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    // Validate edge by edge so the error names the offending line.
    let mut seen = std::collections::HashSet::with_capacity(m);
    for &(u, v, line) in &edges {
        let bad = if u >= n || v >= n {
            Some(GraphError::VertexOutOfRange { vertex: u.max(v), n })
        } else if u == v {
            Some(GraphError::SelfLoop(u))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(GraphError::DuplicateEdge(u, v))
        } else {
            None
        };
        if let Some(source) = bad {
            return Err(LoadError::Simplicity { line, source });
        }
    }
    SimpleGraph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))
        .map_err(|source| LoadError::Simplicity { line: 0, source })
}

pub fn write_graph<W: Write>(g: &SimpleGraph, mut sink: W, format: Format) -> std::io::Result<()> {
    match format {
        Format::EdgeList => {
            writeln!(sink, "{} {}", g.vertex_count(), g.edge_count())?;
            for e in g.edges() {
                writeln!(sink, "{} {}", e.u, e.v)?;
            }
        }
        Format::Dimacs => {
            writeln!(sink, "p edge {} {}", g.vertex_count(), g.edge_count())?;
            for e in g.edges() {
                writeln!(sink, "e {} {}", e.u + 1, e.v + 1)?;
            }
        }
    }
    sink.flush()
}
