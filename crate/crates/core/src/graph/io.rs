//! Whitespace-separated edge lists (SNAP / KONECT style).

use std::io::{BufRead, Write};

use rustc_hash::FxHashMap;

use super::{Graph, VertexId};
use crate::{Error, Result};

/// Reads an edge list.
///
/// Lines starting with `#` or `%` and blank lines are skipped. Every other
/// line must start with two non-negative integer labels; further columns
/// (weights, timestamps) are ignored. Labels are remapped to dense ids in
/// order of first appearance. A self-loop line still introduces its vertex.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut labels: Vec<u64> = Vec::new();
    let mut index: FxHashMap<u64, VertexId> = FxHashMap::default();
    let mut edges = Vec::new();

    let mut intern = |label: u64, labels: &mut Vec<u64>| -> VertexId {
        *index.entry(label).or_insert_with(|| {
            labels.push(label);
            (labels.len() - 1) as VertexId
        })
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut endpoint = || -> Result<u64> {
            let token = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno + 1,
                message: "expected two vertex labels".into(),
            })?;
            token.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("`{token}` is not a non-negative integer label"),
            })
        };
        let (a, b) = (endpoint()?, endpoint()?);
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        edges.push((u, v));
    }

    Ok(Graph::with_labels(labels, edges))
}

/// Convenience wrapper over [`load_edge_list`] for in-memory text.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    load_edge_list(text.as_bytes())
}

/// Writes the canonical edge list: one `u v` line per edge with `u < v` in
/// dense-id space, ascending. An isolated vertex `v` is written as `v v` so
/// that reloading preserves the vertex count.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    for u in g.vertices() {
        let nbrs = g.neighbors(u);
        if nbrs.is_empty() {
            writeln!(out, "{u} {u}")?;
        }
        for &v in nbrs.iter().filter(|&&v| u < v) {
            writeln!(out, "{u} {v}")?;
        }
    }
    out.flush()
}
