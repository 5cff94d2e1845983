//! Undirected graphs, the edge-list file format and the directed arcs the
//! edge detectors are built from.
//!
//! Vertices are 0-based everywhere inside the crate. The file format and the
//! rendered adjacency table use 1-based labels.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Simple undirected graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Normalized `(min, max)` pairs, sorted and unique.
    edges: Vec<(usize, usize)>,
}

/// Orientation of a [`DirectedArc`] relative to its vertex labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Ascending,
    Descending,
}

/// One orientation of an undirected edge. Every edge produces two of these,
/// one per detector orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirectedArc {
    pub src: usize,
    pub dst: usize,
}

impl DirectedArc {
    pub fn direction(&self) -> Direction {
        if self.src < self.dst {
            Direction::Ascending
        } else {
            Direction::Descending
        }
    }

    pub fn reversed(&self) -> DirectedArc {
        DirectedArc { src: self.dst, dst: self.src }
    }
}

impl Graph {
    /// Builds a graph from 0-based edges, rejecting self-loops, duplicates
    /// (in either orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{}, {}}}", u.min(v), u.max(v))));
            }
        }
        Ok(Graph { n, edges: set.into_iter().collect() })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::VertexOutOfRange { vertex, n: self.n });
            }
        }
        Ok(self.edges.binary_search(&(u.min(v), u.max(v))).is_ok())
    }

    /// Both orientations of every edge: edges in lexicographic order, each
    /// emitting its ascending arc before its descending arc.
    pub fn directed_arcs(&self) -> Vec<DirectedArc> {
        self.edges.iter().flat_map(|&(u, v)| [DirectedArc { src: u, dst: v }, DirectedArc { src: v, dst: u }]).collect()
    }

    /// Renders the ordered-pair table: cell `(i, j)` carries the 1-based
    /// label `ij` when the edge exists and is blank otherwise. Cells are
    /// tab-separated, rows end with LF.
    pub fn adjacency_table(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| {
                    if i != j && self.edges.binary_search(&(i.min(j), i.max(j))).is_ok() {
                        format!("{}{}", i + 1, j + 1)
                    } else {
                        String::new()
                    }
                })
                .collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Serializes to the edge-list file format (1-based labels).
    pub fn to_file_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    /// Short stable identifier of the vertex count and edge set.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.to_file_text().as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

/// Parses the edge-list format: a `<n> <m>` header followed by exactly `m`
/// lines of 1-based `<u> <v>` pairs. Blank lines and lines starting with
/// `#` are skipped anywhere; CRLF line endings are accepted.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        last_line = line_no;
        let fields = parse_pair(line, line_no)?;
        match header {
            None => {
                let (n, m) = fields;
                if n < 2 {
                    return Err(parse_err(line_no, format!("vertex count must be at least 2, got {n}")));
                }
                header = Some((n, m, line_no));
            }
            Some((n, m, _)) => {
                if edges.len() == m {
                    return Err(parse_err(line_no, format!("more than the declared {m} edge lines")));
                }
                let (u, v) = fields;
                for label in [u, v] {
                    if label == 0 || label > n {
                        return Err(parse_err(line_no, format!("vertex label {label} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop on vertex {u}")));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if !edges.insert(key) {
                    return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
                }
            }
        }
    }

    let (n, m, header_line) = header.ok_or_else(|| parse_err(1, "missing `<n> <m>` header".into()))?;
    if edges.len() != m {
        return Err(parse_err(last_line.max(header_line), format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph { n, edges: edges.into_iter().collect() })
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut tokens = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = tokens.next().ok_or_else(|| parse_err(line_no, "expected two integers".into()))?;
        tok.parse::<usize>().map_err(|_| parse_err(line_no, format!("not a non-negative integer: `{tok}`")))
    };
    let a = next()?;
    let b = next()?;
    if tokens.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two integers".into()));
    }
    Ok((a, b))
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}
