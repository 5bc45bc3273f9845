//! Graph file formats: a plain edge-list format and graph6.
//!
//! Edge list: first significant line is the vertex count, each following
//! line one edge `u v`. Blank lines and `#` comments are ignored.
//! graph6 follows the de facto ASCII encoding, bit-exact.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" => Ok(GraphFormat::EdgeList),
            "graph6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected {expected}, found `{found}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("missing vertex-count line")]
    MissingHeader,
    #[error("byte {byte}: {reason}")]
    Graph6 { byte: usize, reason: String },
}

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        if n.is_none() {
            let tok = fields.next().unwrap();
            let count: usize = tok.parse().map_err(|_| ParseError::Malformed {
                line,
                expected: "vertex count",
                found: tok.to_string(),
            })?;
            if fields.next().is_some() {
                return Err(ParseError::Malformed {
                    line,
                    expected: "a single vertex count",
                    found: content.to_string(),
                });
            }
            n = Some(count);
            continue;
        }
        let parse_vertex = |tok: Option<&str>| -> Result<usize, ParseError> {
            let tok = tok.ok_or(ParseError::Malformed {
                line,
                expected: "edge `u v`",
                found: content.to_string(),
            })?;
            tok.parse().map_err(|_| ParseError::Malformed {
                line,
                expected: "vertex index",
                found: tok.to_string(),
            })
        };
        let u = parse_vertex(fields.next())?;
        let v = parse_vertex(fields.next())?;
        if fields.next().is_some() {
            return Err(ParseError::Malformed {
                line,
                expected: "edge `u v`",
                found: content.to_string(),
            });
        }
        edges.push((u, v));
        edge_lines.push(line);
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    // Re-validate edge by edge so errors carry the offending line.
    let mut g = Graph::empty(n).map_err(|source| ParseError::Graph { line: 1, source })?;
    for (&e, &line) in edges.iter().zip(&edge_lines) {
        g = g
            .add_edges(&[e])
            .map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(g)
}

/// Serialises to the edge-list format (LF line endings, edges sorted).
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a graph6 string (optionally prefixed with `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let err = |byte: usize, reason: String| ParseError::Graph6 { byte, reason };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b} outside graph6 range 63..=126")));
        }
    }
    if bytes.is_empty() {
        return Err(err(0, "empty input".into()));
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated 4-byte vertex count".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated 8-byte vertex count".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as usize;
        }
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(err(0, format!("{n} vertices exceeds maximum {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = header_len + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(err(
            bytes.len().min(expect),
            format!("expected {expect} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let b = bytes[header_len + pos / 6] - 63;
            if b >> (5 - pos % 6) & 1 == 1 {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    // Padding bits must be zero.
    for extra in pos..(bytes.len() - header_len) * 6 {
        let b = bytes[header_len + extra / 6] - 63;
        if b >> (5 - extra % 6) & 1 == 1 {
            return Err(err(header_len + extra / 6, "nonzero padding bit".into()));
        }
    }
    Graph::new(n, &edges).map_err(|source| ParseError::Graph { line: 1, source })
}

/// Serialises to graph6 (single-byte size for n <= 62, 4-byte form above).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                bytes.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        bytes.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(bytes).unwrap()
}

/// Parses `text` in the given format.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

/// Serialises `g` in the given format.
pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => serialize_edge_list(g),
        GraphFormat::Graph6 => serialize_graph6(g),
    }
}
