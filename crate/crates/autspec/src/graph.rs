//! Graph ingestion, validation, adjacency matrices, and the builtin families
//! used by the examples and the test corpus.
//!
//! Vertices are 0-based inside the library; the 1-based convention of the
//! text formats and the CLI is confined to parsers and reporters.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("endpoint {vertex} out of range 1..={n}")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph6 byte {byte:#x} at position {pos} outside the printable range")]
    BadChecksumChar { byte: u8, pos: usize },
    #[error("graph6 payload length mismatch: expected {expected} bytes, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),
    #[error("bad parameter {k} for family '{family}'")]
    BadParameter { family: String, k: usize },
}

/// Simple undirected graph: vertex count plus a set of unordered edges.
/// Immutable after construction; no self-loops, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: a + 1, n });
            }
            if b >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: b + 1, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a + 1));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0 + 1, e.1 + 1));
            }
        }
        Ok(Graph {
            n,
            edges: set,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-based pairs (i < j).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        let mut data = vec![0.0f64; self.n * self.n];
        for &(a, b) in &self.edges {
            data[a * self.n + b] = 1.0;
            data[b * self.n + a] = 1.0;
        }
        AdjacencyMatrix { n: self.n, data }
    }

    /// Canonical edge-list serialization (1-based, sorted).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{} {}", a + 1, b + 1);
        }
        out
    }

    /// graph6 encoding (short form, n <= 62).
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= 62, "short-form graph6 handles at most 62 vertices");
        let mut bytes = vec![self.n as u8 + 63];
        let nbits = self.n * (self.n - 1) / 2;
        let mut bits = Vec::with_capacity(nbits);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.has_edge(i, j));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (k, &bit) in chunk.iter().enumerate() {
                if bit {
                    v |= 1 << (5 - k);
                }
            }
            bytes.push(v + 63);
        }
        String::from_utf8(bytes).expect("printable by construction")
    }
}

/// Dense real symmetric 0/1 adjacency matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyMatrix {
    n: usize,
    data: Vec<f64>,
}

impl AdjacencyMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Parses the edge-list text format: a line `n <count>` followed by 1-based
/// `i j` pairs, with `#` comments and blank lines allowed anywhere.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if n.is_none() {
            if toks.len() != 2 || toks[0] != "n" {
                return Err(GraphError::MalformedLine {
                    line: line_no,
                    reason: "expected header 'n <count>'".into(),
                });
            }
            let count: usize = toks[1].parse().map_err(|_| GraphError::MalformedLine {
                line: line_no,
                reason: format!("bad vertex count '{}'", toks[1]),
            })?;
            if count == 0 {
                return Err(GraphError::MalformedLine {
                    line: line_no,
                    reason: "vertex count must be positive".into(),
                });
            }
            n = Some(count);
            continue;
        }
        if toks.len() != 2 {
            return Err(GraphError::MalformedLine {
                line: line_no,
                reason: "expected an edge 'i j'".into(),
            });
        }
        let parse = |t: &str| -> Result<usize, GraphError> {
            t.parse().map_err(|_| GraphError::MalformedLine {
                line: line_no,
                reason: format!("bad vertex id '{t}'"),
            })
        };
        let a = parse(toks[0])?;
        let b = parse(toks[1])?;
        let nv = n.unwrap();
        for v in [a, b] {
            if v == 0 || v > nv {
                return Err(GraphError::EndpointOutOfRange { vertex: v, n: nv });
            }
        }
        edges.push((a - 1, b - 1));
    }
    let n = n.ok_or(GraphError::MalformedLine {
        line: 0,
        reason: "missing 'n <count>' header".into(),
    })?;
    Graph::from_edges(n, edges)
}

/// Parses a single short-form graph6 string (n <= 62, 63-offset bytes, upper
/// triangle packed column by column, 6 bits per byte).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(GraphError::MalformedLine {
            line: 1,
            reason: "empty graph6 input".into(),
        });
    }
    let bytes = s.as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::BadChecksumChar { byte: b, pos });
        }
    }
    if bytes[0] == 126 {
        // long-form header; outside the supported short form
        return Err(GraphError::LengthMismatch {
            expected: 0,
            got: bytes.len(),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n.saturating_mul(n.saturating_sub(1)) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(GraphError::LengthMismatch {
            expected,
            got: bytes.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    // trailing padding bits must be zero
    for k in nbits..(expected - 1) * 6 {
        let byte = bytes[1 + k / 6] - 63;
        if (byte >> (5 - k % 6)) & 1 == 1 {
            return Err(GraphError::MalformedLine {
                line: 1,
                reason: "nonzero padding bits".into(),
            });
        }
    }
    Graph::from_edges(n, edges)
}

/// Builtin graph families. `k` is the size parameter and is ignored for
/// `petersen`.
///
/// The Petersen graph is pinned to a fixed labeling: outer 5-cycle 1-2-3-4-5,
/// spokes i <-> i+5, inner pentagram 6-8-10-7-9 (1-based). With that layout
/// the cycle notations `(1,4,2,5,3)(6,9,7,10,8)` and `(3,7)(4,10)(8,9)` are
/// automorphisms, and each vertex carries the 2-subset label of its Kneser
/// description ({x,y} adjacent to {u,v} iff disjoint).
pub fn builtin(name: &str, k: usize) -> Result<Graph, GraphError> {
    let bad = |family: &str, k: usize| GraphError::BadParameter {
        family: family.into(),
        k,
    };
    match name {
        "petersen" => {
            let edges_1based = [
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 10),
                (6, 8),
                (8, 10),
                (10, 7),
                (7, 9),
                (9, 6),
            ];
            let g = Graph::from_edges(10, edges_1based.iter().map(|&(a, b)| (a - 1, b - 1)))?;
            let labels = [
                "{1,2}", "{3,4}", "{1,5}", "{2,3}", "{4,5}", "{3,5}", "{2,5}", "{2,4}", "{1,4}",
                "{1,3}",
            ];
            Ok(g.with_labels(labels.iter().map(|s| s.to_string()).collect()))
        }
        "path" => {
            if k == 0 {
                return Err(bad(name, k));
            }
            Graph::from_edges(k, (0..k.saturating_sub(1)).map(|i| (i, i + 1)))
        }
        "cycle" => {
            if k < 3 {
                return Err(bad(name, k));
            }
            Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
        }
        "complete" => {
            if k == 0 {
                return Err(bad(name, k));
            }
            Graph::from_edges(k, (0..k).flat_map(|i| ((i + 1)..k).map(move |j| (i, j))))
        }
        "empty" => {
            if k == 0 {
                return Err(bad(name, k));
            }
            Graph::from_edges(k, std::iter::empty())
        }
        "disjoint_edges" => {
            if k == 0 {
                return Err(bad(name, k));
            }
            Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))
        }
        other => Err(GraphError::UnknownFamily(other.into())),
    }
}
