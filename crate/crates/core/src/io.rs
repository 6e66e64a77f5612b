//! Graph file formats.
//!
//! The primary format is a versioned JSON document:
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "parts": [2, 2],
//!   "edges": [[0, 2], [1, 3]],
//!   "metadata": {"method": "turan"}
//! }
//! ```
//!
//! Edges use part-major vertex ids with `u < v` and are sorted, so writing
//! the same graph always yields the same bytes. A DIMACS edge list is also
//! supported; its `c parts ...` comment line carries the part sizes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::MultipartiteGraph;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub schema_version: u32,
    pub parts: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl GraphFile {
    pub fn from_graph(g: &MultipartiteGraph) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            parts: g.part_sizes().to_vec(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }

    /// Checks the invariants and builds the graph.
    pub fn to_graph(&self) -> Result<MultipartiteGraph> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Format(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        for w in self.edges.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Format(format!(
                    "edges not strictly sorted at {:?}, {:?}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(e) = self.edges.iter().find(|e| e[0] >= e[1]) {
            return Err(Error::Format(format!("edge {e:?} must have u < v")));
        }
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        MultipartiteGraph::from_edges(&self.parts, &pairs)
    }

    /// Canonical text: two-space indented JSON, one edge per line, trailing
    /// newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = String::new();
        s.push_str("{\n");
        let _ = writeln!(s, "  \"schema_version\": {},", self.schema_version);
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "  \"parts\": [{}],", parts.join(", "));
        if self.edges.is_empty() {
            s.push_str("  \"edges\": [],\n");
        } else {
            s.push_str("  \"edges\": [\n");
            for (i, [u, v]) in self.edges.iter().enumerate() {
                let sep = if i + 1 < self.edges.len() { "," } else { "" };
                let _ = writeln!(s, "    [{u}, {v}]{sep}");
            }
            s.push_str("  ],\n");
        }
        if self.metadata.is_empty() {
            s.push_str("  \"metadata\": {}\n");
        } else {
            s.push_str("  \"metadata\": {\n");
            for (i, (k, v)) in self.metadata.iter().enumerate() {
                let sep = if i + 1 < self.metadata.len() { "," } else { "" };
                let k = serde_json::to_string(k).expect("string serializes");
                let v = serde_json::to_string(v).expect("string serializes");
                let _ = writeln!(s, "    {k}: {v}{sep}");
            }
            s.push_str("  }\n");
        }
        s.push_str("}\n");
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn write_json(g: &MultipartiteGraph) -> String {
    GraphFile::from_graph(g).to_canonical_string()
}

pub fn read_json(text: &str) -> Result<MultipartiteGraph> {
    GraphFile::parse(text)?.to_graph()
}

/// DIMACS `p edge` format with 1-based ids.
pub fn write_dimacs(g: &MultipartiteGraph) -> String {
    let mut s = String::new();
    let parts: Vec<String> = g.part_sizes().iter().map(usize::to_string).collect();
    let _ = writeln!(s, "c parts {}", parts.join(" "));
    let _ = writeln!(s, "p edge {} {}", g.num_vertices(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

/// Reads a DIMACS edge list. Without a `c parts` line every vertex is its
/// own part.
pub fn read_dimacs(text: &str) -> Result<MultipartiteGraph> {
    let mut parts: Option<Vec<usize>> = None;
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let bad = |line: &str| Error::Format(format!("bad DIMACS line {line:?}"));
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("c") => {
                if tok.next() == Some("parts") {
                    let sizes = tok
                        .map(str::parse)
                        .collect::<std::result::Result<Vec<usize>, _>>()
                        .map_err(|_| bad(line))?;
                    parts = Some(sizes);
                }
            }
            Some("p") => {
                let _kind = tok.next().ok_or_else(|| bad(line))?;
                let nv = tok.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad(line))?;
                vertices = Some(nv);
            }
            Some("e") => {
                let mut id = || -> Result<usize> {
                    let x: usize = tok.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad(line))?;
                    x.checked_sub(1).ok_or_else(|| bad(line))
                };
                let (u, v) = (id()?, id()?);
                edges.push((u, v));
            }
            _ => return Err(bad(line)),
        }
    }
    let nv = vertices.ok_or_else(|| Error::Format("missing `p` line".into()))?;
    let parts = parts.unwrap_or_else(|| vec![1; nv]);
    if parts.iter().sum::<usize>() != nv {
        return Err(Error::Format(format!(
            "parts sum to {} but the header declares {nv} vertices",
            parts.iter().sum::<usize>()
        )));
    }
    MultipartiteGraph::from_edges(&parts, &edges)
}

/// Reads either format, choosing by the first non-blank character.
pub fn read_graph_file(path: &Path) -> Result<MultipartiteGraph> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        read_json(&text)
    } else {
        read_dimacs(&text)
    }
}

/// `sha256:` digest of the canonical JSON of `g` without metadata.
pub fn graph_digest(g: &MultipartiteGraph) -> String {
    let text = write_json(g);
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}
