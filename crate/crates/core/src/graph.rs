//! Multipartite graphs with a dense bit-matrix adjacency.
//!
//! Vertices are numbered part-major: part `p` owns the contiguous id range
//! `offset(p)..offset(p) + part_sizes[p]`. Every constructor and file format
//! in the crate uses this numbering, so identical inputs give identical
//! edge lists.

use std::fmt;
use std::ops::Range;

use crate::bitset::{self, BitSet};
use crate::error::{Error, Result};

/// An r-partite graph whose parts are independent sets.
///
/// Immutable once built; use [`GraphBuilder`] to add edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultipartiteGraph {
    part_sizes: Vec<usize>,
    offsets: Vec<usize>,
    part_of: Vec<usize>,
    words: usize,
    rows: Vec<u64>,
}

impl MultipartiteGraph {
    /// Edgeless graph with the given parts.
    pub fn edgeless(part_sizes: &[usize]) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(Error::InvalidStructure("no parts given".into()));
        }
        if let Some(p) = part_sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidStructure(format!("part {p} has size 0")));
        }
        let mut offsets = Vec::with_capacity(part_sizes.len() + 1);
        let mut part_of = Vec::new();
        offsets.push(0);
        for (p, &s) in part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, s));
            offsets.push(offsets[p] + s);
        }
        let n = part_of.len();
        let words = bitset::words_for(n);
        Ok(Self {
            part_sizes: part_sizes.to_vec(),
            offsets,
            part_of,
            words,
            rows: vec![0; n * words],
        })
    }

    /// `r` parts of size `n`, no edges.
    pub fn balanced(r: usize, n: usize) -> Result<Self> {
        Self::edgeless(&vec![n; r])
    }

    /// Every cross-part pair is an edge.
    pub fn complete(part_sizes: &[usize]) -> Result<Self> {
        Ok(Self::edgeless(part_sizes)?.cross_complement())
    }

    pub fn from_edges(part_sizes: &[usize], edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(part_sizes)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn num_vertices(&self) -> usize {
        self.part_of.len()
    }

    pub fn num_parts(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn part_range(&self, p: usize) -> Range<usize> {
        self.offsets[p]..self.offsets[p + 1]
    }

    /// Common part size, if all parts agree.
    pub fn balanced_part_size(&self) -> Option<usize> {
        let first = self.part_sizes[0];
        self.part_sizes.iter().all(|&s| s == first).then_some(first)
    }

    /// Neighbourhood of `v` as raw bitset words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::iter_ones(self.row(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::get(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.num_vertices()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Lowest-numbered vertex attaining the minimum degree.
    pub fn min_degree_vertex(&self) -> usize {
        let d = self.degrees();
        let min = d.iter().copied().min().unwrap_or(0);
        d.iter().position(|&x| x == min).unwrap_or(0)
    }

    pub fn max_degree_vertex(&self) -> usize {
        let d = self.degrees();
        let max = d.iter().copied().max().unwrap_or(0);
        d.iter().position(|&x| x == max).unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.num_vertices()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_vertices())
            .flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Same parts; a cross-part pair is an edge iff it is not one in `self`.
    pub fn cross_complement(&self) -> Self {
        let mut out = self.clone();
        let n = self.num_vertices();
        for v in 0..n {
            let own = BitSet::with_range(n, self.part_range(self.part_of[v]));
            let row = &mut out.rows[v * self.words..(v + 1) * self.words];
            for (w, (r, o)) in row.iter_mut().zip(own.words()).enumerate() {
                let valid = if (w + 1) * 64 <= n {
                    u64::MAX
                } else {
                    (1u64 << (n - w * 64)) - 1
                };
                *r = !*r & !o & valid;
            }
        }
        out
    }

    /// Subgraph induced on `keep` (ids refer to `self`); parts that lose every
    /// vertex are dropped.
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut sizes = vec![0usize; self.num_parts()];
        for &v in &keep {
            if v >= self.num_vertices() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: self.num_vertices(),
                });
            }
            sizes[self.part_of[v]] += 1;
        }
        let sizes: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
        let mut b = GraphBuilder::new(&sizes)?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok(b.build())
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder { graph: self.clone() }
    }
}

impl fmt::Debug for MultipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultipartiteGraph")
            .field("part_sizes", &self.part_sizes)
            .field("edges", &self.edge_count())
            .finish()
    }
}

/// Single-owner mutable stage of a [`MultipartiteGraph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    graph: MultipartiteGraph,
}

impl GraphBuilder {
    pub fn new(part_sizes: &[usize]) -> Result<Self> {
        Ok(Self {
            graph: MultipartiteGraph::edgeless(part_sizes)?,
        })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let count = self.graph.num_vertices();
        for x in [u, v] {
            if x >= count {
                return Err(Error::VertexOutOfRange { vertex: x, count });
            }
        }
        let part = self.graph.part_of[u];
        if part == self.graph.part_of[v] {
            return Err(Error::IntraPartEdge { u, v, part });
        }
        Ok(())
    }

    /// Adds `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check_pair(u, v)?;
        let w = self.graph.words;
        let rows = &mut self.graph.rows;
        rows[u * w + v / 64] |= 1 << (v % 64);
        rows[v * w + u / 64] |= 1 << (u % 64);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check_pair(u, v)?;
        let w = self.graph.words;
        let rows = &mut self.graph.rows;
        rows[u * w + v / 64] &= !(1 << (v % 64));
        rows[v * w + u / 64] &= !(1 << (u % 64));
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn graph(&self) -> &MultipartiteGraph {
        &self.graph
    }

    pub fn build(self) -> MultipartiteGraph {
        self.graph
    }
}

/// A proper colouring with at most `t` colours.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ColorPartition {
    class_of: Vec<usize>,
    t: usize,
}

impl ColorPartition {
    /// Validates that `class_of` colours every vertex of `g` properly with
    /// colours below `t`.
    pub fn new(g: &MultipartiteGraph, class_of: Vec<usize>, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidColoring("t must be positive".into()));
        }
        if class_of.len() != g.num_vertices() {
            return Err(Error::InvalidColoring(format!(
                "{} colours for {} vertices",
                class_of.len(),
                g.num_vertices()
            )));
        }
        if let Some(v) = class_of.iter().position(|&c| c >= t) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has colour {} >= {t}",
                class_of[v]
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| class_of[u] == class_of[v]) {
            return Err(Error::InvalidColoring(format!(
                "edge {u}-{v} is monochromatic"
            )));
        }
        Ok(Self { class_of, t })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.class_of
    }

    /// Vertices of each colour, including empty classes.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.t];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn colors_used(&self) -> usize {
        self.classes().iter().filter(|c| !c.is_empty()).count()
    }

    /// Re-checks properness against `g`.
    pub fn is_proper_for(&self, g: &MultipartiteGraph) -> bool {
        self.class_of.len() == g.num_vertices()
            && g.edges().all(|(u, v)| self.class_of[u] != self.class_of[v])
    }
}

/// A vertex set meeting each part at most once.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CrossingSet {
    vertices: Vec<usize>,
}

impl CrossingSet {
    pub fn new(g: &MultipartiteGraph, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        let mut seen = vec![false; g.num_parts()];
        for &v in &vertices {
            if v >= g.num_vertices() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: g.num_vertices(),
                });
            }
            let p = g.part_of(v);
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidStructure(format!(
                    "crossing set meets part {p} twice"
                )));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_independent_in(&self, g: &MultipartiteGraph) -> bool {
        let vs = &self.vertices;
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
    }
}
