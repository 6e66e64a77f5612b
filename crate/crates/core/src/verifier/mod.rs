//! Exact checkers: clique number, largest crossing independent set, bounded
//! colouring, the Andrásfai–Erdős–Sós consequence, and certificates.
//!
//! All searches first collapse vertices with identical neighbourhoods. Such
//! twins are pairwise non-adjacent and interchangeable, so cliques and
//! colourings of the collapsed graph lift back unchanged.

mod certificate;
mod clique;
mod coloring;
mod crossing;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

pub use certificate::{certify, certify_with, Certificate, Claim, PropertyCheck, Witness};
pub use clique::{find_clique, max_clique, max_clique_size};
pub use coloring::find_coloring;
pub use crossing::{max_crossing_independent_set, max_crossing_independent_size};

use crate::bounds::aes_threshold;
use crate::error::Result;
use crate::graph::{ColorPartition, MultipartiteGraph};
use crate::rational::Rational;

/// Representatives of the classes of vertices sharing an adjacency row.
///
/// With `within_parts` the classes are additionally split by part.
pub(crate) struct Twins {
    /// Induced subgraph on the representatives.
    pub reduced: MultipartiteGraph,
    /// `reps[i]` is the original id of reduced vertex `i`.
    pub reps: Vec<usize>,
    /// Original vertex -> reduced vertex of its class.
    pub class_of: Vec<usize>,
}

impl Twins {
    pub fn of(g: &MultipartiteGraph, within_parts: bool) -> Self {
        let mut seen: HashMap<(usize, &[u64]), usize> = HashMap::new();
        let mut reps = Vec::new();
        let mut class_of = Vec::with_capacity(g.num_vertices());
        for v in 0..g.num_vertices() {
            let key = (if within_parts { g.part_of(v) } else { 0 }, g.row(v));
            let next = reps.len();
            let c = *seen.entry(key).or_insert(next);
            if c == next {
                reps.push(v);
            }
            class_of.push(c);
        }
        let reduced = g.induced(&reps).expect("representatives are valid vertices");
        Self {
            reduced,
            reps,
            class_of,
        }
    }

    pub fn lift(&self, reduced_vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = reduced_vertices.iter().map(|&i| self.reps[i]).collect();
        out.sort_unstable();
        out
    }
}

/// Outcome of checking the minimum-degree colouring theorem on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum AesVerdict {
    /// The graph contains `K_{t+1}` or its minimum degree is at or below the
    /// threshold.
    Vacuous,
    /// Hypotheses hold and a `t`-colouring was found.
    Confirmed { coloring: ColorPartition },
    /// Hypotheses hold but no `t`-colouring exists. The theorem is proved,
    /// so this always indicates a defect in the checkers.
    Refuted { min_degree: usize, threshold: Rational },
}

impl AesVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, AesVerdict::Refuted { .. })
    }
}

/// If `g` is `K_{t+1}`-free with `δ(g) > (3t-4)|V|/(3t-1)`, a `t`-colouring
/// must exist; search for it.
pub fn aes_check(g: &MultipartiteGraph, t: usize) -> Result<AesVerdict> {
    let threshold = aes_threshold(t as u64, g.num_vertices() as u64)?;
    let delta = g.min_degree();
    if Rational::integer(delta as i128) <= threshold {
        return Ok(AesVerdict::Vacuous);
    }
    if find_clique(g, t + 1).is_some() {
        return Ok(AesVerdict::Vacuous);
    }
    Ok(match find_coloring(g, t) {
        Some(coloring) => AesVerdict::Confirmed { coloring },
        None => AesVerdict::Refuted {
            min_degree: delta,
            threshold,
        },
    })
}
