//! Explicit extremal graphs, each returned with its colouring witness.
//!
//! Every constructor measures the degrees of what it built and refuses to
//! return a graph whose measured values disagree with the closed form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{self, decompose, prop61_bound};
use crate::error::{domain, not_applicable, Error, Result};
use crate::graph::{ColorPartition, GraphBuilder, MultipartiteGraph};
use crate::rational::{ceil_div, Rational};
use crate::verifier::max_crossing_independent_size;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Blow-up of the Turán graph `T_t(r)`.
    TuranBlowup,
    /// Block construction for `r = m t - a`, `1 <= a <= m`.
    Block,
    /// Block construction joined with universal classes, `2 <= m < a < t`.
    ShiftedBlock,
    /// `k` blocks of large vertices over copies of an inner graph.
    Composition,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::TuranBlowup,
        Method::Block,
        Method::ShiftedBlock,
        Method::Composition,
    ];

    /// Short name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Method::TuranBlowup => "turan",
            Method::Block => "prop41",
            Method::ShiftedBlock => "prop42",
            Method::Composition => "prop61",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.cli_name() == s)
            .ok_or_else(|| domain(format!("unknown construction method {s:?}")))
    }
}

/// A constructed graph with the values it is claimed to attain.
#[derive(Clone, Debug)]
pub struct ConstructionOutput {
    pub graph: MultipartiteGraph,
    /// Colour classes `W_1, ..., W_t` when the graph is `t`-colourable by
    /// design.
    pub coloring: Option<ColorPartition>,
    pub claimed_min_degree: usize,
    pub claimed_max_degree: Option<usize>,
    /// Closed-form upper bound on the maximum degree, when one is part of
    /// the statement (composition only).
    pub max_degree_bound: Option<usize>,
    pub method: Method,
    pub n: usize,
    pub r: usize,
    /// Forbidden-structure size: the graph has no `K_{t+1}`, or for the
    /// composition, no crossing independent set of size `t`.
    pub t: usize,
}

impl ConstructionOutput {
    fn finish(self) -> Result<Self> {
        let g = &self.graph;
        let (lo, hi) = (g.min_degree(), g.max_degree());
        if lo != self.claimed_min_degree {
            return Err(Error::Consistency(format!(
                "{}: measured min degree {lo}, claimed {}",
                self.method, self.claimed_min_degree
            )));
        }
        if let Some(c) = self.claimed_max_degree.filter(|&c| c != hi) {
            return Err(Error::Consistency(format!(
                "{}: measured max degree {hi}, claimed {c}",
                self.method
            )));
        }
        if let Some(b) = self.max_degree_bound.filter(|&b| hi > b) {
            return Err(Error::Consistency(format!(
                "{}: max degree {hi} exceeds bound {b}",
                self.method
            )));
        }
        Ok(self)
    }
}

fn usize_of(v: i128) -> usize {
    usize::try_from(v).expect("degree fits in usize")
}

/// Balanced graph where `u ~ v` iff they lie in different parts and
/// `class(u) != class(v)`.
fn class_graph(r: usize, n: usize, class: impl Fn(usize, usize) -> usize) -> Result<MultipartiteGraph> {
    let mut b = GraphBuilder::new(&vec![n; r])?;
    let cls: Vec<usize> = (0..r * n).map(|v| class(v / n, v % n)).collect();
    for u in 0..r * n {
        for v in (u / n + 1) * n..r * n {
            if cls[u] != cls[v] {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// Class of part `p` when `r` parts are split into `t` near-equal
/// contiguous groups, larger groups first.
fn turan_class(p: usize, r: usize, t: usize) -> usize {
    let (q, rem) = (r / t, r % t);
    let big = rem * (q + 1);
    if p < big {
        p / (q + 1)
    } else {
        rem + (p - big) / q
    }
}

/// Complete `t`-partite graph on `r n` vertices whose classes are unions of
/// `ceil(r/t)` or `floor(r/t)` parts of size `n`.
pub fn turan_blowup(n: usize, r: usize, t: usize) -> Result<ConstructionOutput> {
    if n < 1 || t < 2 || t > r {
        return Err(domain(format!(
            "turan blow-up needs n >= 1 and 2 <= t <= r, got n = {n}, r = {r}, t = {t}"
        )));
    }
    let graph = class_graph(r, n, |p, _| turan_class(p, r, t))?;
    let classes = (0..r * n).map(|v| turan_class(v / n, r, t)).collect();
    let coloring = ColorPartition::new(&graph, classes, t)?;
    ConstructionOutput {
        graph,
        coloring: Some(coloring),
        claimed_min_degree: (r - r.div_ceil(t)) * n,
        claimed_max_degree: Some((r - r / t) * n),
        max_degree_bound: None,
        method: Method::TuranBlowup,
        n,
        r,
        t,
    }
    .finish()
}

/// Graph in `G(n, r, t)` with minimum degree
/// `(r-1)n - (m-1) ceil((r-1)n / (mt-2))`, for `r = mt - a`, `1 <= a <= m`.
///
/// Parts are grouped into blocks `B_1..B_{t-1}` of `m` consecutive parts.
/// Colour class `W_i` takes the first `ℓ` vertices of every part in `B_i`;
/// `W_t` takes the rest. Edges join different parts and different classes.
pub fn prop41(n: usize, r: usize, t: usize) -> Result<ConstructionOutput> {
    let claimed = bounds::prop41_value(n as u64, r as u64, t as u64)?;
    let (m, a) = decompose(r as u64, t as u64)?;
    let (m, a) = (m as usize, a as usize);
    if a == 1 {
        let mut out = turan_blowup(n, r, t)?;
        out.method = Method::Block;
        out.claimed_max_degree = None;
        out.claimed_min_degree = usize_of(claimed);
        return out.finish();
    }
    let ell = usize_of(ceil_div(((r - 1) * n) as i128, (m * t - 2) as i128));
    debug_assert!(ell <= n);
    let class = |p: usize, i: usize| {
        if p < m * (t - 1) && i < ell {
            p / m
        } else {
            t - 1
        }
    };
    let graph = class_graph(r, n, class)?;
    let classes = (0..r * n).map(|v| class(v / n, v % n)).collect();
    let coloring = ColorPartition::new(&graph, classes, t)?;
    ConstructionOutput {
        graph,
        coloring: Some(coloring),
        claimed_min_degree: usize_of(claimed),
        claimed_max_degree: None,
        max_degree_bound: None,
        method: Method::Block,
        n,
        r,
        t,
    }
    .finish()
}

/// Graph in `G(n, r, t)` for `r = mt - a` with `2 <= m < a < t`.
///
/// The block construction for `t' = t - a + m`, `r' = m(t' - 1)` is joined
/// completely to `a - m` further classes of `(m-1)n` vertices each. Those
/// classes come first in the vertex order, split into runs of `n`.
pub fn prop42(n: usize, r: usize, t: usize) -> Result<ConstructionOutput> {
    let claimed = bounds::prop42_value(n as u64, r as u64, t as u64)?;
    let (m, a) = decompose(r as u64, t as u64)?;
    let (m, a) = (m as usize, a as usize);
    let t_inner = t - a + m;
    let r_inner = m * (t_inner - 1);
    let inner = prop41(n, r_inner, t_inner)?;
    let inner_col = inner.coloring.as_ref().expect("block construction is coloured");

    let extra = a - m;
    let extra_parts = extra * (m - 1);
    let shift = extra_parts * n;
    let total = r * n;
    debug_assert_eq!(extra_parts + r_inner, r);

    // W index of each vertex: 0..extra for added classes, `extra` for G'.
    let w = |v: usize| if v < shift { v / ((m - 1) * n) } else { extra };
    let mut b = GraphBuilder::new(&vec![n; r])?;
    for u in 0..shift {
        for v in u + 1..total {
            if w(u) != w(v) {
                b.add_edge(u, v)?;
            }
        }
    }
    for (u, v) in inner.graph.edges() {
        b.add_edge(u + shift, v + shift)?;
    }
    let graph = b.build();
    let classes = (0..total)
        .map(|v| {
            if v < shift {
                w(v)
            } else {
                extra + inner_col.color_of(v - shift)
            }
        })
        .collect();
    let coloring = ColorPartition::new(&graph, classes, t)?;
    ConstructionOutput {
        graph,
        coloring: Some(coloring),
        claimed_min_degree: usize_of(claimed),
        claimed_max_degree: None,
        max_degree_bound: None,
        method: Method::ShiftedBlock,
        n,
        r,
        t,
    }
    .finish()
}

/// `floor((r0 - 1) n / (delta0 + k r0 - 1))`, the number of small vertices
/// per part in the composition.
pub fn composition_small_size(n: usize, r0: usize, k: usize, delta0: &Rational) -> usize {
    let den = delta0 + &Rational::integer((k * r0 - 1) as i128);
    let ell = &Rational::integer(((r0 - 1) * n) as i128) / &den;
    usize_of(ell.floor())
}

/// Composition of `k` blocks: `r = r0 k` parts of size `n`, with no crossing
/// independent set of size `k + t0`.
///
/// Each part is split into `ℓ` small vertices (first) and `n - ℓ` large
/// ones. Large vertices are joined within their block, small vertices
/// across blocks, and `inner` is copied onto the small vertices of every
/// block. `inner` must be `r0`-partite with parts of size `ℓ`, have no
/// crossing independent set of size `t0`, and maximum degree at most
/// `delta0 * ℓ`.
pub fn prop61(
    n: usize,
    inner: &MultipartiteGraph,
    t0: usize,
    delta0: &Rational,
    k: usize,
) -> Result<ConstructionOutput> {
    let r0 = inner.num_parts();
    let bound = prop61_bound(n as u64, r0 as u64, t0 as u64, k as u64, delta0)?;
    let ell = composition_small_size(n, r0, k, delta0);
    if ell == 0 {
        return Err(Error::Degenerate(format!(
            "no small vertices: floor({}n / ({delta0} + {})) = 0 at n = {n}",
            r0 - 1,
            k * r0 - 1
        )));
    }
    if inner.balanced_part_size() != Some(ell) {
        return Err(Error::InvalidInner(format!(
            "parts must all have size {ell}, got {:?}",
            inner.part_sizes()
        )));
    }
    let cis = max_crossing_independent_size(inner);
    if cis >= t0 {
        return Err(Error::InvalidInner(format!(
            "has a crossing independent set of size {cis} >= {t0}"
        )));
    }
    let inner_max = inner.max_degree();
    if Rational::integer(inner_max as i128) > delta0 * &Rational::integer(ell as i128) {
        return Err(Error::InvalidInner(format!(
            "max degree {inner_max} exceeds {delta0} * {ell}"
        )));
    }

    let r = r0 * k;
    let block = |v: usize| v / n / r0;
    let small = |v: usize| v % n < ell;
    let mut b = GraphBuilder::new(&vec![n; r])?;
    for u in 0..r * n {
        for v in (u / n + 1) * n..r * n {
            let join = match (small(u), small(v)) {
                (false, false) => block(u) == block(v),
                (true, true) if block(u) != block(v) => true,
                (true, true) => {
                    let local = |x: usize| (x / n % r0) * ell + x % n;
                    inner.has_edge(local(u), local(v))
                }
                _ => false,
            };
            if join {
                b.add_edge(u, v)?;
            }
        }
    }
    let graph = b.build();
    let across = (k - 1) * r0 * ell;
    let large = (r0 - 1) * (n - ell);
    ConstructionOutput {
        graph,
        coloring: None,
        claimed_min_degree: (across + inner.min_degree()).min(large),
        claimed_max_degree: Some((across + inner_max).max(large)),
        max_degree_bound: Some(usize_of(bound)),
        method: Method::Composition,
        n,
        r,
        t: k + t0,
    }
    .finish()
}

/// Inner graph for the composition: the cross complement of the `ℓ`-blow-up
/// of `T_{t0-1}(r0)`. Its largest crossing independent set has `t0 - 1`
/// vertices and its maximum degree is `(ceil(r0/(t0-1)) - 1) ℓ`, so
/// `delta0 = ceil(r0/(t0-1)) - 1` works for every `ℓ`.
pub fn default_inner(ell: usize, r0: usize, t0: usize) -> Result<(MultipartiteGraph, Rational)> {
    if t0 < 2 || t0 > r0 || ell < 1 {
        return Err(domain(format!(
            "default inner graph needs 2 <= t0 <= r0 and ell >= 1, got t0 = {t0}, r0 = {r0}, ell = {ell}"
        )));
    }
    let s = t0 - 1;
    let blowup = class_graph(r0, ell, |p, _| turan_class(p, r0, s))?;
    let delta0 = Rational::integer((r0.div_ceil(s) - 1) as i128);
    Ok((blowup.cross_complement(), delta0))
}

/// Composition with [`default_inner`].
pub fn prop61_default(n: usize, r0: usize, t0: usize, k: usize) -> Result<ConstructionOutput> {
    if t0 < 2 || t0 > r0 {
        return Err(domain(format!("need 2 <= t0 <= r0, got t0 = {t0}, r0 = {r0}")));
    }
    let delta0 = Rational::integer((r0.div_ceil(t0 - 1) - 1) as i128);
    let ell = composition_small_size(n, r0, k, &delta0);
    if ell == 0 {
        // Let the main constructor report the degenerate size.
        let placeholder = MultipartiteGraph::balanced(r0, 1)?;
        return prop61(n, &placeholder, t0, &delta0, k);
    }
    let (inner, delta0) = default_inner(ell, r0, t0)?;
    prop61(n, &inner, t0, &delta0, k)
}

/// Dispatches on `method` for balanced `(n, r, t)` constructions.
pub fn construct(method: Method, n: usize, r: usize, t: usize) -> Result<ConstructionOutput> {
    match method {
        Method::TuranBlowup => turan_blowup(n, r, t),
        Method::Block => prop41(n, r, t),
        Method::ShiftedBlock => prop42(n, r, t),
        Method::Composition => Err(not_applicable(
            "the composition takes (n, r0, t0, k); use prop61_default",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{max_clique_size, max_crossing_independent_set};

    fn class_sizes(out: &ConstructionOutput) -> Vec<usize> {
        out.coloring.as_ref().unwrap().classes().iter().map(Vec::len).collect()
    }

    #[test]
    fn turan_examples() {
        let out = turan_blowup(2, 5, 3).unwrap();
        assert_eq!(class_sizes(&out), vec![4, 4, 2]);
        assert_eq!(out.graph.min_degree(), 6);
        let out = turan_blowup(1, 6, 3).unwrap();
        assert_eq!(out.graph.min_degree(), 4);
        let out = turan_blowup(3, 4, 2).unwrap();
        assert_eq!(class_sizes(&out), vec![6, 6]);
        assert_eq!(out.graph.min_degree(), 6);
        assert!(turan_blowup(1, 3, 4).is_err());
        assert!(turan_blowup(1, 3, 1).is_err());
    }

    #[test]
    fn block_examples() {
        let out = prop41(10, 10, 3).unwrap();
        assert_eq!(class_sizes(&out), vec![36, 36, 28]);
        assert_eq!(out.graph.min_degree(), 63);
        let out = prop41(1, 10, 3).unwrap();
        assert_eq!(out.graph.min_degree(), 6);
        let out = prop41(2, 5, 3).unwrap();
        assert_eq!(out.graph.min_degree(), 6);
        assert!(matches!(prop41(2, 6, 3), Err(Error::NotApplicable(_))));
        // m = 2, a = 3 > m.
        assert!(prop41(1, 7, 5).is_err());
    }

    #[test]
    fn shifted_block_examples() {
        let out = prop42(6, 7, 5).unwrap();
        assert_eq!(out.graph.min_degree(), 31);
        assert!(out.coloring.as_ref().unwrap().colors_used() <= 5);
        assert_eq!(max_clique_size(&out.graph), 5);
        let out = prop42(1, 7, 5).unwrap();
        assert_eq!(out.graph.min_degree(), 5);
        assert!(matches!(prop42(6, 10, 3), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn composition_small_instances() {
        let (inner, d0) = default_inner(1, 2, 2).unwrap();
        assert_eq!(inner, MultipartiteGraph::complete(&[1, 1]).unwrap());
        assert_eq!(d0, Rational::integer(1));
        let out = prop61(4, &inner, 2, &d0, 2).unwrap();
        assert_eq!(out.graph.part_sizes(), &[4, 4, 4, 4]);
        assert_eq!(out.t, 4);
        assert_eq!(out.graph.max_degree(), 3);
        assert_eq!(out.max_degree_bound, Some(3));
        assert!(max_crossing_independent_set(&out.graph).len() <= 3);

        let (inner, d0) = default_inner(1, 2, 2).unwrap();
        let out = prop61(6, &inner, 2, &d0, 2).unwrap();
        assert_eq!(out.graph.max_degree(), 5);
    }

    #[test]
    fn composition_rejects_bad_inner() {
        let d0 = Rational::integer(1);
        // Edgeless inner graph has an independent transversal.
        let bad = MultipartiteGraph::edgeless(&[1, 1]).unwrap();
        assert!(matches!(prop61(4, &bad, 2, &d0, 2), Err(Error::InvalidInner(_))));
        // Wrong part size.
        let wrong = MultipartiteGraph::complete(&[2, 2]).unwrap();
        assert!(matches!(prop61(4, &wrong, 2, &d0, 2), Err(Error::InvalidInner(_))));
        // n = 2 gives ell = floor(2/4) = 0.
        let inner = MultipartiteGraph::complete(&[1, 1]).unwrap();
        assert!(matches!(prop61(2, &inner, 2, &d0, 2), Err(Error::Degenerate(_))));
    }

    #[test]
    fn deterministic_edges() {
        let a = prop41(5, 10, 3).unwrap().graph;
        let b = prop41(5, 10, 3).unwrap().graph;
        assert!(a.edges().eq(b.edges()));
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.cli_name().parse::<Method>().unwrap(), m);
        }
        assert!("prop99".parse::<Method>().is_err());
    }
}
