//! Exhaustive ground truth for tiny instances.
//!
//! [`oracle_f`] computes the largest minimum degree of an r-partite graph
//! with parts of size `n` and no `K_q`; [`oracle_delta`] computes the
//! smallest maximum degree of such a graph with no crossing independent set
//! of size `s`. Both binary-search a degree target and answer each "is the
//! target reachable" question by depth-first search over the cross pairs in
//! part-major order.
//!
//! The top `split_depth` levels of each search are fanned out over the
//! execution policy. Subtrees are numbered in DFS order; a subtree stops
//! early only when a lower-numbered one has already succeeded, and the
//! witness comes from the lowest successful subtree. Results therefore do
//! not depend on scheduling.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exec::Exec;
use crate::graph::{GraphBuilder, MultipartiteGraph};
use crate::verifier::{max_clique_size, max_crossing_independent_size};

/// Instances with more than this many vertices are refused.
pub const HARD_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Vertex cap, at most [`HARD_CAP`].
    pub cap: usize,
    pub exec: Exec,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Prune with lexicographic-leader constraints for swaps of adjacent
    /// vertices within a part and of adjacent parts.
    pub symmetry: bool,
    /// Number of branching levels dispatched as independent tasks.
    pub split_depth: usize,
    /// Rotates the dispatch order of the top-level tasks. Never changes
    /// results.
    pub seed: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            cap: HARD_CAP,
            exec: Exec::Parallel,
            jobs: None,
            symmetry: false,
            split_depth: 2,
            seed: 0,
        }
    }
}

impl OracleOptions {
    pub fn sequential() -> Self {
        Self {
            exec: Exec::Sequential,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    MaxMinDegreeKfree,
    MinMaxDegreeNoCrossing,
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub value: usize,
    pub witness: MultipartiteGraph,
    /// Search nodes visited over all decision problems.
    pub instances_explored: u64,
    pub mode: Mode,
    pub n: usize,
    pub r: usize,
    /// Forbidden clique size `q`, or forbidden crossing independent set
    /// size `s`.
    pub forbidden: usize,
}

/// Cross pairs of the balanced `r x n` vertex set plus the symmetry data.
struct PairSpace {
    nv: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<usize>,
    /// `remaining[d * nv + v]`: pairs at positions `>= d` touching `v`.
    remaining: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl PairSpace {
    fn new(n: usize, r: usize, symmetry: bool) -> Self {
        let nv = n * r;
        let part = |v: usize| v / n;
        let mut pairs = Vec::new();
        let mut index = vec![usize::MAX; nv * nv];
        for u in 0..nv {
            for v in u + 1..nv {
                if part(u) != part(v) {
                    index[u * nv + v] = pairs.len();
                    index[v * nv + u] = pairs.len();
                    pairs.push((u, v));
                }
            }
        }
        let mut remaining = vec![0; (pairs.len() + 1) * nv];
        for d in (0..pairs.len()).rev() {
            for v in 0..nv {
                remaining[d * nv + v] = remaining[(d + 1) * nv + v];
            }
            let (u, v) = pairs[d];
            remaining[d * nv + u] += 1;
            remaining[d * nv + v] += 1;
        }
        let mut generators = Vec::new();
        if symmetry {
            for p in 0..r {
                for i in 0..n.saturating_sub(1) {
                    let mut g: Vec<usize> = (0..nv).collect();
                    g.swap(p * n + i, p * n + i + 1);
                    generators.push(g);
                }
            }
            for p in 0..r.saturating_sub(1) {
                let mut g: Vec<usize> = (0..nv).collect();
                for i in 0..n {
                    g.swap(p * n + i, (p + 1) * n + i);
                }
                generators.push(g);
            }
        }
        Self {
            nv,
            pairs,
            index,
            remaining,
            generators,
        }
    }

    fn remaining(&self, depth: usize, v: usize) -> usize {
        self.remaining[depth * self.nv + v]
    }

    /// Every generator `g` must satisfy `x >=_lex g(x)` on the decided
    /// prefix `x[..depth]`.
    fn lex_leader_ok(&self, x: &[u8], depth: usize) -> bool {
        self.generators.iter().all(|g| {
            for p in 0..depth {
                let (u, v) = self.pairs[p];
                let q = self.index[g[u] * self.nv + g[v]];
                if q >= depth {
                    return true;
                }
                if x[p] != x[q] {
                    return x[p] > x[q];
                }
            }
            true
        })
    }
}

fn has_clique(adj: &[u32], mask: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (mask.count_ones() as usize) < k {
        return false;
    }
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], k - 1) {
            return true;
        }
    }
    false
}

/// One decision problem. Implementations keep their own state so the two
/// oracles stay independent of each other.
trait Decision: Clone + Send {
    fn space(&self) -> &PairSpace;
    fn assignment(&mut self) -> &mut Vec<u8>;
    /// Branch order at each pair.
    fn order(&self) -> [u8; 2];
    /// Applies `bit` at `depth` if the local constraints allow it.
    fn apply(&mut self, depth: usize, bit: u8) -> bool;
    fn undo(&mut self, depth: usize, bit: u8);
    fn witness(&self) -> Vec<(usize, usize)>;
}

fn try_assign<D: Decision>(d: &mut D, depth: usize, bit: u8, symmetry: bool) -> bool {
    if !d.apply(depth, bit) {
        return false;
    }
    d.assignment()[depth] = bit;
    if symmetry {
        let x = d.assignment().clone();
        if !d.space().lex_leader_ok(&x, depth + 1) {
            d.undo(depth, bit);
            return false;
        }
    }
    true
}

struct Walker<'a, D> {
    d: D,
    symmetry: bool,
    nodes: u64,
    stop: &'a dyn Fn() -> bool,
}

impl<D: Decision> Walker<'_, D> {
    fn dfs(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        if depth == self.d.space().pairs.len() {
            return true;
        }
        if self.nodes.is_multiple_of(4096) && (self.stop)() {
            return false;
        }
        for bit in self.d.order() {
            if try_assign(&mut self.d, depth, bit, self.symmetry) {
                if self.dfs(depth + 1) {
                    return true;
                }
                self.d.undo(depth, bit);
            }
        }
        false
    }
}

/// Solves one decision problem, returning a witness edge list.
fn decide<D: Decision + Sync>(root: &D, opts: &OracleOptions, nodes: &AtomicU64) -> Option<Vec<(usize, usize)>> {
    let total = root.space().pairs.len();
    let split = opts.split_depth.min(total);

    // Enumerate surviving prefixes in DFS order.
    let mut prefixes: Vec<D> = Vec::new();
    let mut stack = vec![(root.clone(), 0usize)];
    while let Some((d, depth)) = stack.pop() {
        nodes.fetch_add(1, Ordering::Relaxed);
        if depth == split {
            prefixes.push(d);
            continue;
        }
        for bit in d.order().into_iter().rev() {
            let mut child = d.clone();
            if try_assign(&mut child, depth, bit, opts.symmetry) {
                stack.push((child, depth + 1));
            }
        }
    }

    let best = AtomicUsize::new(usize::MAX);
    let mut tasks: Vec<usize> = (0..prefixes.len()).collect();
    if !tasks.is_empty() {
        let shift = (opts.seed % tasks.len() as u64) as usize;
        tasks.rotate_left(shift);
    }
    let found = opts.exec.install(opts.jobs, || {
        opts.exec.map(&tasks, |&i| {
            let stop = || best.load(Ordering::Relaxed) < i;
            let mut w = Walker {
                d: prefixes[i].clone(),
                symmetry: opts.symmetry,
                nodes: 0,
                stop: &stop,
            };
            let ok = w.dfs(split);
            nodes.fetch_add(w.nodes, Ordering::Relaxed);
            if ok {
                best.fetch_min(i, Ordering::Relaxed);
                Some((i, w.d.witness()))
            } else {
                None
            }
        })
    });
    found.into_iter().flatten().min_by_key(|(i, _)| *i).map(|(_, e)| e)
}

#[derive(Clone)]
struct MinDegreeKfree<'a> {
    space: &'a PairSpace,
    q: usize,
    target: usize,
    adj: Vec<u32>,
    deg: Vec<usize>,
    x: Vec<u8>,
}

impl Decision for MinDegreeKfree<'_> {
    fn space(&self) -> &PairSpace {
        self.space
    }

    fn assignment(&mut self) -> &mut Vec<u8> {
        &mut self.x
    }

    fn order(&self) -> [u8; 2] {
        [1, 0]
    }

    fn apply(&mut self, depth: usize, bit: u8) -> bool {
        let (u, v) = self.space.pairs[depth];
        if bit == 1 {
            if has_clique(&self.adj, self.adj[u] & self.adj[v], self.q - 2) {
                return false;
            }
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.deg[u] += 1;
            self.deg[v] += 1;
            true
        } else {
            // deg + undecided-after-this must still reach the target.
            [u, v]
                .iter()
                .all(|&w| self.deg[w] + self.space.remaining(depth + 1, w) >= self.target)
        }
    }

    fn undo(&mut self, depth: usize, bit: u8) {
        if bit == 1 {
            let (u, v) = self.space.pairs[depth];
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
    }

    fn witness(&self) -> Vec<(usize, usize)> {
        edges_of(&self.adj)
    }
}

#[derive(Clone)]
struct MaxDegreeNoCrossing<'a> {
    space: &'a PairSpace,
    s: usize,
    cap: usize,
    adj: Vec<u32>,
    /// Decided non-edges between different parts.
    non: Vec<u32>,
    deg: Vec<usize>,
    x: Vec<u8>,
}

impl Decision for MaxDegreeNoCrossing<'_> {
    fn space(&self) -> &PairSpace {
        self.space
    }

    fn assignment(&mut self) -> &mut Vec<u8> {
        &mut self.x
    }

    fn order(&self) -> [u8; 2] {
        [0, 1]
    }

    fn apply(&mut self, depth: usize, bit: u8) -> bool {
        let (u, v) = self.space.pairs[depth];
        if bit == 1 {
            if self.deg[u] >= self.cap || self.deg[v] >= self.cap {
                return false;
            }
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.deg[u] += 1;
            self.deg[v] += 1;
        } else {
            // A crossing independent set through u and v would need s - 2
            // more vertices pairwise joined by decided non-edges.
            if has_clique(&self.non, self.non[u] & self.non[v], self.s - 2) {
                return false;
            }
            self.non[u] |= 1 << v;
            self.non[v] |= 1 << u;
        }
        true
    }

    fn undo(&mut self, depth: usize, bit: u8) {
        let (u, v) = self.space.pairs[depth];
        if bit == 1 {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        } else {
            self.non[u] &= !(1 << v);
            self.non[v] &= !(1 << u);
        }
    }

    fn witness(&self) -> Vec<(usize, usize)> {
        edges_of(&self.adj)
    }
}

fn edges_of(adj: &[u32]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, &row) in adj.iter().enumerate() {
        for v in u + 1..adj.len() {
            if row >> v & 1 == 1 {
                out.push((u, v));
            }
        }
    }
    out
}

fn check_size(n: usize, r: usize, opts: &OracleOptions) -> Result<()> {
    if opts.cap > HARD_CAP {
        return Err(domain(format!("cap {} exceeds the hard cap {HARD_CAP}", opts.cap)));
    }
    if n < 1 || r < 2 {
        return Err(domain(format!("need n >= 1 and r >= 2, got n = {n}, r = {r}")));
    }
    let vertices = n.saturating_mul(r);
    if vertices > opts.cap {
        return Err(Error::TooLarge {
            vertices,
            cap: opts.cap,
        });
    }
    Ok(())
}

fn graph(n: usize, r: usize, edges: &[(usize, usize)]) -> MultipartiteGraph {
    let mut b = GraphBuilder::new(&vec![n; r]).expect("valid parts");
    for &(u, v) in edges {
        b.add_edge(u, v).expect("cross pair");
    }
    b.build()
}

/// Largest `δ(G)` over r-partite `K_q`-free `G` with parts of size `n`.
pub fn oracle_f(n: usize, r: usize, q: usize, opts: &OracleOptions) -> Result<OracleResult> {
    check_size(n, r, opts)?;
    if q < 3 {
        return Err(domain(format!("need q >= 3, got {q}")));
    }
    let space = PairSpace::new(n, r, opts.symmetry);
    let nodes = AtomicU64::new(0);
    let root = |target| MinDegreeKfree {
        space: &space,
        q,
        target,
        adj: vec![0; space.nv],
        deg: vec![0; space.nv],
        x: vec![0; space.pairs.len()],
    };
    // The edgeless graph settles target 0.
    let (mut lo, mut hi) = (0, (r - 1) * n);
    let mut best = Vec::new();
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        match decide(&root(mid), opts, &nodes) {
            Some(e) => {
                lo = mid;
                best = e;
            }
            None => hi = mid - 1,
        }
    }
    let witness = graph(n, r, &best);
    if witness.min_degree() != lo || max_clique_size(&witness) >= q {
        return Err(Error::Consistency(format!(
            "oracle_f({n},{r},{q}) witness fails re-verification"
        )));
    }
    Ok(OracleResult {
        value: lo,
        witness,
        instances_explored: nodes.into_inner(),
        mode: Mode::MaxMinDegreeKfree,
        n,
        r,
        forbidden: q,
    })
}

/// Smallest `Δ(G)` over r-partite `G` with parts of size `n` and no crossing
/// independent set of size `s`.
pub fn oracle_delta(n: usize, r: usize, s: usize, opts: &OracleOptions) -> Result<OracleResult> {
    check_size(n, r, opts)?;
    if s < 2 || s > r {
        return Err(domain(format!("need 2 <= s <= r, got s = {s}, r = {r}")));
    }
    let space = PairSpace::new(n, r, opts.symmetry);
    let nodes = AtomicU64::new(0);
    let root = |cap| MaxDegreeNoCrossing {
        space: &space,
        s,
        cap,
        adj: vec![0; space.nv],
        non: vec![0; space.nv],
        deg: vec![0; space.nv],
        x: vec![0; space.pairs.len()],
    };
    // The complete r-partite graph settles cap (r-1)n.
    let (mut lo, mut hi) = (0, (r - 1) * n);
    let mut best = MultipartiteGraph::complete(&vec![n; r])?.edges().collect();
    while lo < hi {
        let mid = (lo + hi) / 2;
        match decide(&root(mid), opts, &nodes) {
            Some(e) => {
                hi = mid;
                best = e;
            }
            None => lo = mid + 1,
        }
    }
    let witness = graph(n, r, &best);
    if witness.max_degree() != hi || max_crossing_independent_size(&witness) >= s {
        return Err(Error::Consistency(format!(
            "oracle_delta({n},{r},{s}) witness fails re-verification"
        )));
    }
    Ok(OracleResult {
        value: hi,
        witness,
        instances_explored: nodes.into_inner(),
        mode: Mode::MinMaxDegreeNoCrossing,
        n,
        r,
        forbidden: s,
    })
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub f: OracleResult,
    pub delta: OracleResult,
}

/// Checks `Δ(n, r, s) = (r-1)n - f(n, r, s)` and that each witness's cross
/// complement is optimal for the other problem.
pub fn duality_audit(n: usize, r: usize, s: usize, opts: &OracleOptions) -> Result<DualityReport> {
    let f = oracle_f(n, r, s, opts)?;
    let delta = oracle_delta(n, r, s, opts)?;
    let full = (r - 1) * n;
    if delta.value + f.value != full {
        return Err(Error::Consistency(format!(
            "duality fails at ({n},{r},{s}): delta {} + f {} != {full}",
            delta.value, f.value
        )));
    }
    let from_f = f.witness.cross_complement();
    if from_f.max_degree() != delta.value || max_crossing_independent_size(&from_f) >= s {
        return Err(Error::Consistency(
            "complement of the f witness is not delta-optimal".into(),
        ));
    }
    let from_delta = delta.witness.cross_complement();
    if from_delta.min_degree() != f.value || max_clique_size(&from_delta) >= s {
        return Err(Error::Consistency(
            "complement of the delta witness is not f-optimal".into(),
        ));
    }
    Ok(DualityReport { f, delta })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_f_values() {
        let o = OracleOptions::sequential();
        assert_eq!(oracle_f(1, 5, 4, &o).unwrap().value, 3);
        assert_eq!(oracle_f(1, 4, 4, &o).unwrap().value, 2);
        assert_eq!(oracle_f(2, 3, 3, &o).unwrap().value, 2);
        assert_eq!(oracle_f(1, 3, 3, &o).unwrap().value, 1);
    }

    #[test]
    fn small_delta_values() {
        let o = OracleOptions::default();
        assert_eq!(oracle_delta(1, 5, 4, &o).unwrap().value, 1);
        assert_eq!(oracle_delta(2, 2, 2, &o).unwrap().value, 2);
        assert_eq!(oracle_delta(1, 3, 3, &o).unwrap().value, 1);
    }

    #[test]
    fn size_cap() {
        let o = OracleOptions::default();
        assert!(matches!(
            oracle_f(2, 6, 4, &o),
            Err(Error::TooLarge { vertices: 12, cap: 10 })
        ));
        let loose = OracleOptions { cap: 11, ..o.clone() };
        assert!(matches!(oracle_f(1, 3, 3, &loose), Err(Error::Domain(_))));
        let tight = OracleOptions { cap: 4, ..o };
        assert!(matches!(oracle_f(1, 5, 4, &tight), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn rejects_trivial_forbidden_sizes() {
        let o = OracleOptions::default();
        assert!(oracle_f(1, 4, 2, &o).is_err());
        assert!(oracle_delta(1, 4, 1, &o).is_err());
        assert!(oracle_delta(1, 4, 5, &o).is_err());
    }

    #[test]
    fn duality_small() {
        let o = OracleOptions::default();
        for (n, r, s) in [(1, 4, 4), (1, 5, 4), (2, 3, 3)] {
            let rep = duality_audit(n, r, s, &o).unwrap();
            assert_eq!(rep.delta.value + rep.f.value, (r - 1) * n);
        }
    }

    #[test]
    fn symmetry_and_schedule_do_not_change_values() {
        let plain = OracleOptions::sequential();
        let sym = OracleOptions {
            symmetry: true,
            ..OracleOptions::default()
        };
        let deep = OracleOptions {
            split_depth: 6,
            seed: 17,
            ..OracleOptions::default()
        };
        for (n, r, q) in [(2, 3, 3), (1, 6, 4), (2, 4, 4), (1, 6, 3)] {
            let a = oracle_f(n, r, q, &plain).unwrap();
            let b = oracle_f(n, r, q, &sym).unwrap();
            let c = oracle_f(n, r, q, &deep).unwrap();
            assert_eq!(a.value, b.value, "({n},{r},{q})");
            assert_eq!(a.value, c.value);
            assert!(b.instances_explored <= a.instances_explored);
            let d1 = oracle_delta(n, r, q, &plain).unwrap();
            let d2 = oracle_delta(n, r, q, &sym).unwrap();
            assert_eq!(d1.value, d2.value);
        }
    }

    #[test]
    fn witness_is_schedule_independent() {
        let seq = OracleOptions { split_depth: 5, ..OracleOptions::sequential() };
        let par = OracleOptions { split_depth: 5, seed: 3, ..OracleOptions::default() };
        let a = oracle_f(1, 6, 4, &seq).unwrap();
        let b = oracle_f(1, 6, 4, &par).unwrap();
        assert_eq!(a.witness, b.witness);
    }
}
