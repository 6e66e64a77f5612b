//! Exact `t`-colouring by DSATUR-ordered backtracking.

use super::Twins;
use crate::graph::{ColorPartition, MultipartiteGraph};

struct Dsatur {
    adj: Vec<Vec<usize>>,
    t: usize,
    color: Vec<Option<usize>>,
    /// `seen[v * t + c]`: neighbours of `v` currently coloured `c`.
    seen: Vec<u32>,
    degree: Vec<usize>,
}

impl Dsatur {
    fn saturation(&self, v: usize) -> usize {
        self.seen[v * self.t..(v + 1) * self.t]
            .iter()
            .filter(|&&c| c > 0)
            .count()
    }

    fn pick(&self) -> Option<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation(v), self.degree[v], std::cmp::Reverse(v)))
    }

    fn set(&mut self, v: usize, c: Option<usize>) {
        if let Some(old) = self.color[v] {
            for &u in &self.adj[v] {
                self.seen[u * self.t + old] -= 1;
            }
        }
        self.color[v] = c;
        if let Some(new) = c {
            for &u in &self.adj[v] {
                self.seen[u * self.t + new] += 1;
            }
        }
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        // Colours above `used` are interchangeable; try only the first.
        let limit = (used + 1).min(self.t);
        for c in 0..limit {
            if self.seen[v * self.t + c] > 0 {
                continue;
            }
            self.set(v, Some(c));
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.set(v, None);
        }
        false
    }
}

/// A proper colouring with at most `t` colours, or `None` if none exists.
pub fn find_coloring(g: &MultipartiteGraph, t: usize) -> Option<ColorPartition> {
    if t == 0 {
        return None;
    }
    let tw = Twins::of(g, false);
    let h = &tw.reduced;
    let nv = h.num_vertices();
    let k = t.min(nv.max(1));
    let adj: Vec<Vec<usize>> = (0..nv).map(|v| h.neighbors(v).collect()).collect();
    let degree = adj.iter().map(Vec::len).collect();
    let mut d = Dsatur {
        adj,
        t: k,
        color: vec![None; nv],
        seen: vec![0; nv * k],
        degree,
    };
    if !d.solve(0) {
        return None;
    }
    let class_of = tw
        .class_of
        .iter()
        .map(|&c| d.color[c].expect("all coloured"))
        .collect();
    Some(ColorPartition::new(g, class_of, t).expect("lifted colouring is proper"))
}
