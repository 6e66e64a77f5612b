//! Branch and bound for cliques, one part at a time.
//!
//! A clique meets every part at most once, so the search walks parts in
//! ascending order and either picks a candidate from the part or skips it.
//! The bound is the smaller of the number of later parts that still hold a
//! candidate and a greedy colouring of the candidates.

use super::Twins;
use crate::bitset::{self, BitSet};
use crate::graph::MultipartiteGraph;

struct Search<'a> {
    g: &'a MultipartiteGraph,
    part_masks: Vec<BitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
    /// Stop as soon as a clique of this size is found.
    target: usize,
}

impl Search<'_> {
    fn parts_with(&self, cand: &BitSet) -> usize {
        self.part_masks
            .iter()
            .filter(|m| cand.intersects(m.words()))
            .count()
    }

    fn greedy_colors(&self, cand: &BitSet, limit: usize) -> usize {
        let mut left = cand.clone();
        let mut colors = 0;
        while !left.is_empty() {
            colors += 1;
            if colors > limit {
                return colors;
            }
            let mut q = left.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(self.g.row(v));
                left.remove(v);
            }
        }
        colors
    }

    fn bound(&self, cand: &BitSet) -> usize {
        let by_parts = self.parts_with(cand);
        self.greedy_colors(cand, by_parts).min(by_parts)
    }

    fn done(&self) -> bool {
        self.best.len() >= self.target
    }

    fn run(&mut self, cand: BitSet) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if self.done() || cand.is_empty() {
            return;
        }
        if self.current.len() + self.bound(&cand) <= self.best.len() {
            return;
        }
        let first = cand.first().expect("nonempty");
        let part = self.g.part_of(first);
        let mut in_part = cand.clone();
        in_part.intersect_with(self.part_masks[part].words());
        let mut rest = cand;
        rest.difference_with(self.part_masks[part].words());
        for v in in_part.iter() {
            let mut next = rest.clone();
            next.intersect_with(self.g.row(v));
            self.current.push(v);
            self.run(next);
            self.current.pop();
            if self.done() {
                return;
            }
        }
        self.run(rest);
    }
}

fn search(g: &MultipartiteGraph, target: usize) -> Vec<usize> {
    let tw = Twins::of(g, false);
    let h = &tw.reduced;
    let nv = h.num_vertices();
    let part_masks = (0..h.num_parts())
        .map(|p| BitSet::with_range(nv, h.part_range(p)))
        .collect();
    let mut s = Search {
        g: h,
        part_masks,
        current: Vec::new(),
        best: Vec::new(),
        target,
    };
    s.run(BitSet::with_range(nv, 0..nv));
    tw.lift(&s.best)
}

/// A maximum clique, vertices ascending.
pub fn max_clique(g: &MultipartiteGraph) -> Vec<usize> {
    search(g, usize::MAX)
}

pub fn max_clique_size(g: &MultipartiteGraph) -> usize {
    max_clique(g).len()
}

/// Some clique on exactly `q` vertices, if one exists.
pub fn find_clique(g: &MultipartiteGraph, q: usize) -> Option<Vec<usize>> {
    if q == 0 {
        return Some(Vec::new());
    }
    let mut c = search(g, q);
    if c.len() < q {
        return None;
    }
    c.truncate(q);
    debug_assert!(is_clique(g, &c));
    Some(c)
}

pub(crate) fn is_clique(g: &MultipartiteGraph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| bitset::get(g.row(u), v)))
}
