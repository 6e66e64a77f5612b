//! Largest crossing independent set: at most one vertex per part, no edges.

use super::Twins;
use crate::bitset::BitSet;
use crate::graph::{CrossingSet, MultipartiteGraph};

struct Search<'a> {
    g: &'a MultipartiteGraph,
    part_masks: Vec<BitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, part: usize, cand: BitSet) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if part >= self.part_masks.len() {
            return;
        }
        let open = self.part_masks[part..]
            .iter()
            .filter(|m| cand.intersects(m.words()))
            .count();
        if self.current.len() + open <= self.best.len() {
            return;
        }
        let mut in_part = cand.clone();
        in_part.intersect_with(self.part_masks[part].words());
        let mut rest = cand;
        rest.difference_with(self.part_masks[part].words());
        for v in in_part.iter() {
            let mut next = rest.clone();
            next.difference_with(self.g.row(v));
            self.current.push(v);
            self.run(part + 1, next);
            self.current.pop();
            if self.best.len() == self.part_masks.len() {
                return;
            }
        }
        self.run(part + 1, rest);
    }
}

/// A largest crossing independent set of `g`.
pub fn max_crossing_independent_set(g: &MultipartiteGraph) -> CrossingSet {
    let tw = Twins::of(g, true);
    let h = &tw.reduced;
    let nv = h.num_vertices();
    let mut s = Search {
        g: h,
        part_masks: (0..h.num_parts())
            .map(|p| BitSet::with_range(nv, h.part_range(p)))
            .collect(),
        current: Vec::new(),
        best: Vec::new(),
    };
    s.run(0, BitSet::with_range(nv, 0..nv));
    let set = CrossingSet::new(g, tw.lift(&s.best)).expect("one vertex per part");
    debug_assert!(set.is_independent_in(g));
    set
}

pub fn max_crossing_independent_size(g: &MultipartiteGraph) -> usize {
    max_crossing_independent_set(g).len()
}
