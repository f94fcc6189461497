use super::SolutionStream;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

struct Frame {
    /// Candidates from the uncovered edge being branched on.
    cands: Vec<usize>,
    next: usize,
    /// Candidates outside that edge, inherited by every child.
    base: VertexSet,
}

/// Explicit-stack hitting-set search. Each node branches on the lowest
/// uncovered edge; a branch survives only if every chosen vertex still owns
/// a private edge. Earlier siblings return to the candidate pool of later
/// ones, so each minimal transversal is reached once.
pub struct DfsTransversals {
    h: Hypergraph,
    frames: Vec<Frame>,
    chosen: Vec<usize>,
    chosen_set: VertexSet,
    ticks: u64,
    started: bool,
    exhausted: bool,
}

impl DfsTransversals {
    pub fn new(h: Hypergraph) -> Self {
        DfsTransversals {
            h,
            frames: Vec::new(),
            chosen: Vec::new(),
            chosen_set: VertexSet::new(),
            ticks: 0,
            started: false,
            exhausted: false,
        }
    }

    /// Opens a node with candidate pool `cand`; returns the current set when
    /// it already covers everything.
    fn expand(&mut self, cand: VertexSet) -> Option<VertexSet> {
        let mut uncovered = None;
        for e in self.h.edges() {
            self.ticks += 1;
            if !e.intersects(&self.chosen_set) {
                uncovered = Some(e);
                break;
            }
        }
        let Some(edge) = uncovered else {
            return Some(self.chosen_set.clone());
        };
        let inside = cand.intersection(edge);
        let base = cand.difference(edge);
        self.frames.push(Frame {
            cands: inside.to_vec(),
            next: 0,
            base,
        });
        None
    }

    /// Every chosen vertex is the sole chosen member of some edge.
    fn all_critical(&mut self) -> bool {
        let mut owners = VertexSet::new();
        for e in self.h.edges() {
            self.ticks += 1;
            if e.intersection_len(&self.chosen_set) == 1 {
                owners.insert(e.first_common(&self.chosen_set).unwrap());
            }
        }
        owners == self.chosen_set
    }
}

impl Iterator for DfsTransversals {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            if let Some(s) = self.expand(VertexSet::full(self.h.n())) {
                return Some(s);
            }
        }
        loop {
            let Some(frame) = self.frames.last_mut() else {
                self.exhausted = true;
                return None;
            };
            if frame.next == frame.cands.len() {
                self.frames.pop();
                if !self.frames.is_empty() {
                    let v = self.chosen.pop().unwrap();
                    self.chosen_set.remove(v);
                }
                continue;
            }
            let idx = frame.next;
            frame.next += 1;
            let v = frame.cands[idx];
            let mut cand = frame.base.clone();
            cand.extend(frame.cands[..idx].iter().copied());
            self.chosen_set.insert(v);
            if !self.all_critical() {
                self.chosen_set.remove(v);
                continue;
            }
            self.chosen.push(v);
            if let Some(sol) = self.expand(cand) {
                self.chosen.pop();
                self.chosen_set.remove(v);
                return Some(sol);
            }
        }
    }
}

impl SolutionStream for DfsTransversals {
    fn ticks(&self) -> u64 {
        self.ticks
    }

    fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}
