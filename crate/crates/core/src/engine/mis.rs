use super::SolutionStream;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Maximal independent sets by a reverse search over vertex prefixes.
///
/// A node `(i, S)` holds a maximal independent set `S` of the subgraph on
/// `0..i`. Its children are sets of the subgraph on `0..=i`: `S + i` when
/// `S` misses the neighborhood of `i`; otherwise `S` itself, plus
/// `S - N(i) + i` when that set is maximal and greedily completes back to `S`.
/// Leaves at level `n` are exactly the maximal independent sets of the graph.
pub struct MaximalIndependentSets {
    g: Graph,
    stack: Vec<(usize, VertexSet)>,
    ticks: u64,
    exhausted: bool,
}

impl MaximalIndependentSets {
    pub fn new(g: Graph) -> Self {
        MaximalIndependentSets {
            g,
            stack: vec![(0, VertexSet::new())],
            ticks: 0,
            exhausted: false,
        }
    }

    /// `candidate` (containing `v`) is maximal on `0..=v` and its lexicographic
    /// completion on `0..v` after dropping `v` is `parent`.
    fn has_parent(&mut self, v: usize, parent: &VertexSet, candidate: &VertexSet) -> bool {
        for x in 0..=v {
            self.ticks += 1;
            if !candidate.contains(x) && !self.g.neighbors(x).intersects(candidate) {
                return false;
            }
        }
        let mut completed = candidate.clone();
        completed.remove(v);
        for x in 0..v {
            self.ticks += 1;
            if !completed.contains(x) && !self.g.neighbors(x).intersects(&completed) {
                completed.insert(x);
            }
        }
        &completed == parent
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((level, s)) = self.stack.pop() {
            if level == self.g.n() {
                return Some(s);
            }
            let v = level;
            self.ticks += 1;
            let nv = self.g.neighbors(v);
            if s.is_disjoint(nv) {
                let mut grown = s;
                grown.insert(v);
                self.stack.push((level + 1, grown));
                continue;
            }
            let mut swapped = s.difference(nv);
            swapped.insert(v);
            if self.has_parent(v, &s, &swapped) {
                self.stack.push((level + 1, swapped));
            }
            self.stack.push((level + 1, s));
        }
        self.exhausted = true;
        None
    }
}

impl SolutionStream for MaximalIndependentSets {
    fn ticks(&self) -> u64 {
        self.ticks
    }

    fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}
