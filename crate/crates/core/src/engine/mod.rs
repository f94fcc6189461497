//! Pull-based solution streams.
//!
//! Every stream carries a tick counter, an abstract and machine-independent
//! unit of work, so delay between outputs can be measured. For hypergraph
//! engines one tick is one edge scanned; for graph engines one tick is one
//! adjacency row scanned.

mod berge;
mod dfs;
mod mis;
mod regularize;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub use berge::berge_transversals;
pub use dfs::DfsTransversals;
pub use mis::MaximalIndependentSets;
pub use regularize::RegularizedStream;

pub trait SolutionStream: Iterator<Item = VertexSet> {
    /// Work performed so far. After `next` returns a solution this is the
    /// tick at which that solution was produced.
    fn ticks(&self) -> u64;

    fn is_exhausted(&self) -> bool;
}

pub type BoxedStream = Box<dyn SolutionStream + Send>;

impl<S: SolutionStream + ?Sized> SolutionStream for Box<S> {
    fn ticks(&self) -> u64 {
        (**self).ticks()
    }

    fn is_exhausted(&self) -> bool {
        (**self).is_exhausted()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EngineChoice {
    /// Edge-by-edge Berge multiplication, minimizing after every edge.
    Berge,
    /// Depth-first hitting-set search branching on the lowest uncovered edge.
    #[default]
    DfsHittingSet,
}

impl std::str::FromStr for EngineChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "berge" => Ok(EngineChoice::Berge),
            "dfs" => Ok(EngineChoice::DfsHittingSet),
            other => Err(Error::InvalidInput(format!("unknown engine `{other}`"))),
        }
    }
}

impl std::fmt::Display for EngineChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EngineChoice::Berge => "berge",
            EngineChoice::DfsHittingSet => "dfs",
        })
    }
}

/// Streams every minimal transversal of `h` exactly once.
pub fn enumerate_minimal_transversals(h: &Hypergraph, algo: EngineChoice) -> Result<BoxedStream> {
    if let Some(j) = h.first_empty_edge() {
        return Err(Error::EmptyEdge(j));
    }
    Ok(match algo {
        EngineChoice::Berge => Box::new(berge_transversals(h)),
        EngineChoice::DfsHittingSet => Box::new(DfsTransversals::new(h.clone())),
    })
}

/// Streams the maximal independent sets of `g` with polynomial delay.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> MaximalIndependentSets {
    MaximalIndependentSets::new(g.clone())
}

/// Minimal vertex covers, as complements of maximal independent sets.
pub fn enumerate_minimal_vertex_covers(g: &Graph) -> MapStream<MaximalIndependentSets> {
    let n = g.n();
    MapStream::new(
        enumerate_maximal_independent_sets(g),
        Box::new(move |s: VertexSet| s.complement(n)),
    )
}

/// Queue-based delay regularization: see [`RegularizedStream`].
pub fn regularize_delay<S: SolutionStream>(inner: S, budget: u64) -> RegularizedStream<S> {
    RegularizedStream::new(inner, budget)
}

/// Applies a function to every solution, passing ticks through.
pub struct MapStream<S> {
    inner: S,
    f: Box<dyn FnMut(VertexSet) -> VertexSet + Send>,
}

impl<S> MapStream<S> {
    pub fn new(inner: S, f: Box<dyn FnMut(VertexSet) -> VertexSet + Send>) -> Self {
        MapStream { inner, f }
    }
}

impl<S: SolutionStream> Iterator for MapStream<S> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.inner.next().map(&mut self.f)
    }
}

impl<S: SolutionStream> SolutionStream for MapStream<S> {
    fn ticks(&self) -> u64 {
        self.inner.ticks()
    }

    fn is_exhausted(&self) -> bool {
        self.inner.is_exhausted()
    }
}

/// A stream replaying precomputed solutions at given ticks, finishing at
/// `end_tick`. Used for engines that only produce output at the very end,
/// and to script inner streams when testing combinators.
#[derive(Clone, Debug)]
pub struct ScriptedStream {
    items: VecDeque<(VertexSet, u64)>,
    end_tick: u64,
    ticks: u64,
    exhausted: bool,
}

impl ScriptedStream {
    /// Arrival ticks must be non-decreasing and at most `end_tick`.
    pub fn new(items: Vec<(VertexSet, u64)>, end_tick: u64) -> Self {
        assert!(
            items.windows(2).all(|w| w[0].1 <= w[1].1),
            "arrival ticks must be non-decreasing"
        );
        assert!(items.last().is_none_or(|(_, t)| *t <= end_tick));
        ScriptedStream {
            items: items.into(),
            end_tick,
            ticks: 0,
            exhausted: false,
        }
    }
}

impl Iterator for ScriptedStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        match self.items.pop_front() {
            Some((s, t)) => {
                self.ticks = t;
                Some(s)
            }
            None => {
                self.ticks = self.end_tick;
                self.exhausted = true;
                None
            }
        }
    }
}

impl SolutionStream for ScriptedStream {
    fn ticks(&self) -> u64 {
        self.ticks
    }

    fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}

/// Drains a stream, recording the largest tick gap between consecutive
/// events (start, each output, exhaustion).
pub fn drain_with_delays<S: SolutionStream + ?Sized>(stream: &mut S) -> (Vec<VertexSet>, u64) {
    let mut out = Vec::new();
    let mut last = 0;
    let mut max_gap = 0;
    while let Some(s) = stream.next() {
        max_gap = max_gap.max(stream.ticks() - last);
        last = stream.ticks();
        out.push(s);
    }
    max_gap = max_gap.max(stream.ticks().saturating_sub(last));
    (out, max_gap)
}
