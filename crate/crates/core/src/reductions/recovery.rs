use std::collections::HashSet;

use super::DecodedSolution;
use crate::engine::{regularize_delay, BoxedStream, RegularizedStream, SolutionStream};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

type Decoder = Box<dyn Fn(&VertexSet) -> Result<DecodedSolution> + Send>;

/// Decodes a stream of gadget solutions back into minimal transversals,
/// skipping garbage and (optionally) repeated transversals.
///
/// A decode failure ends the stream; it is kept in [`failure`](Self::failure).
pub struct TransversalRecovery {
    inner: BoxedStream,
    decode: Decoder,
    seen: Option<HashSet<VertexSet>>,
    pulled: usize,
    garbage: usize,
    duplicates: usize,
    failure: Option<Error>,
    exhausted: bool,
}

impl TransversalRecovery {
    pub(super) fn new(inner: BoxedStream, decode: Decoder, dedup: bool) -> Self {
        TransversalRecovery {
            inner,
            decode,
            seen: dedup.then(HashSet::new),
            pulled: 0,
            garbage: 0,
            duplicates: 0,
            failure: None,
            exhausted: false,
        }
    }

    /// Gadget solutions consumed so far.
    pub fn pulled(&self) -> usize {
        self.pulled
    }

    pub fn garbage(&self) -> usize {
        self.garbage
    }

    /// Transversals suppressed because an earlier copy was already emitted.
    pub fn duplicates(&self) -> usize {
        self.duplicates
    }

    pub fn failure(&self) -> Option<&Error> {
        self.failure.as_ref()
    }

    /// Spreads the recovered transversals over a fixed clock.
    pub fn regularized(self, budget: u64) -> RegularizedStream<Self> {
        regularize_delay(self, budget)
    }
}

impl Iterator for TransversalRecovery {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.exhausted {
            return None;
        }
        for s in self.inner.by_ref() {
            self.pulled += 1;
            match (self.decode)(&s) {
                Err(e) => {
                    self.failure = Some(e);
                    break;
                }
                Ok(decoded) => match decoded.transversal() {
                    None => self.garbage += 1,
                    Some(t) => {
                        if let Some(seen) = &mut self.seen {
                            if !seen.insert(t.clone()) {
                                self.duplicates += 1;
                                continue;
                            }
                        }
                        return Some(t.clone());
                    }
                },
            }
        }
        self.exhausted = true;
        None
    }
}

impl SolutionStream for TransversalRecovery {
    fn ticks(&self) -> u64 {
        self.inner.ticks()
    }

    fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}
