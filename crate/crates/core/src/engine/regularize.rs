use std::collections::VecDeque;

use super::SolutionStream;
use crate::vertex_set::VertexSet;

/// Re-times an inner stream so outputs leave on a fixed clock.
///
/// Slots fall at multiples of `budget`. At each slot the oldest queued
/// solution that arrived strictly before the slot is released; slots with
/// nothing eligible are skipped. Once the inner stream finishes at tick `T`,
/// anything still queued whose slot lies after `T` is flushed one per tick
/// starting at `max(last emission, T) + 1`.
pub struct RegularizedStream<S> {
    inner: S,
    budget: u64,
    queue: VecDeque<(VertexSet, u64)>,
    next_slot: u64,
    last_emit: u64,
    inner_end: Option<u64>,
    ticks: u64,
    exhausted: bool,
}

impl<S: SolutionStream> RegularizedStream<S> {
    pub fn new(inner: S, budget: u64) -> Self {
        assert!(budget >= 1, "budget must be positive");
        RegularizedStream {
            inner,
            budget,
            queue: VecDeque::new(),
            next_slot: budget,
            last_emit: 0,
            inner_end: None,
            ticks: 0,
            exhausted: false,
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Solutions currently waiting for a slot.
    pub fn queued(&self) -> usize {
        self.queue.len()
    }

    fn pull_once(&mut self) {
        match self.inner.next() {
            Some(s) => self.queue.push_back((s, self.inner.ticks())),
            None => self.inner_end = Some(self.inner.ticks()),
        }
    }

    fn pull_until(&mut self, tick: u64) {
        while self.inner_end.is_none() && self.inner.ticks() < tick {
            self.pull_once();
        }
    }
}

impl<S: SolutionStream> Iterator for RegularizedStream<S> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.exhausted {
            return None;
        }
        loop {
            self.pull_until(self.next_slot);
            if let Some(&(_, arrival)) = self.queue.front() {
                let mut slot = self.next_slot;
                if slot <= arrival {
                    slot = (arrival / self.budget + 1) * self.budget;
                    self.pull_until(slot);
                }
                let emit = match self.inner_end {
                    Some(end) if end < slot => self.last_emit.max(end) + 1,
                    _ => {
                        self.next_slot = slot + self.budget;
                        slot
                    }
                };
                let (s, _) = self.queue.pop_front().unwrap();
                self.last_emit = emit;
                self.ticks = emit;
                return Some(s);
            }
            match self.inner_end {
                Some(end) => {
                    self.exhausted = true;
                    self.ticks = self.last_emit.max(end);
                    return None;
                }
                None => self.pull_once(),
            }
        }
    }
}

impl<S: SolutionStream> SolutionStream for RegularizedStream<S> {
    fn ticks(&self) -> u64 {
        self.ticks
    }

    fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::ScriptedStream;
    use crate::vertex_set::vset;
    use proptest::prelude::*;

    fn emissions(items: &[u64], end: u64, budget: u64) -> Vec<u64> {
        let script = items.iter().enumerate().map(|(i, &t)| (vset(&[i]), t)).collect();
        let mut r = RegularizedStream::new(ScriptedStream::new(script, end), budget);
        let mut out = Vec::new();
        while let Some(s) = r.next() {
            assert_eq!(s, vset(&[out.len()]));
            out.push(r.ticks());
        }
        out
    }

    #[test]
    fn bursts_are_spread_over_slots() {
        assert_eq!(emissions(&[1, 2, 3], 100, 10), vec![10, 20, 30]);
    }

    #[test]
    fn empty_slots_are_skipped() {
        assert_eq!(emissions(&[1, 100], 200, 10), vec![10, 110]);
    }

    #[test]
    fn leftovers_flush_after_the_inner_stream_ends() {
        assert_eq!(emissions(&[1, 100], 100, 10), vec![10, 101]);
        assert_eq!(emissions(&[5, 5, 5], 5, 10), vec![6, 7, 8]);
    }

    #[test]
    fn empty_inner_stream() {
        assert_eq!(emissions(&[], 7, 3), Vec::<u64>::new());
    }

    proptest! {
        #[test]
        fn order_and_causality_are_preserved(
            mut arrivals in proptest::collection::vec(0u64..500, 0..30),
            extra in 0u64..100,
            budget in 1u64..40,
        ) {
            arrivals.sort();
            let end = arrivals.last().copied().unwrap_or(0) + extra;
            let out = emissions(&arrivals, end, budget);
            prop_assert_eq!(out.len(), arrivals.len());
            for (i, &e) in out.iter().enumerate() {
                prop_assert!(e > arrivals[i]);
                if i > 0 {
                    prop_assert!(e > out[i - 1]);
                }
                if e <= end {
                    prop_assert_eq!(e % budget, 0);
                }
            }
        }

        #[test]
        fn saturated_inner_stream_gets_a_steady_clock(n in 1usize..40, budget in 2u64..20) {
            // one arrival per tick keeps the queue non-empty until the end
            let arrivals: Vec<u64> = (1..=n as u64 * budget).collect();
            let end = *arrivals.last().unwrap();
            let out = emissions(&arrivals, end, budget);
            for w in out.windows(2) {
                if w[1] <= end {
                    prop_assert_eq!(w[1] - w[0], budget);
                }
            }
        }
    }
}
