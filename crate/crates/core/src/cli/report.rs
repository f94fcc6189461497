use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::engine::SolutionStream;
use crate::vertex_set::VertexSet;

/// Statistics for one enumeration run. Everything except `wall_time_ms` is
/// reproducible for a fixed input and flags.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub solutions: usize,
    pub max_gap_ticks: u64,
    pub total_ticks: u64,
    pub wall_time_ms: f64,
    pub engine: String,
    pub input_sha256: String,
}

pub fn digest(input: &[u8]) -> String {
    hex::encode(Sha256::digest(input))
}

/// Streams every solution into `emit` as it is produced and measures gaps
/// between consecutive events.
pub fn run_stream<S: SolutionStream + ?Sized>(
    stream: &mut S,
    engine: &str,
    input: &[u8],
    mut emit: impl FnMut(&VertexSet) -> std::io::Result<()>,
) -> std::io::Result<RunReport> {
    let start = Instant::now();
    let mut solutions = 0;
    let mut last = 0;
    let mut max_gap = 0;
    while let Some(s) = stream.next() {
        let t = stream.ticks();
        max_gap = max_gap.max(t.saturating_sub(last));
        last = t;
        solutions += 1;
        emit(&s)?;
    }
    let total = stream.ticks();
    max_gap = max_gap.max(total.saturating_sub(last));
    Ok(RunReport {
        solutions,
        max_gap_ticks: max_gap,
        total_ticks: total,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
        engine: engine.to_string(),
        input_sha256: digest(input),
    })
}
