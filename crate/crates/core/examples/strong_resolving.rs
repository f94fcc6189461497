// Strong resolving sets as vertex covers of the mutually maximally distant
// graph, enumerated with polynomial delay.

use metric_enum::engine::drain_with_delays;
use metric_enum::generators;
use metric_enum::metric::{enumerate_minimal_strong_resolving_sets, mmd_graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [("C4", generators::cycle(4)), ("Petersen", generators::petersen()), ("P6", generators::path(6))] {
        let mmd = mmd_graph(&g)?;
        let mut stream = enumerate_minimal_strong_resolving_sets(&g)?;
        let (sets, gap) = drain_with_delays(&mut stream);
        println!(
            "{name}: {} mutually maximally distant pairs, {} minimal strong resolving sets, largest gap {gap} ticks",
            mmd.edge_count(),
            sets.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
