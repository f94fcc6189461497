// Minimal resolving sets of the Petersen graph, and why a set fails.

use metric_enum::class::SolutionClass;
use metric_enum::generators;
use metric_enum::metric::{classify_resolving, distinguishing_hypergraph, enumerate_minimal_resolving_sets};
use metric_enum::{vset, EngineChoice};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = generators::petersen();
    let h = distinguishing_hypergraph(&g);
    println!("distinguishing hypergraph: {} edges, {} after reduction", h.m(), h.sperner_reduce().m());

    let all: Vec<_> = enumerate_minimal_resolving_sets(&g, EngineChoice::default()).collect();
    let smallest = all.iter().map(|s| s.len()).min().unwrap_or(0);
    println!("{} minimal resolving sets, smallest size {smallest}", all.len());
    assert_eq!(smallest, 3);

    match classify_resolving(&g, &vset(&[0, 1])) {
        SolutionClass::NotSolution((a, b)) => println!("{{1,2}} cannot tell {} from {}", a + 1, b + 1),
        other => println!("unexpected: {other:?}"),
    }
    if let SolutionClass::Minimal(private) = classify_resolving(&g, &all[0]) {
        for (v, (a, b)) in private {
            println!("  only {} separates {} and {}", v + 1, a + 1, b + 1);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
