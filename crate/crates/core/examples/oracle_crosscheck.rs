// Compares every enumerator with exhaustive search on random graphs.

use metric_enum::generators;
use metric_enum::metric::{
    enumerate_minimal_geodetic_sets, enumerate_minimal_resolving_sets, enumerate_minimal_strong_resolving_sets,
    GeodeticOptions,
};
use metric_enum::oracle::{brute_minimal_solutions, GeodeticPredicate, ResolvingPredicate, StrongResolvingPredicate};
use metric_enum::{EngineChoice, VertexSet};
use rand::SeedableRng;

fn sorted(it: impl Iterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut v: Vec<_> = it.collect();
    v.sort();
    v
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    for n in 3..=9 {
        let g = generators::random_connected_graph(n, 0.3, &mut rng);
        let resolving = sorted(enumerate_minimal_resolving_sets(&g, EngineChoice::default()));
        let geodetic = sorted(enumerate_minimal_geodetic_sets(&g, &GeodeticOptions::default())?);
        let strong = sorted(enumerate_minimal_strong_resolving_sets(&g)?);
        assert_eq!(resolving, brute_minimal_solutions(&ResolvingPredicate::new(&g), 20)?);
        assert_eq!(geodetic, brute_minimal_solutions(&GeodeticPredicate::new(&g), 20)?);
        assert_eq!(strong, brute_minimal_solutions(&StrongResolvingPredicate::new(&g), 20)?);
        println!(
            "n={n} edges={:>2}: {:>3} resolving, {:>3} geodetic, {:>3} strong resolving",
            g.edge_count(),
            resolving.len(),
            geodetic.len(),
            strong.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
