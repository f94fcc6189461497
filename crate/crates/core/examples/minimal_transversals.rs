// Lists the minimal transversals of a small hypergraph with both engines
// and checks the duality `Tr(Tr(H)) = min(H)`.

use metric_enum::engine::{drain_with_delays, enumerate_minimal_transversals, EngineChoice};
use metric_enum::io::parse_hypergraph;
use metric_enum::Hypergraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = parse_hypergraph("1 2\n2 3 4\n3 5\n4 5 6\n")?;
    for algo in [EngineChoice::Berge, EngineChoice::DfsHittingSet] {
        let mut stream = enumerate_minimal_transversals(&h, algo)?;
        let (solutions, max_gap) = drain_with_delays(&mut stream);
        println!("{algo}: {} transversals, largest gap {max_gap} ticks", solutions.len());
        for t in &solutions {
            println!("  {}", t.to_one_based_string());
        }
    }

    let dual = Hypergraph::new(h.n(), enumerate_minimal_transversals(&h, EngineChoice::default())?.collect());
    let mut back: Vec<_> = enumerate_minimal_transversals(&dual, EngineChoice::default())?.collect();
    back.sort();
    let mut original = h.sperner_reduce().edges().to_vec();
    original.sort();
    assert_eq!(back, original);
    println!("dual of the dual gives the edges back");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
