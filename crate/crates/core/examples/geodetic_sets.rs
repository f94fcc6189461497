// Minimal geodetic sets through both search paths: transversals for split
// graphs, include/exclude search otherwise.

use metric_enum::generators;
use metric_enum::graph::Graph;
use metric_enum::metric::{
    classify_geodetic, enumerate_minimal_geodetic_sets, pair_cover_hypergraph, split_geodetic_hypergraph,
    GeodeticOptions,
};
use metric_enum::vset;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tp = generators::triangle_pendant();
    let sets: Vec<_> = enumerate_minimal_geodetic_sets(&tp, &GeodeticOptions::default())?.collect();
    println!("triangle with pendant: {:?}", sets.iter().map(|s| s.to_one_based_string()).collect::<Vec<_>>());
    println!("all four vertices: {:?}", classify_geodetic(&tp, &vset(&[0, 1, 2, 3]))?);

    let ph = pair_cover_hypergraph(&tp)?;
    println!("pair hypergraph: {} pair nodes, {} edges", ph.node_count(), ph.hypergraph().m());

    // a split graph: clique {0,1,2,3}, independent {4,5}
    let split = Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1), (4, 2), (5, 2), (5, 3)],
    )?;
    let p = split.split_partition().expect("split");
    let reduced = split_geodetic_hypergraph(&split, &p)?;
    println!(
        "split graph: mandatory {}, {} edges to hit",
        reduced.mandatory.to_one_based_string(),
        reduced.hypergraph.m()
    );
    let fast: Vec<_> = enumerate_minimal_geodetic_sets(&split, &GeodeticOptions::default())?.collect();
    let mut slow: Vec<_> = enumerate_minimal_geodetic_sets(
        &split,
        &GeodeticOptions { force_general: true, ..GeodeticOptions::default() },
    )?
    .collect();
    let mut fast_sorted = fast.clone();
    fast_sorted.sort();
    slow.sort();
    assert_eq!(fast_sorted, slow);
    println!("{} minimal geodetic sets either way", fast.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
