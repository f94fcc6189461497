// Recovers minimal transversals from the minimal geodetic sets of a split
// gadget graph, and shows the role layout.

use metric_enum::io::parse_hypergraph;
use metric_enum::metric::{enumerate_minimal_geodetic_sets, GeodeticOptions};
use metric_enum::reductions::{build_mingeodetic_instance, decode_mingeodetic_solution, transenum_via_mingeodetic};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = parse_hypergraph("1 2\n2 3 4\n3 5\n4 5 6\n")?;
    let r = build_mingeodetic_instance(&h)?;
    print!("{}", r.roles_text());

    for s in enumerate_minimal_geodetic_sets(&r.graph, &GeodeticOptions::default())? {
        println!("{:<28} -> {:?}", s.to_one_based_string(), decode_mingeodetic_solution(&r, &s)?);
    }

    let stream = enumerate_minimal_geodetic_sets(&r.graph, &GeodeticOptions::default())?;
    let mut recovery = transenum_via_mingeodetic(&r, stream)?;
    let count = recovery.by_ref().count();
    println!("{count} transversals, {} garbage solutions", recovery.garbage());
    assert_eq!(recovery.garbage(), h.m());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
