// Extension questions ("is there a minimal solution containing A and
// avoiding B?") answered on a hypergraph and on both gadget graphs.

use metric_enum::io::parse_hypergraph;
use metric_enum::reductions::{
    build_ext_geodetic_instance, build_ext_resolving_instance, ext_check, ExtTarget, DEFAULT_EXT_LIMIT,
};
use metric_enum::vset;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = parse_hypergraph("1 2\n2 3 4\n3 5\n4 5 6\n")?;
    for (a, b) in [(vset(&[0]), vset(&[1])), (vset(&[0, 1]), vset(&[])), (vset(&[4]), vset(&[2, 3]))] {
        let source = ext_check(ExtTarget::Transversals(&h), &a, &b, DEFAULT_EXT_LIMIT)?;

        let geo = build_ext_geodetic_instance(&h, &a, &b)?;
        let via_geo = ext_check(ExtTarget::Geodetic(geo.graph()), &geo.required, &geo.forbidden, DEFAULT_EXT_LIMIT)?;

        let (padded, pa, pb) = h.pad_for_ext_resolving_reduction(&a, &b)?;
        let res = build_ext_resolving_instance(&padded, &pa, &pb)?;
        let via_res = ext_check(ExtTarget::Resolving(res.graph()), &res.required, &res.forbidden, DEFAULT_EXT_LIMIT)?;

        println!(
            "A={} B={}: source {}, geodetic gadget {}, resolving gadget {} ({} vertices)",
            a.to_one_based_string(),
            b.to_one_based_string(),
            source.is_yes(),
            via_geo.is_yes(),
            via_res.is_yes(),
            res.graph().n()
        );
        assert_eq!(source.is_yes(), via_geo.is_yes());
        assert_eq!(source.is_yes(), via_res.is_yes());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
