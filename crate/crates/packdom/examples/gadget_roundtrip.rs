//! Hardness-reduction gadgets with full solution round-trips: compile a
//! source instance, check the threshold equivalence with exact oracles on
//! both sides, validate the target graph class, and map witnesses across
//! the reduction in both directions.
//!
//! Run with: cargo run --example gadget_roundtrip

use packdom::gadget::{
    equivalence_check, havel_hakimi_regular, hs_to_mp, is_to_rmp, map_solution, reassign,
    tds_to_mp, validate_structure, Direction, HsVariant, IsVariant, TdsVariant,
};
use packdom::graph::{classify, Graph};
use packdom::oracle::{mp_exact_with, verify_multipacking, PackingWitness, SetSystem};

fn main() -> packdom::Result<()> {
    // Hitting set {0,1,2} with sets {0,1} and {1,2} compiles to a chordal
    // multipacking instance with threshold k.
    let sys = SetSystem::new(3, vec![vec![0, 1], vec![1, 2]])?;
    for variant in [
        HsVariant::Chordal,
        HsVariant::HalfHyperbolic,
        HsVariant::Bipartite,
        HsVariant::ClawFree,
    ] {
        let k = variant.min_k();
        let inst = hs_to_mp(variant, &sys, k)?;
        validate_structure(&inst)?;
        let (src, tgt) = equivalence_check(&inst)?;
        println!(
            "{variant:?} gadget (k={k}): {} vertices, hitting<=k {src} <=> packing>=k {tgt}",
            inst.graph.n()
        );
        assert_eq!(src, tgt);
    }

    // Witness round-trip through the chordal gadget.
    let inst = hs_to_mp(HsVariant::Chordal, &sys, 2)?;
    let packing = map_solution(&inst, Direction::Forward, &[1, 2])?;
    println!("hitting set {{1,2}} maps to multipacking {packing:?}");
    assert!(verify_multipacking(
        &inst.graph,
        &PackingWitness::new(packing.clone())
    )?);
    let back = map_solution(&inst, Direction::Backward, &packing)?;
    println!("...and back to hitting set {back:?}");

    // Total domination on the cubic K33 compiles to a 2d-regular instance.
    let k33 = Graph::new(
        6,
        [
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ],
    )?;
    let inst = tds_to_mp(TdsVariant::Regular, &k33, 4)?;
    println!(
        "regular gadget from K33: {} vertices, regular of degree {:?}",
        inst.graph.n(),
        packdom::graph::regular_degree(&inst.graph)
    );
    let (src, tgt) = equivalence_check(&inst)?;
    assert!(src && tgt);

    // Independent set on a triangle compiles to a 2-multipacking instance;
    // Reassign normalizes any witness onto designated endpoints.
    let k3 = Graph::complete(3);
    let inst = is_to_rmp(IsVariant::Chordal, &k3, 1, 2)?;
    println!(
        "r-multipacking gadget from K3: {} vertices, chordal: {}, threshold {}",
        inst.graph.n(),
        classify(&inst.graph).chordal,
        inst.target
    );
    let (_, raw) = mp_exact_with(&inst.graph, Some(2), 1 << 24)?;
    let normalized = reassign(&inst, &raw)?;
    println!(
        "witness {:?} normalizes to {:?}",
        raw.members, normalized.members
    );
    assert_eq!(raw.len(), normalized.len());
    let independent = map_solution(&inst, Direction::Backward, &normalized.members)?;
    println!("...which projects to the independent set {independent:?}");

    // The regular-graph realizer behind the regular gadget.
    let g = havel_hakimi_regular(8, 3)?;
    println!(
        "Havel-Hakimi 3-regular graph on 8 vertices: {} edges, regular: {:?}",
        g.edge_count(),
        packdom::graph::regular_degree(&g)
    );
    Ok(())
}
