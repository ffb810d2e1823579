//! Minimum dominating broadcast for Euclidean point sets: some optimum is
//! 0/1-valued, and the 0/1 optima are exactly the minimum edge covers of
//! the nearest-neighbor graph, so the problem is solved exactly by a
//! matching computation on a forest.
//!
//! Run with: cargo run --example geometric_broadcast

use packdom::geometry::{
    bounds_points, build_nng, gamma_b_points_exact, gamma_b_points_unrestricted, mdb,
    min_edge_cover, verify_point_broadcast, PointSet, KISSING,
};
use rand::SeedableRng;

fn main() -> packdom::Result<()> {
    // Points on a line at 0, 1, 3, 7 (indices 0..4).
    let p = PointSet::from_text("0\n1\n3\n7\n")?;
    let nng = build_nng(&p)?;
    println!("nearest-neighbor arcs: {:?}", nng.out);
    println!("undirected edges: {:?}", nng.edges);
    println!("mutual pairs (bi-roots): {:?}", nng.biroots);
    let cover = min_edge_cover(&nng);
    println!("minimum edge cover: {cover:?}");
    let (cost, f) = mdb(&p)?;
    println!("minimum broadcast: cost {cost}, towers {}", f.to_json());
    assert!(verify_point_broadcast(&p, &f)?);
    assert_eq!(cost, gamma_b_points_exact(&p, 1 << 24)?.0);

    // Random point sets in dimensions 1..3: the edge-cover optimum always
    // matches exhaustive search, and the kissing-number bounds hold.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for dim in 1..=3usize {
        let p = packdom::random::random_point_set(&mut rng, 9, dim);
        let (cost, _) = mdb(&p)?;
        let (exact, _) = gamma_b_points_exact(&p, 1 << 24)?;
        assert_eq!(cost, exact);
        let tau = KISSING[dim - 1];
        println!(
            "dim {dim}: n=9 cost {cost} within [ceil(9/2), floor(9*{tau}/{})] ",
            tau + 1
        );
        let b = bounds_points(&p)?;
        assert!(b.lower[0].value <= cost as i64 && cost as i64 <= b.upper[0].value);
    }

    // The full-codomain search agrees with the 0/1 search on small inputs.
    let p = packdom::random::random_point_set(&mut rng, 6, 2);
    let zero_one = gamma_b_points_exact(&p, 1 << 24)?.0;
    let unrestricted = gamma_b_points_unrestricted(&p, 1 << 26)?;
    println!(
        "6 random planar points: 0/1 optimum {zero_one} = unrestricted optimum {unrestricted}"
    );
    assert_eq!(zero_one, unrestricted);
    Ok(())
}
