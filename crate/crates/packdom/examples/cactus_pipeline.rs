//! The cactus construction: split two radial isometric paths at a center,
//! detect the unique joining path, and select every third vertex along the
//! resulting structure. The output is a multipacking of size at least
//! ceil((2/3) rad - 11/3), hence at least (2/3) MP - 11/3.
//!
//! Run with: cargo run --example cactus_pipeline

use packdom::cactus::{cactus_multipacking, find_joining_path, find_radial_pair, guaranteed_size};
use packdom::graph::{Graph, Metric};
use packdom::oracle::{gamma_b_exact, mp_exact, verify_multipacking};
use rand::SeedableRng;

fn main() -> packdom::Result<()> {
    // The pipeline pieces on an 8-cycle.
    let c8 = Graph::cycle(8);
    let (p, q) = find_radial_pair(&c8, 0)?;
    println!("C8 radial pair from center 0:");
    println!("  P = {:?}", p.vertices());
    println!("  Q = {:?}", q.vertices());
    if let Some((i, j, f1)) = find_joining_path(&c8, &p, &q)? {
        println!(
            "  joining path {:?} attaches at P[{i}], Q[{j}]",
            f1.vertices()
        );
    }

    // End to end on random cacti.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let g = packdom::random::random_cactus(&mut rng, 35);
        let m = Metric::new(&g);
        let w = cactus_multipacking(&g)?;
        assert!(verify_multipacking(&g, &w)?);
        println!(
            "cactus n={:2} rad={:2}: witness size {:2} >= guarantee {}",
            g.n(),
            m.rad(),
            w.len(),
            guaranteed_size(m.rad())
        );
        assert!(w.len() >= guaranteed_size(m.rad()));
    }

    // On small cacti, compare against the exact oracles: the ratio bound
    // gamma_b <= 1.5 MP + 5.5 always holds.
    for _ in 0..5 {
        let g = packdom::random::random_cactus(&mut rng, 14);
        let (mp, _) = mp_exact(&g)?;
        let (gb, _) = gamma_b_exact(&g)?;
        let approx = cactus_multipacking(&g)?.len();
        println!(
            "cactus n={:2}: MP={mp} gamma_b={gb} constructed={approx}",
            g.n()
        );
        assert!(2 * gb as usize <= 3 * mp + 11);
    }
    Ok(())
}
