//! Point-set multipacking: balls count nearest neighbors, members are
//! capped at (s+1)/2 per ball. On a line the maximum r-multipacking is
//! computed exactly by a window dynamic program; in the plane every
//! six-point set packs at least two points.
//!
//! Run with: cargo run --example line_multipacking

use packdom::geometry::{
    line_r_multipacking, mp_points_exact, verify_point_multipacking, PointSet,
};
use rand::SeedableRng;

fn main() -> packdom::Result<()> {
    let p = PointSet::from_text("0\n1\n5\n")?;
    println!("points 0, 1, 5:");
    println!(
        "  {{index 0}} packs: {}",
        verify_point_multipacking(&p, &[0])?
    );
    println!(
        "  {{0, 1}} packs: {}",
        verify_point_multipacking(&p, &[0, 1])?
    );
    println!(
        "  {{0, 5}} packs: {}",
        verify_point_multipacking(&p, &[0, 2])?
    );
    let (mp, _) = mp_points_exact(&p, None, 1 << 20)?;
    println!("  maximum multipacking: {mp}");

    // The line DP agrees with brute force for every r; the full
    // multipacking number sits in [n/3, n/2].
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let n = 10;
        let p = packdom::random::random_point_set(&mut rng, n, 1);
        let (full, w) = mp_points_exact(&p, None, 1 << 24)?;
        assert!(n / 3 <= full && full <= n / 2);
        print!("n={n}: MP={full} (witness {w:?}); per r:");
        for r in 1..n {
            let (dp, _) = line_r_multipacking(&p, r)?;
            let (bf, _) = mp_points_exact(&p, Some(r), 1 << 24)?;
            assert_eq!(dp, bf);
            print!(" {dp}");
        }
        println!();
    }

    // Every planar six-point set admits a multipacking of size two.
    let mut hits = 0;
    for _ in 0..50 {
        let p = packdom::random::random_point_set(&mut rng, 6, 2);
        let (mp, _) = mp_points_exact(&p, None, 1 << 24)?;
        assert!(mp >= 2);
        hits += 1;
    }
    println!("{hits}/50 random planar six-point sets packed at least 2 points");
    Ok(())
}
