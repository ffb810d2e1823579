//! The three certificate families with MP = 3k and gamma_b = 4k: chained
//! pentagons (cactus, 1/2-hyperbolic), chained hexagon+triangle blocks
//! (chordal), and chained K_{2,4} blocks. At any k, optimality is certified
//! without search: the broadcast gives the upper bound, the fractional
//! certificate (weak duality) the lower bound, and the diameter-2 blocks
//! pin the multipacking number.
//!
//! Run with: cargo run --example certificate_families

use packdom::family::{hexagon_triangle_chain, k24_chain, pentagon_chain, FamilyBundle};
use packdom::graph::{classify, hyperbolicity, Metric};
use packdom::multipacking::verify_fractional_multipacking;
use packdom::oracle::{verify_broadcast, verify_multipacking};

fn report(name: &str, bundle: &FamilyBundle) -> packdom::Result<()> {
    let g = &bundle.graph;
    println!(
        "{name}: {} vertices, {} edges, claimed MP={} gamma_b={}",
        g.n(),
        g.edge_count(),
        bundle.claimed_mp,
        bundle.claimed_gamma_b
    );
    assert!(verify_multipacking(g, &bundle.mp_witness)?);
    let chk = verify_broadcast(g, &bundle.broadcast)?;
    assert!(chk.dominating && chk.cost == bundle.claimed_gamma_b);
    println!(
        "  witness of size {} verifies; broadcast of cost {} dominates (efficient: {})",
        bundle.mp_witness.len(),
        chk.cost,
        chk.efficient
    );
    if let Some(w) = &bundle.fractional {
        let (ok, value) = verify_fractional_multipacking(g, w)?;
        assert!(ok);
        println!(
            "  fractional certificate feasible with value {value}, so gamma_b = {value} exactly"
        );
    }
    // Each chained block has diameter 2, so it holds at most one member of
    // any multipacking: MP <= #blocks, and the witness meets that.
    let m = Metric::new(g);
    for block in &bundle.blocks {
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                assert!(m.dist(a, b) <= 2);
            }
        }
    }
    println!(
        "  {} diameter-2 blocks pin MP = {}",
        bundle.blocks.len(),
        bundle.claimed_mp
    );
    Ok(())
}

fn main() -> packdom::Result<()> {
    for k in [1usize, 4] {
        report(&format!("pentagon chain (k={k})"), &pentagon_chain(k)?)?;
        report(
            &format!("hexagon+triangle chain (k={k})"),
            &hexagon_triangle_chain(k)?,
        )?;
        report(&format!("K24 chain (k={k})"), &k24_chain(k)?)?;
        println!();
    }

    let b = pentagon_chain(1)?;
    println!("pentagon chain is a cactus: {}", classify(&b.graph).cactus);
    println!("pentagon chain hyperbolicity: {}", hyperbolicity(&b.graph)?);
    let f = hexagon_triangle_chain(1)?;
    println!(
        "hexagon+triangle chain is chordal: {}",
        classify(&f.graph).chordal
    );
    println!(
        "labels address the structure, e.g. a_2 of the pentagon chain is vertex {}",
        b.labels["a_2"]
    );
    Ok(())
}
