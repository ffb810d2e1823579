//! Exact desk-scale oracles and the sandwich chain
//! ceil((diam+1)/3) <= MP <= gamma_b <= min(gamma, rad).
//!
//! Run with: cargo run --example exact_oracles

use packdom::graph::{Graph, Metric};
use packdom::oracle::{
    gamma_b_exact, maximum_independent, minimum_dominating, minimum_hitting,
    minimum_total_dominating, mp_exact, verify_broadcast, verify_multipacking, SetSystem,
    DEFAULT_BUDGET,
};

fn main() -> packdom::Result<()> {
    for (name, g) in [
        ("P7", Graph::path(7)),
        ("C5", Graph::cycle(5)),
        ("C9", Graph::cycle(9)),
        ("K4", Graph::complete(4)),
        (
            "two pentagons chained",
            packdom::family::pentagon_chain(1)?.graph,
        ),
    ] {
        let m = Metric::new(&g);
        let (mp, witness) = mp_exact(&g)?;
        assert!(verify_multipacking(&g, &witness)?);
        let (gb, f) = gamma_b_exact(&g)?;
        assert!(verify_broadcast(&g, &f)?.dominating);
        let (dom, _) = minimum_dominating(&g, DEFAULT_BUDGET)?;
        let lb = (m.diam() + 1).div_ceil(3);
        println!(
            "{name}: ceil((diam+1)/3)={lb} <= MP={mp} <= gamma_b={gb} <= min(gamma={dom}, rad={})",
            m.rad()
        );
        println!(
            "  multipacking {:?}, broadcast {}",
            witness.members,
            f.to_json()
        );
        assert!(lb as usize <= mp && mp <= gb as usize);
        assert!(gb <= (dom as u32).min(m.rad()));
        assert!(gb as usize <= 2 * mp + 3);
    }

    // The companion set oracles.
    let (td, tw) = minimum_total_dominating(&Graph::path(4), DEFAULT_BUDGET)?;
    println!("total dominating set of P4: size {td}, witness {tw:?}");
    let sys = SetSystem::new(3, vec![vec![0, 1], vec![1, 2]])?;
    let (h, hw) = minimum_hitting(&sys, DEFAULT_BUDGET)?;
    println!("hitting set of {{0,1}},{{1,2}}: size {h}, witness {hw:?}");
    let (mis, _) = maximum_independent(&Graph::cycle(5), DEFAULT_BUDGET)?;
    println!("maximum independent set of C5: {mis}");
    Ok(())
}
