//! Fractional multipacking certificates and weak duality: any feasible
//! weight function is a lower bound on every dominating broadcast cost, so
//! a feasible value matching a broadcast cost proves both optimal.
//!
//! Run with: cargo run --example fractional_duality

use packdom::family::pentagon_chain;
use packdom::graph::Graph;
use packdom::multipacking::{
    bounds_report, diametral_approx, verify_fractional_multipacking, Rat, WeightFunction,
    ORACLE_THRESHOLD,
};
use packdom::oracle::{gamma_b_exact, mp_exact, verify_broadcast};

fn main() -> packdom::Result<()> {
    // Hand-built certificate on C5: uniform weight 1/3 saturates every
    // closed neighborhood and has value 5/3.
    let c5 = Graph::cycle(5);
    let mut w = WeightFunction::new();
    for v in 0..5 {
        w.set(v, Rat::new(1, 3))?;
    }
    let (feasible, value) = verify_fractional_multipacking(&c5, &w)?;
    let (gb, f) = gamma_b_exact(&c5)?;
    assert!(feasible && verify_broadcast(&c5, &f)?.dominating);
    println!("C5: fractional value {value} <= gamma_b {gb} (weak duality)");
    assert!(value <= Rat::from_integer(gb as i64));
    let (mp, _) = mp_exact(&c5)?;
    println!("C5: MP {mp} <= feasible fractional value {value} <= gamma_b {gb}");
    assert!(Rat::from_integer(mp as i64) <= value);

    // The pentagon chain at k = 12 (180 vertices): search-free exactness.
    let bundle = pentagon_chain(12)?;
    let frac = bundle.fractional.as_ref().unwrap();
    let (ok, value) = verify_fractional_multipacking(&bundle.graph, frac)?;
    let chk = verify_broadcast(&bundle.graph, &bundle.broadcast)?;
    assert!(ok && chk.dominating);
    println!(
        "pentagon chain k=12: fractional value {value} = broadcast cost {} proves gamma_b = 48",
        chk.cost
    );

    // Bound reports aggregate the class-specific inequalities.
    let report = bounds_report(&c5, ORACLE_THRESHOLD)?;
    println!("C5 bound report:");
    for b in &report.mp_lower {
        println!("  MP >= {:2}  [{}]", b.value, b.rule);
    }
    for b in &report.gamma_b_upper {
        println!("  gamma_b <= {:2}  [{}]", b.value, b.rule);
    }
    let approx = diametral_approx(&c5)?;
    println!("diametral approximation packs {:?}", approx.members);
    Ok(())
}
