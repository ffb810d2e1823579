//! Graph construction, metric primitives and structural classification.
//!
//! Run with: cargo run --example classify_and_metrics

use packdom::graph::{ball, classify, diametral_path, hyperbolicity, Graph, Metric};

fn main() -> packdom::Result<()> {
    // Graphs parse from "n m" + edge lines, or from JSON.
    let g = Graph::parse("7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n")?;
    let m = Metric::new(&g);
    println!("path on 7 vertices:");
    println!(
        "  rad {} diam {} centers {:?}",
        m.rad(),
        m.diam(),
        m.centers()
    );
    println!("  d(0,6) = {}", m.dist(0, 6));
    println!("  ball(0, 3) = {:?}", ball(&g, 0, 3)?);

    let p = diametral_path(&g)?;
    println!("  diametral path: {:?} (length {})", p.vertices(), p.len());

    for (name, g) in [
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
        ("claw", Graph::new(4, [(0, 1), (0, 2), (0, 3)])?),
        (
            "two triangles at a vertex",
            Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])?,
        ),
    ] {
        let flags = classify(&g);
        println!(
            "{name}: bipartite={} chordal={} cactus={} claw_free={} regular={:?}",
            flags.bipartite, flags.chordal, flags.cactus, flags.claw_free, flags.regular_degree
        );
    }

    // Four-point hyperbolicity: trees are 0, C5 is 1/2, C4 is 1.
    for (name, g) in [
        ("star", Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)])?),
        ("C5", Graph::cycle(5)),
        ("C4", Graph::cycle(4)),
    ] {
        println!("hyperbolicity({name}) = {}", hyperbolicity(&g)?);
    }
    Ok(())
}
