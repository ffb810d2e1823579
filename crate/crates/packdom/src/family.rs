//! Deterministic generators for the certificate families: chained pentagons
//! (cactus, 1/2-hyperbolic), chained hexagon+triangle blocks (chordal), and
//! chained K_{2,4} blocks. Each bundle ships the graph, a labeled vertex
//! map, a maximum-multipacking witness, an optimal broadcast, and (where
//! known) a fractional multipacking certificate, so that optimality is
//! certified without search at any scale.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::multipacking::{Rat, WeightFunction};
use crate::oracle::{Broadcast, PackingWitness};

/// A generated family member with its certificates.
#[derive(Debug, Clone)]
pub struct FamilyBundle {
    pub graph: Graph,
    /// Structured names like `"a_3"` to vertex indices (1-based block ids).
    pub labels: BTreeMap<String, usize>,
    pub mp_witness: PackingWitness,
    pub broadcast: Broadcast,
    pub fractional: Option<WeightFunction>,
    pub claimed_mp: usize,
    pub claimed_gamma_b: u32,
    /// Vertex blocks, one per chained unit; every block has diameter 2.
    pub blocks: Vec<Vec<usize>>,
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        Err(Error::InvalidArgument("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// 3k five-cycles (a_i, b_i, c_i, d_i, e_i) chained by edges b_i - e_{i+1}.
/// MP = 3k with witness {a_i}; gamma_b = 4k with towers f(a_i) = 4 for
/// i = 2 (mod 3); fractional certificate of value 4k on b, c, d, e.
pub fn pentagon_chain(k: usize) -> Result<FamilyBundle> {
    check_k(k)?;
    let blocks_n = 3 * k;
    let n = 5 * blocks_n;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    let mut blocks = Vec::new();
    let names = ["a", "b", "c", "d", "e"];
    let at = |i: usize, off: usize| (i - 1) * 5 + off;
    for i in 1..=blocks_n {
        let b = at(i, 0);
        blocks.push((b..b + 5).collect());
        for (off, name) in names.iter().enumerate() {
            labels.insert(format!("{name}_{i}"), b + off);
        }
        // 5-cycle a-b-c-d-e-a
        edges.extend([
            (b, b + 1),
            (b + 1, b + 2),
            (b + 2, b + 3),
            (b + 3, b + 4),
            (b + 4, b),
        ]);
        if i < blocks_n {
            edges.push((at(i, 1), at(i + 1, 4))); // b_i - e_{i+1}
        }
    }
    let graph = Graph::new(n, edges)?;
    let mp_witness = PackingWitness::new((1..=blocks_n).map(|i| at(i, 0)).collect());
    let broadcast =
        Broadcast::from_pairs((1..=blocks_n).filter(|i| i % 3 == 2).map(|i| (at(i, 0), 4)));
    let mut frac = WeightFunction::new();
    for i in 1..=blocks_n {
        for off in 1..=4 {
            frac.set(at(i, off), Rat::new(1, 3))?;
        }
    }
    Ok(FamilyBundle {
        graph,
        labels,
        mp_witness,
        broadcast,
        fractional: Some(frac),
        claimed_mp: 3 * k,
        claimed_gamma_b: 4 * k as u32,
        blocks,
    })
}

/// 3k chordal blocks, each a 6-cycle (g,a,b,c,d,e) with a triangle (a,c,e),
/// chained by edges b_i - g_{i+1}. MP = 3k with witness {a_i};
/// gamma_b = 4k; fractional certificate w(g)=w(b)=1/3, w(d)=2/3.
pub fn hexagon_triangle_chain(k: usize) -> Result<FamilyBundle> {
    check_k(k)?;
    let blocks_n = 3 * k;
    let n = 6 * blocks_n;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    let mut blocks = Vec::new();
    let names = ["a", "b", "c", "d", "e", "g"];
    let at = |i: usize, off: usize| (i - 1) * 6 + off;
    for i in 1..=blocks_n {
        let b = at(i, 0);
        blocks.push((b..b + 6).collect());
        for (off, name) in names.iter().enumerate() {
            labels.insert(format!("{name}_{i}"), b + off);
        }
        let (a, bb, c, d, e, g) = (b, b + 1, b + 2, b + 3, b + 4, b + 5);
        // 6-cycle g-a-b-c-d-e-g
        edges.extend([(g, a), (a, bb), (bb, c), (c, d), (d, e), (e, g)]);
        // triangle a-c-e
        edges.extend([(a, c), (c, e), (e, a)]);
        if i < blocks_n {
            edges.push((at(i, 1), at(i + 1, 5))); // b_i - g_{i+1}
        }
    }
    let graph = Graph::new(n, edges)?;
    let mp_witness = PackingWitness::new((1..=blocks_n).map(|i| at(i, 0)).collect());
    let broadcast =
        Broadcast::from_pairs((1..=blocks_n).filter(|i| i % 3 == 2).map(|i| (at(i, 0), 4)));
    let mut frac = WeightFunction::new();
    for i in 1..=blocks_n {
        frac.set(at(i, 5), Rat::new(1, 3))?; // g_i
        frac.set(at(i, 1), Rat::new(1, 3))?; // b_i
        frac.set(at(i, 3), Rat::new(2, 3))?; // d_i
    }
    Ok(FamilyBundle {
        graph,
        labels,
        mp_witness,
        broadcast,
        fractional: Some(frac),
        claimed_mp: 3 * k,
        claimed_gamma_b: 4 * k as u32,
        blocks,
    })
}

/// 3k blocks, each a K_{2,4} with partite sets {w_i, y_i} and
/// {x_i, u_i, v_i, z_i}, chained by edges z_i - x_{i+1}. MP = 3k with
/// witness {w_i}; gamma_b = 4k via towers f(w_i) = 4 for i = 2 (mod 3).
pub fn k24_chain(k: usize) -> Result<FamilyBundle> {
    check_k(k)?;
    let blocks_n = 3 * k;
    let n = 6 * blocks_n;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    let mut blocks = Vec::new();
    let names = ["w", "y", "x", "u", "v", "z"];
    let at = |i: usize, off: usize| (i - 1) * 6 + off;
    for i in 1..=blocks_n {
        let b = at(i, 0);
        blocks.push((b..b + 6).collect());
        for (off, name) in names.iter().enumerate() {
            labels.insert(format!("{name}_{i}"), b + off);
        }
        for side in [b, b + 1] {
            for other in [b + 2, b + 3, b + 4, b + 5] {
                edges.push((side, other));
            }
        }
        if i < blocks_n {
            edges.push((at(i, 5), at(i + 1, 2))); // z_i - x_{i+1}
        }
    }
    let graph = Graph::new(n, edges)?;
    let mp_witness = PackingWitness::new((1..=blocks_n).map(|i| at(i, 0)).collect());
    let broadcast =
        Broadcast::from_pairs((1..=blocks_n).filter(|i| i % 3 == 2).map(|i| (at(i, 0), 4)));
    Ok(FamilyBundle {
        graph,
        labels,
        mp_witness,
        broadcast,
        fractional: None,
        claimed_mp: 3 * k,
        claimed_gamma_b: 4 * k as u32,
        blocks,
    })
}
