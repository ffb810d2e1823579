//! The acceptance suite: twelve scripted checks with fixed seeds covering
//! family exactness, the oracle sandwich inequalities, the chordal /
//! hyperbolic / cactus bounds, gadget round-trips with structural
//! validation, Reassign normalization, and the geometric solvers. Each
//! criterion runs standalone and reports one pass/fail line.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cactus;
use crate::error::{Error, Result};
use crate::family;
use crate::gadget::{self, Direction, GadgetKind, HsVariant, IsVariant, TdsVariant};
use crate::geometry;
use crate::graph::{classify, hyperbolicity, Graph, HalfInt, Metric};
use crate::multipacking::{diametral_approx, verify_fractional_multipacking, Rat};
use crate::oracle::{
    self, gamma_b_exact, minimum_dominating, mp_exact, mp_exact_with, verify_broadcast,
    verify_multipacking, verify_r_multipacking, PackingWitness, SetSystem,
};
use crate::random;

const BUDGET: u64 = 1 << 28;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Criterion = fn() -> Result<String>;

pub fn criteria() -> Vec<(usize, &'static str, Criterion)> {
    vec![
        (1, "pentagon-family-exactness", c01_pentagon),
        (2, "fk-hk-family-exactness", c02_fk_hk),
        (3, "general-sandwich", c03_sandwich),
        (4, "chordal-bound", c04_chordal),
        (5, "hyperbolic-bound", c05_hyperbolic),
        (6, "cactus-pipeline", c06_cactus),
        (7, "hyperbolicity-spot-values", c07_hyperbolicity),
        (8, "gadget-round-trips", c08_gadgets),
        (9, "reassign-normalization", c09_reassign),
        (10, "geometry-exactness", c10_geometry),
        (11, "one-dimensional-multipacking", c11_line),
        (12, "trees", c12_trees),
    ]
}

pub fn run(id: usize) -> CriterionReport {
    let (id, name, f) = criteria()
        .into_iter()
        .find(|&(i, _, _)| i == id)
        .expect("criterion id in 1..=12");
    let start = Instant::now();
    let outcome = f();
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(detail) => CriterionReport {
            id,
            name,
            passed: true,
            detail,
            millis,
        },
        Err(e) => CriterionReport {
            id,
            name,
            passed: false,
            detail: e.to_string(),
            millis,
        },
    }
}

/// Runs every criterion, printing one line per result when `print` is set.
pub fn run_all(print: bool) -> Vec<CriterionReport> {
    let mut out = Vec::new();
    for (id, _, _) in criteria() {
        let rep = run(id);
        if print {
            println!(
                "criterion {:2} {:32} {} ({} ms) {}",
                rep.id,
                rep.name,
                if rep.passed { "PASS" } else { "FAIL" },
                rep.millis,
                rep.detail
            );
        }
        out.push(rep);
    }
    out
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(msg()))
    }
}

fn certify_family(bundle: &family::FamilyBundle, k: usize) -> Result<()> {
    check(
        verify_multipacking(&bundle.graph, &bundle.mp_witness)?,
        || format!("k={k}: witness fails verification"),
    )?;
    check(bundle.mp_witness.len() == bundle.claimed_mp, || {
        format!("k={k}: witness size off")
    })?;
    let chk = verify_broadcast(&bundle.graph, &bundle.broadcast)?;
    check(chk.dominating, || {
        format!("k={k}: broadcast not dominating")
    })?;
    check(chk.cost == bundle.claimed_gamma_b, || {
        format!(
            "k={k}: broadcast cost {} != {}",
            chk.cost, bundle.claimed_gamma_b
        )
    })?;
    if let Some(w) = &bundle.fractional {
        let (ok, value) = verify_fractional_multipacking(&bundle.graph, w)?;
        check(ok, || format!("k={k}: fractional certificate infeasible"))?;
        check(
            value == Rat::from_integer(bundle.claimed_gamma_b as i64),
            || {
                format!(
                    "k={k}: fractional value {value} != {}",
                    bundle.claimed_gamma_b
                )
            },
        )?;
    }
    // Per-block diameter-2 check; with pairwise member distance >= 3 this
    // pins at most one multipacking member per block. The blocks cover every
    // vertex, so MP <= #blocks = 3k, which the witness attains.
    let m = Metric::new(&bundle.graph);
    let mut covered = vec![false; bundle.graph.n()];
    for block in &bundle.blocks {
        for (i, &a) in block.iter().enumerate() {
            covered[a] = true;
            for &b in &block[i + 1..] {
                check(m.dist(a, b) <= 2, || {
                    format!("k={k}: block diameter above 2")
                })?;
            }
        }
        let inside = bundle
            .mp_witness
            .members
            .iter()
            .filter(|v| block.contains(v))
            .count();
        check(inside <= 1, || format!("k={k}: two members in one block"))?;
    }
    check(covered.iter().all(|&c| c), || {
        format!("k={k}: blocks do not cover every vertex")
    })?;
    check(bundle.blocks.len() == bundle.claimed_mp, || {
        format!("k={k}: block count is not the claimed packing number")
    })?;
    Ok(())
}

fn c01_pentagon() -> Result<String> {
    for k in [1usize, 2] {
        let b = family::pentagon_chain(k)?;
        let (mp, _) = mp_exact(&b.graph)?;
        let (gb, _) = gamma_b_exact(&b.graph)?;
        check(mp == 3 * k, || format!("k={k}: mp_exact {mp} != {}", 3 * k))?;
        check(gb as usize == 4 * k, || {
            format!("k={k}: gamma_b {gb} != {}", 4 * k)
        })?;
    }
    for k in 1..=20usize {
        certify_family(&family::pentagon_chain(k)?, k)?;
    }
    Ok("exact at k=1,2; certificates through k=20".into())
}

fn c02_fk_hk() -> Result<String> {
    for (name, gen) in [
        (
            "fk",
            family::hexagon_triangle_chain as fn(usize) -> Result<family::FamilyBundle>,
        ),
        ("hk", family::k24_chain),
    ] {
        let b = gen(1)?;
        let (mp, _) = mp_exact(&b.graph)?;
        let (gb, _) = gamma_b_exact(&b.graph)?;
        check(mp == 3, || format!("{name} k=1: mp_exact {mp} != 3"))?;
        check(gb == 4, || format!("{name} k=1: gamma_b {gb} != 4"))?;
        certify_family(&b, 1)?;
    }
    for k in 1..=5usize {
        let b = family::hexagon_triangle_chain(k)?;
        check(classify(&b.graph).chordal, || {
            format!("fk k={k} not chordal")
        })?;
        certify_family(&b, k)?;
        certify_family(&family::k24_chain(k)?, k)?;
    }
    Ok("k=1 exact; fk chordal through k=5".into())
}

fn c03_sandwich() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    for it in 0..300 {
        let g = random::random_connected_graph(&mut rng, 12);
        let m = Metric::new(&g);
        let (mp, w) = mp_exact(&g)?;
        check(verify_multipacking(&g, &w)?, || {
            format!("#{it}: witness invalid")
        })?;
        let (gb, f) = gamma_b_exact(&g)?;
        check(verify_broadcast(&g, &f)?.dominating, || {
            format!("#{it}: broadcast invalid")
        })?;
        let (dom, _) = minimum_dominating(&g, BUDGET)?;
        let lb = (m.diam() + 1).div_ceil(3) as usize;
        check(lb <= mp, || {
            format!("#{it}: diam lower bound {lb} > mp {mp}")
        })?;
        check(mp <= gb as usize, || {
            format!("#{it}: mp {mp} > gamma_b {gb}")
        })?;
        check(gb <= (dom as u32).min(m.rad()), || {
            format!(
                "#{it}: gamma_b {gb} above min(gamma {dom}, rad {})",
                m.rad()
            )
        })?;
        check(gb as usize <= 2 * mp + 3, || {
            format!("#{it}: gamma_b {gb} > 2*{mp}+3")
        })?;
    }
    Ok("300 graphs, zero violations".into())
}

fn c04_chordal() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for it in 0..100 {
        let g = random::random_chordal(&mut rng, 14);
        let (mp, _) = mp_exact(&g)?;
        let (gb, _) = gamma_b_exact(&g)?;
        check(2 * gb as usize <= 3 * mp + 1, || {
            format!("#{it}: gamma_b {gb} above ceil(1.5*{mp})")
        })?;
        let approx = diametral_approx(&g)?;
        check(verify_multipacking(&g, &approx)?, || {
            format!("#{it}: approx witness invalid")
        })?;
        let need =
            (2 * mp as i64 - 1).div_euclid(3) + i64::from((2 * mp as i64 - 1).rem_euclid(3) != 0);
        check(approx.len() as i64 >= need, || {
            format!("#{it}: approx {} below ceil((2*{mp}-1)/3)", approx.len())
        })?;
    }
    Ok("100 chordal graphs, zero violations".into())
}

fn c05_hyperbolic() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(501);
    for it in 0..60 {
        let g = random::random_connected_graph(&mut rng, 10);
        let delta = hyperbolicity(&g)?;
        let (mp, _) = mp_exact(&g)?;
        let (gb, _) = gamma_b_exact(&g)?;
        // gamma_b <= floor(1.5 mp + 2 delta), all in half-units.
        check(
            2 * gb as i64 <= 3 * mp as i64 + 2 * delta.halves() as i64,
            || format!("#{it}: gamma_b {gb} above floor(1.5*{mp}+2*{delta})"),
        )?;
        let approx = diametral_approx(&g)?;
        // |approx| >= ceil((2 mp - 4 delta)/3) = ceil((2 mp - 2 halves)/3).
        let num = 2 * mp as i64 - 2 * delta.halves() as i64;
        let need = num.div_euclid(3) + i64::from(num.rem_euclid(3) != 0);
        check(approx.len() as i64 >= need, || {
            format!("#{it}: approx {} below ceil((2*{mp}-4d)/3)", approx.len())
        })?;
    }
    Ok("60 graphs, zero violations".into())
}

fn c06_cactus() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(601);
    let mut small = 0usize;
    for it in 0..200 {
        let g = random::random_cactus(&mut rng, 40);
        let m = Metric::new(&g);
        let w = cactus::cactus_multipacking(&g)?;
        check(verify_multipacking(&g, &w)?, || {
            format!("#{it}: witness invalid")
        })?;
        check(w.len() >= cactus::guaranteed_size(m.rad()), || {
            format!(
                "#{it}: size {} below guarantee {} at rad {}",
                w.len(),
                cactus::guaranteed_size(m.rad()),
                m.rad()
            )
        })?;
        if g.n() <= 18 {
            small += 1;
            let (mp, _) = mp_exact(&g)?;
            let (gb, _) = gamma_b_exact(&g)?;
            check(2 * gb as usize <= 3 * mp + 11, || {
                format!("#{it}: gamma_b {gb} above 1.5*{mp}+5.5")
            })?;
        }
    }
    Ok(format!(
        "200 cacti, zero violations ({small} checked exactly)"
    ))
}

fn c07_hyperbolicity() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(701);
    for _ in 0..10 {
        let n = rng.gen_range(2..=10);
        let t = random::random_tree(&mut rng, n);
        check(hyperbolicity(&t)? == HalfInt::from_halves(0), || {
            "tree with nonzero hyperbolicity".into()
        })?;
    }
    check(
        hyperbolicity(&Graph::cycle(5))? == HalfInt::from_halves(1),
        || "C5 hyperbolicity is not 1/2".into(),
    )?;
    for k in [1usize, 2] {
        let b = family::pentagon_chain(k)?;
        check(hyperbolicity(&b.graph)? == HalfInt::from_halves(1), || {
            format!("pentagon k={k} hyperbolicity is not 1/2")
        })?;
    }
    for _ in 0..10 {
        let g = random::random_chordal(&mut rng, 10);
        check(hyperbolicity(&g)? <= HalfInt::from_halves(2), || {
            "chordal graph with hyperbolicity above 1".into()
        })?;
    }
    Ok("trees 0, C5 1/2, pentagons 1/2, chordal <= 1".into())
}

/// Enumerates all set systems with 1 <= |U| <= 4 and 1 <= |F| <= 3
/// (distinct subsets, empty sets allowed).
fn all_small_systems() -> Vec<SetSystem> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        let subsets: Vec<Vec<usize>> = (0..(1u32 << n))
            .map(|mask| (0..n).filter(|&e| mask >> e & 1 == 1).collect())
            .collect();
        let idx: Vec<usize> = (0..subsets.len()).collect();
        let mut push = |family: &[usize]| {
            let sets = family.iter().map(|&i| subsets[i].clone()).collect();
            out.push(SetSystem::new(n, sets).unwrap());
        };
        for &a in &idx {
            push(&[a]);
            for &b in idx.iter().filter(|&&b| b > a) {
                push(&[a, b]);
                for &c in idx.iter().filter(|&&c| c > b) {
                    push(&[a, b, c]);
                }
            }
        }
    }
    out
}

fn fixed_planar_sources() -> Vec<Graph> {
    vec![
        Graph::path(4),
        Graph::path(6),
        Graph::cycle(4),
        Graph::cycle(5),
        Graph::cycle(6),
        Graph::complete(4),
        // star with a pendant tail
        Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap(),
        // 2x3 grid
        Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap(),
        // triangular prism
        Graph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap(),
        // wheel on 5 spokes
        Graph::new(
            6,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
            ],
        )
        .unwrap(),
    ]
}

fn rmp_test_instances() -> Result<Vec<gadget::GadgetInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(801);
    let mut out = Vec::new();
    let mut made = 0;
    while made < 30 {
        let g = random::random_graph_degree_capped(&mut rng, 5, 5, 3);
        if g.edge_count() == 0 {
            continue;
        }
        let k = rng.gen_range(1..=3);
        made += 1;
        for variant in [
            IsVariant::PlanarBipartite,
            IsVariant::Chordal,
            IsVariant::Bipartite,
        ] {
            out.push(gadget::is_to_rmp(variant, &g, k, 2)?);
        }
    }
    Ok(out)
}

fn c08_gadgets() -> Result<String> {
    let mut checked = 0usize;
    // Hitting-set sources, exhaustively, at k in {2,3} within variant
    // minima and k <= |U| (beyond the universe the padding argument of the
    // equivalence has no room).
    for sys in all_small_systems() {
        for variant in [
            HsVariant::Chordal,
            HsVariant::HalfHyperbolic,
            HsVariant::Bipartite,
            HsVariant::ClawFree,
        ] {
            for k in 2..=3usize {
                if k < variant.min_k() || k > sys.n {
                    continue;
                }
                let inst = gadget::hs_to_mp(variant, &sys, k)?;
                gadget::validate_structure(&inst)?;
                let (src, tgt) = gadget::equivalence_check(&inst)?;
                check(src == tgt, || {
                    format!("hs {variant:?} k={k} sets={:?}: {src} vs {tgt}", sys.sets)
                })?;
                checked += 1;
            }
        }
    }
    // Independent-set sources.
    for inst in rmp_test_instances()? {
        gadget::validate_structure(&inst)?;
        let (src, tgt) = gadget::equivalence_check(&inst)?;
        check(src == tgt, || {
            format!(
                "rmp gadget mismatch: {src} vs {tgt} (target {})",
                inst.target
            )
        })?;
        checked += 1;
    }
    // Regular gadgets from the two cubic 6-vertex staples.
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
    )
    .unwrap();
    let prism = Graph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap();
    for g in [&k33, &prism] {
        let inst = gadget::tds_to_mp(TdsVariant::Regular, g, 4)?;
        gadget::validate_structure(&inst)?;
        let (src, tgt) = gadget::equivalence_check(&inst)?;
        check(src && tgt, || "regular gadget equivalence failed".into())?;
        checked += 1;
    }
    // Complement gadgets over ten fixed planar sources.
    for (i, g) in fixed_planar_sources().into_iter().enumerate() {
        let k = 2 + i % 2;
        let inst = gadget::tds_to_mp(TdsVariant::Conv, &g, k)?;
        gadget::validate_structure(&inst)?;
        let (src, tgt) = gadget::equivalence_check(&inst)?;
        check(src == tgt, || {
            format!("conv gadget #{i} mismatch: {src} vs {tgt}")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} round-trips, zero mismatches"))
}

fn c09_reassign() -> Result<String> {
    let mut checked = 0usize;
    for inst in rmp_test_instances()? {
        let GadgetKind::RMultipacking {
            r,
            vertex_paths,
            edge_gadgets,
            apex,
            ..
        } = &inst.kind
        else {
            unreachable!()
        };
        let r = *r;
        let mut witnesses = Vec::new();
        let (_, found) = mp_exact_with(&inst.graph, Some(r as u32), BUDGET)?;
        witnesses.push(found);
        // Forward-mapped witness from a maximum independent set.
        let GadgetKind::RMultipacking { source, .. } = &inst.kind else {
            unreachable!()
        };
        let (_, mis) = oracle::maximum_independent(source, BUDGET)?;
        witnesses.push(PackingWitness::new(map_forward(&inst, &mis)?).with_r(r as u32));
        let mut endpoints: BTreeSet<usize> =
            vertex_paths.iter().map(|p| *p.last().unwrap()).collect();
        for e in edge_gadgets.values() {
            endpoints.extend(e.arms.iter().map(|a| *a.last().unwrap()));
        }
        endpoints.extend(*apex);
        for w in witnesses {
            let out = gadget::reassign(&inst, &w)?;
            check(out.len() == w.len(), || {
                format!("reassign changed size {} -> {}", w.len(), out.len())
            })?;
            check(verify_r_multipacking(&inst.graph, &out, r as u32)?, || {
                "reassign output fails verification".into()
            })?;
            for v in &out.members {
                check(endpoints.contains(v), || {
                    format!("member {v} not a designated endpoint")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} witnesses normalized, zero violations"))
}

fn map_forward(inst: &gadget::GadgetInstance, src_witness: &[usize]) -> Result<Vec<usize>> {
    gadget::map_solution(inst, Direction::Forward, src_witness)
}

fn c10_geometry() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    for it in 0..200 {
        let n = rng.gen_range(2..=10);
        let dim = rng.gen_range(1..=3);
        let p = random::random_point_set(&mut rng, n, dim);
        let (cost, f) = geometry::mdb(&p)?;
        check(geometry::verify_point_broadcast(&p, &f)?, || {
            format!("#{it}: broadcast not dominating")
        })?;
        check(f.towers().all(|(_, w)| w == 1), || {
            format!("#{it}: broadcast not 0/1")
        })?;
        let (exact, _) = geometry::gamma_b_points_exact(&p, BUDGET)?;
        check(cost == exact, || {
            format!("#{it}: mdb {cost} != exact {exact}")
        })?;
        if n <= 6 {
            let unrestricted = geometry::gamma_b_points_unrestricted(&p, BUDGET)?;
            check(cost == unrestricted, || {
                format!("#{it}: unrestricted {unrestricted} != {cost}")
            })?;
        }
        // n/2 <= cost <= tau_d/(tau_d+1) n, and <= 5n/6 in the plane.
        let tau = geometry::KISSING[dim - 1] as u64;
        check(2 * cost as u64 >= n as u64, || {
            format!("#{it}: cost below n/2")
        })?;
        check((tau + 1) * cost as u64 <= tau * n as u64, || {
            format!("#{it}: cost above kissing bound")
        })?;
        if dim == 2 {
            check(6 * cost as u64 <= 5 * n as u64, || {
                format!("#{it}: cost above 5n/6")
            })?;
        }
    }
    Ok("200 point sets, zero violations".into())
}

fn c11_line() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1101);
    for it in 0..100 {
        let n = rng.gen_range(2..=12);
        let p = random::random_point_set(&mut rng, n, 1);
        let (mp, w) = geometry::mp_points_exact(&p, None, BUDGET)?;
        check(geometry::verify_point_multipacking(&p, &w)?, || {
            format!("#{it}: witness invalid")
        })?;
        check(mp >= n / 3 && mp <= n / 2, || {
            format!("#{it}: mp {mp} outside [n/3, n/2] at n={n}")
        })?;
        for r in 1..=(n - 1).min(5) {
            let (dp, dw) = geometry::line_r_multipacking(&p, r)?;
            check(geometry::verify_point_r_multipacking(&p, &dw, r)?, || {
                format!("#{it}: line witness invalid at r={r}")
            })?;
            let (bf, _) = geometry::mp_points_exact(&p, Some(r), BUDGET)?;
            check(dp == bf, || {
                format!("#{it}: line dp {dp} != brute {bf} at r={r}")
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1102);
    for it in 0..500 {
        let p = random::random_point_set(&mut rng, 6, 2);
        let (mp, _) = geometry::mp_points_exact(&p, None, BUDGET)?;
        check(mp >= 2, || {
            format!("planar #{it}: 6 points with mp {mp} < 2")
        })?;
    }
    Ok("100 line sets + 500 planar sextets, zero violations".into())
}

fn c12_trees() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1201);
    for it in 0..100 {
        let n = rng.gen_range(2..=14);
        let t = random::random_tree(&mut rng, n);
        let (mp, _) = mp_exact(&t)?;
        let (gb, _) = gamma_b_exact(&t)?;
        check(mp == gb as usize, || {
            format!("#{it}: mp {mp} != gamma_b {gb}")
        })?;
        check(gb as usize <= n.div_ceil(3), || {
            format!("#{it}: gamma_b {gb} above ceil({n}/3)")
        })?;
    }
    Ok("100 trees, zero violations".into())
}

/// Renders the reports as a JSON document (used by the command line).
pub fn reports_json(reports: &[CriterionReport]) -> serde_json::Value {
    let items: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "id": r.id,
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "millis": r.millis,
            })
        })
        .collect();
    let mut summary = String::new();
    let passed = reports.iter().filter(|r| r.passed).count();
    let _ = write!(summary, "{passed}/{} passed", reports.len());
    serde_json::json!({ "criteria": items, "summary": summary })
}
