//! Constructive multipacking approximations (every-third-vertex on isometric
//! paths), aggregated bound reports, and exact-rational fractional
//! multipacking verification.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    classify, diametral_path, hyperbolicity, is_isometric_path, Graph, Metric, Path, INF,
};
use crate::oracle::{self, PackingWitness};

pub type Rat = Ratio<i64>;

/// Non-negative rational vertex weights; the fractional analogue of a
/// packing witness. Exact arithmetic throughout.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightFunction {
    weights: BTreeMap<usize, Rat>,
}

impl WeightFunction {
    pub fn new() -> Self {
        WeightFunction::default()
    }

    pub fn set(&mut self, v: usize, w: Rat) -> Result<()> {
        if w < Rat::from_integer(0) {
            return Err(Error::InvalidArgument(format!(
                "negative weight {w} at vertex {v}"
            )));
        }
        if w == Rat::from_integer(0) {
            self.weights.remove(&v);
        } else {
            self.weights.insert(v, w);
        }
        Ok(())
    }

    pub fn get(&self, v: usize) -> Rat {
        self.weights
            .get(&v)
            .copied()
            .unwrap_or_else(|| Rat::from_integer(0))
    }

    pub fn value(&self) -> Rat {
        self.weights
            .values()
            .copied()
            .fold(Rat::from_integer(0), |a, b| a + b)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, Rat)> + '_ {
        self.weights.iter().map(|(&v, &w)| (v, w))
    }

    /// JSON form `{"w":{"3":"1/3",...}}` with exact fraction strings.
    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, String> = self
            .weights
            .iter()
            .map(|(&v, &w)| (v.to_string(), w.to_string()))
            .collect();
        serde_json::json!({ "w": map })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct W {
            w: BTreeMap<String, String>,
        }
        let parsed: W = serde_json::from_str(s)?;
        let mut out = WeightFunction::new();
        for (k, val) in parsed.w {
            let v: usize = k.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad vertex key {k:?}"),
            })?;
            let w: Rat = val.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad fraction {val:?}"),
            })?;
            out.set(v, w)?;
        }
        Ok(out)
    }
}

/// Every third vertex of an isometric path (`i ≡ 0 mod 3`); a multipacking
/// of size `ceil(k/3)` for a path on `k` vertices.
pub fn third_vertex_multipacking(g: &Graph, p: &Path) -> Result<PackingWitness> {
    if !is_isometric_path(g, p)? {
        return Err(Error::NotIsometric);
    }
    let members: Vec<usize> = p.vertices().iter().copied().step_by(3).collect();
    let w = PackingWitness::new(members);
    debug_assert!(oracle::verify_multipacking(g, &w).unwrap());
    Ok(w)
}

/// Every-third-vertex multipacking on a diametral path: size
/// `ceil((diam+1)/3)`, which is at least `(2 MP - 1)/3` on chordal graphs
/// and `(2 MP - 4 delta)/3` on delta-hyperbolic graphs.
pub fn diametral_approx(g: &Graph) -> Result<PackingWitness> {
    let p = diametral_path(g)?;
    third_vertex_multipacking(g, &p)
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub value: i64,
    pub rule: String,
}

/// Aggregated lower bounds on the multipacking number and upper bounds on
/// the broadcast domination number, each tagged with the rule that produced
/// it and gated on the class flags that license it.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub flags: crate::graph::ClassFlags,
    pub hyperbolicity: Option<crate::graph::HalfInt>,
    pub mp_lower: Vec<BoundEntry>,
    pub gamma_b_upper: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn best_lower(&self) -> Option<i64> {
        self.mp_lower.iter().map(|b| b.value).max()
    }

    pub fn best_upper(&self) -> Option<i64> {
        self.gamma_b_upper.iter().map(|b| b.value).min()
    }
}

/// Default vertex-count threshold above which the exponential oracles are
/// not invoked by `bounds_report`.
pub const ORACLE_THRESHOLD: usize = 14;

pub fn bounds_report(g: &Graph, oracle_threshold: usize) -> Result<BoundsReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = Metric::new(g);
    let flags = classify(g);
    let mut mp_lower = Vec::new();
    let mut gamma_b_upper = Vec::new();

    let diam_lb = ((m.diam() + 1).div_ceil(3)) as i64;
    mp_lower.push(BoundEntry {
        value: diam_lb,
        rule: "every-third-vertex-on-diametral-path".into(),
    });
    gamma_b_upper.push(BoundEntry {
        value: m.rad() as i64,
        rule: "radius".into(),
    });

    let small = g.n() <= oracle_threshold;
    let delta = if small { Some(hyperbolicity(g)?) } else { None };

    // Radius-vs-diameter cross rules need no oracle: on chordal graphs
    // 2 rad <= diam + 2, on delta-hyperbolic graphs
    // diam >= 2 rad - 4 delta - 1, and gamma_b <= rad either way.
    if flags.chordal {
        gamma_b_upper.push(BoundEntry {
            value: (m.diam() as i64 + 2) / 2,
            rule: "chordal-diam/2+1".into(),
        });
    }
    if let Some(d) = delta {
        gamma_b_upper.push(BoundEntry {
            value: (m.diam() as i64 + 2 * d.halves() as i64 + 1) / 2,
            rule: "hyperbolic-diam-radius".into(),
        });
    }

    if small {
        let (dom, _) = oracle::minimum_dominating(g, oracle::DEFAULT_BUDGET)?;
        gamma_b_upper.push(BoundEntry {
            value: dom as i64,
            rule: "domination-number".into(),
        });
        let (mp, _) = oracle::mp_exact(g)?;
        mp_lower.push(BoundEntry {
            value: mp as i64,
            rule: "exact".into(),
        });
        gamma_b_upper.push(BoundEntry {
            value: 2 * mp as i64 + 3,
            rule: "2mp+3".into(),
        });
        if flags.chordal {
            gamma_b_upper.push(BoundEntry {
                value: (3 * mp as i64 + 1) / 2,
                rule: "chordal-3mp/2".into(),
            });
        }
        if flags.cactus {
            gamma_b_upper.push(BoundEntry {
                value: (3 * mp as i64 + 11) / 2,
                rule: "cactus-3mp/2+11/2".into(),
            });
        }
        if let Some(d) = delta {
            // floor(3 mp / 2 + 2 delta) with delta in half-units.
            gamma_b_upper.push(BoundEntry {
                value: (3 * mp as i64 + 2 * d.halves() as i64) / 2,
                rule: "hyperbolic-3mp/2+2delta".into(),
            });
        }
    }
    Ok(BoundsReport {
        flags,
        hyperbolicity: delta,
        mp_lower,
        gamma_b_upper,
    })
}

/// Checks `w(N_r[v]) <= r` for every vertex and every radius up to the
/// component radius (balls are stable beyond it), returning the verdict and
/// the total value `w(V)`.
pub fn verify_fractional_multipacking(g: &Graph, w: &WeightFunction) -> Result<(bool, Rat)> {
    for (v, _) in w.support() {
        g.check_vertex(v)?;
    }
    let value = w.value();
    for v in 0..g.n() {
        let dist = g.bfs(v);
        let mut weighted: Vec<(u32, Rat)> = w
            .support()
            .filter(|&(u, _)| dist[u] != INF)
            .map(|(u, wt)| (dist[u], wt))
            .collect();
        weighted.sort_unstable_by_key(|&(d, _)| d);
        let mut acc = Rat::from_integer(0);
        for (d, wt) in weighted {
            acc += wt;
            // acc = w(N_d[v]); the constraint at radius max(d, 1).
            if acc > Rat::from_integer(d.max(1) as i64) {
                return Ok((false, value));
            }
        }
    }
    Ok((true, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::{gamma_b_exact, mp_exact, verify_broadcast, verify_multipacking};

    #[test]
    fn third_vertex_examples() {
        let p7 = Graph::path(7);
        let p = Path::new(&p7, (0..7).collect()).unwrap();
        let w = third_vertex_multipacking(&p7, &p).unwrap();
        assert_eq!(w.members, vec![0, 3, 6]);

        let single = Graph::path(1);
        let p = Path::new(&single, vec![0]).unwrap();
        assert_eq!(third_vertex_multipacking(&single, &p).unwrap().len(), 1);

        let c5 = Graph::cycle(5);
        let long_side = Path::new(&c5, vec![0, 4, 3, 2]).unwrap();
        assert!(matches!(
            third_vertex_multipacking(&c5, &long_side),
            Err(Error::NotIsometric)
        ));
    }

    #[test]
    fn diametral_approx_examples() {
        let p7 = Graph::path(7);
        let w = diametral_approx(&p7).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.len(), mp_exact(&p7).unwrap().0);

        let k4 = Graph::complete(4);
        assert_eq!(diametral_approx(&k4).unwrap().len(), 1);
    }

    #[test]
    fn bounds_report_c5() {
        let c5 = Graph::cycle(5);
        let rep = bounds_report(&c5, ORACLE_THRESHOLD).unwrap();
        assert_eq!(rep.best_lower(), Some(1));
        assert_eq!(rep.best_upper(), Some(2));
        assert!(rep.best_lower().unwrap() <= rep.best_upper().unwrap());
    }

    #[test]
    fn bounds_report_tree_consistent() {
        let star = Graph::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let rep = bounds_report(&star, ORACLE_THRESHOLD).unwrap();
        let (mp, _) = mp_exact(&star).unwrap();
        let (gb, _) = gamma_b_exact(&star).unwrap();
        assert!(rep.best_lower().unwrap() <= mp as i64);
        assert!(rep.best_upper().unwrap() >= gb as i64);
    }

    #[test]
    fn bounds_report_sound_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for _ in 0..30 {
            let g = crate::random::random_connected_graph(&mut rng, 11);
            let rep = bounds_report(&g, ORACLE_THRESHOLD).unwrap();
            let (mp, _) = mp_exact(&g).unwrap();
            let (gb, _) = gamma_b_exact(&g).unwrap();
            // Every rule is sound, so the extremes bracket the truth.
            assert!(rep.best_lower().unwrap() <= mp as i64);
            assert!(gb as i64 <= rep.best_upper().unwrap());
            assert!(rep.best_lower().unwrap() <= rep.best_upper().unwrap());
        }
        // The chordal diameter rule holds without any oracle: 2r <= d+2.
        for _ in 0..20 {
            let g = crate::random::random_chordal(&mut rng, 12);
            let m = crate::graph::Metric::new(&g);
            assert!(2 * m.rad() <= m.diam() + 2);
        }
    }

    #[test]
    fn fractional_zero_and_negative() {
        let c5 = Graph::cycle(5);
        let w = WeightFunction::new();
        let (ok, v) = verify_fractional_multipacking(&c5, &w).unwrap();
        assert!(ok);
        assert_eq!(v, Rat::from_integer(0));
        let mut w = WeightFunction::new();
        assert!(w.set(0, Rat::new(-1, 3)).is_err());
    }

    #[test]
    fn weak_duality_on_small_graphs() {
        // Any feasible weight function is dominated by any dominating
        // broadcast cost.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let mut done = 0;
        while done < 30 {
            let n = rng.gen_range(2..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            // Random rational weights from {0, 1/3, 2/3, 1}; keep if feasible.
            let mut w = WeightFunction::new();
            for v in 0..n {
                w.set(v, Rat::new(rng.gen_range(0..=3), 3)).unwrap();
            }
            let (feasible, value) = verify_fractional_multipacking(&g, &w).unwrap();
            if !feasible {
                continue;
            }
            let (gb, f) = gamma_b_exact(&g).unwrap();
            assert!(verify_broadcast(&g, &f).unwrap().dominating);
            assert!(value <= Rat::from_integer(gb as i64));
            done += 1;
        }
    }

    #[test]
    fn mp_at_most_any_feasible_grid_value() {
        // Exhaustive grid over weights in {0,1/3,2/3,1} on small graphs:
        // the best feasible fractional value is at least the integral optimum.
        for g in [Graph::cycle(5), Graph::path(4), Graph::complete(4)] {
            let n = g.n();
            let mut best = Rat::from_integer(0);
            let levels = 4i64;
            let total = (levels as usize).pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let mut w = WeightFunction::new();
                for v in 0..n {
                    w.set(v, Rat::new((c % levels as usize) as i64, 3)).unwrap();
                    c /= levels as usize;
                }
                let (ok, value) = verify_fractional_multipacking(&g, &w).unwrap();
                if ok && value > best {
                    best = value;
                }
            }
            let (mp, _) = mp_exact(&g).unwrap();
            assert!(Rat::from_integer(mp as i64) <= best);
        }
    }

    #[test]
    fn diametral_approx_verifies_and_meets_chordal_bound() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let mut done = 0;
        while done < 25 {
            let g = crate::random::random_chordal(&mut rng, 10);
            if !g.is_connected() {
                continue;
            }
            let w = diametral_approx(&g).unwrap();
            assert!(verify_multipacking(&g, &w).unwrap());
            let (mp, _) = mp_exact(&g).unwrap();
            assert!(3 * w.len() as i64 >= 2 * mp as i64 - 1 - 2);
            // ceil((2mp-1)/3) <= |w|
            assert!(w.len() as i64 >= (2 * mp as i64 - 1 + 2) / 3);
            done += 1;
        }
    }

    proptest::proptest! {
        /// Every third vertex of any shortest path packs, whatever the graph.
        #[test]
        fn third_vertex_packs_on_any_shortest_path(
            n in 2usize..10,
            mask in proptest::prelude::any::<u64>(),
            a in 0usize..10,
            b in 0usize..10,
        ) {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> (bit % 64) & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let (src, dst) = (a % n, b % n);
            let (dist, parent) = g.bfs_with_parents(src);
            if src != dst && dist[dst] != crate::graph::INF {
                let mut verts = vec![dst];
                let mut cur = dst;
                while cur != src {
                    cur = parent[cur];
                    verts.push(cur);
                }
                verts.reverse();
                let p = Path::new(&g, verts).unwrap();
                let w = third_vertex_multipacking(&g, &p).unwrap();
                proptest::prop_assert!(verify_multipacking(&g, &w).unwrap());
                proptest::prop_assert_eq!(w.len(), (p.len() + 1).div_ceil(3));
            }
        }
    }

    #[test]
    fn weight_function_json() {
        let mut w = WeightFunction::new();
        w.set(3, Rat::new(1, 3)).unwrap();
        w.set(0, Rat::new(2, 3)).unwrap();
        let s = w.to_json().to_string();
        assert_eq!(s, "{\"w\":{\"0\":\"2/3\",\"3\":\"1/3\"}}");
        assert_eq!(WeightFunction::from_json_str(&s).unwrap(), w);
    }

    #[test]
    fn pentagon_fractional_certificate() {
        let bundle = crate::family::pentagon_chain(2).unwrap();
        let w = bundle.fractional.as_ref().unwrap();
        let (ok, value) = verify_fractional_multipacking(&bundle.graph, w).unwrap();
        assert!(ok);
        assert_eq!(value, Rat::from_integer(8));
        // Weak duality against the bundled broadcast.
        let chk = verify_broadcast(&bundle.graph, &bundle.broadcast).unwrap();
        assert!(chk.dominating);
        assert!(value <= Rat::from_integer(chk.cost as i64));
    }
}
