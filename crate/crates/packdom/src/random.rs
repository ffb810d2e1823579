//! Seeded generators for test instances: random trees, connected graphs,
//! chordal graphs (induced subgraphs of random k-trees), cacti (tree
//! skeletons with vertex-attached cycles), degree-capped graphs, and point
//! sets in general position. Everything is deterministic in the RNG.

use rand::Rng;

use crate::geometry::PointSet;
use crate::graph::Graph;

/// Uniform random attachment tree on `n >= 1` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::new(n, edges).unwrap()
}

/// Connected graph on `2..=n_max` vertices: a random tree plus extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n_max: usize) -> Graph {
    let n = rng.gen_range(2..=n_max);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let extra_p = rng.gen_range(0.0..0.4);
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && !edges.contains(&(v, u)) && rng.gen_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Chordal graph on at most `n_max` vertices: grow a random k-tree, then
/// take a connected induced subgraph (chordality is hereditary).
pub fn random_chordal<R: Rng>(rng: &mut R, n_max: usize) -> Graph {
    loop {
        let k = rng.gen_range(1..=3.min(n_max.saturating_sub(1)).max(1));
        let n = rng.gen_range((k + 1).min(n_max).max(2)..=n_max);
        let mut edges = Vec::new();
        let base = (k + 1).min(n);
        for u in 0..base {
            for v in u + 1..base {
                edges.push((u, v));
            }
        }
        // cliques available for attachment
        let mut cliques: Vec<Vec<usize>> = vec![(0..base.min(k)).collect()];
        if base == k + 1 {
            cliques = (0..base)
                .map(|skip| (0..base).filter(|&x| x != skip).collect())
                .collect();
        }
        for v in base..n {
            let c = cliques[rng.gen_range(0..cliques.len())].clone();
            for &u in &c {
                edges.push((u, v));
            }
            for (i, _) in c.iter().enumerate() {
                let mut nc = c.clone();
                nc[i] = v;
                cliques.push(nc);
            }
        }
        let g = Graph::new(n, edges).unwrap();
        // Random induced subgraph, keep if connected with >= 2 vertices.
        let keep: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.8)).collect();
        if keep.len() < 2 {
            continue;
        }
        let (sub, _) = g.induced(&keep);
        if sub.is_connected() {
            debug_assert!(crate::graph::is_chordal(&sub));
            return sub;
        }
    }
}

/// Cactus on at most `n_max >= 2` vertices: start from one vertex, then
/// repeatedly attach either a pendant edge or a cycle of length 3..=8
/// sharing exactly one vertex with the existing structure.
pub fn random_cactus<R: Rng>(rng: &mut R, n_max: usize) -> Graph {
    let target = rng.gen_range(2..=n_max);
    let mut n = 1usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    while n < target {
        let anchor = rng.gen_range(0..n);
        let room = target - n;
        if room >= 2 && rng.gen_bool(0.5) {
            let len = rng.gen_range(3..=8.min(room + 1));
            // cycle anchor - n - n+1 - ... - n+len-2 - anchor
            let new = len - 1;
            edges.push((anchor, n));
            for v in n..n + new - 1 {
                edges.push((v, v + 1));
            }
            edges.push((n + new - 1, anchor));
            n += new;
        } else {
            edges.push((anchor, n));
            n += 1;
        }
    }
    let g = Graph::new(n, edges).unwrap();
    debug_assert!(crate::graph::is_cactus(&g));
    g
}

/// Connected graph with at most `m_max` edges and maximum degree `cap`.
pub fn random_graph_degree_capped<R: Rng>(
    rng: &mut R,
    n_max: usize,
    m_max: usize,
    cap: usize,
) -> Graph {
    loop {
        let n = rng.gen_range(2..=n_max);
        let mut deg = vec![0usize; n];
        let mut edges: Vec<(usize, usize)> = Vec::new();
        // Degree-capped random spanning tree first, extra edges after.
        let mut ok = true;
        for v in 1..n {
            let candidates: Vec<usize> = (0..v).filter(|&u| deg[u] < cap).collect();
            if candidates.is_empty() {
                ok = false;
                break;
            }
            let u = candidates[rng.gen_range(0..candidates.len())];
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
        if !ok || edges.len() > m_max {
            continue;
        }
        for _ in 0..2 * n {
            if edges.len() >= m_max {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let e = (u.min(v), u.max(v));
            if u != v && deg[u] < cap && deg[v] < cap && !edges.contains(&e) && rng.gen_bool(0.5) {
                edges.push(e);
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        return Graph::new(n, edges).unwrap();
    }
}

/// Integer point set with pairwise-distinct distances, by rejection.
pub fn random_point_set<R: Rng>(rng: &mut R, n: usize, dim: usize) -> PointSet {
    let span = (40 * n.max(2)) as i64;
    loop {
        let pts: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..dim).map(|_| rng.gen_range(-span..=span)).collect())
            .collect();
        if let Ok(p) = PointSet::new(pts) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generators_produce_their_classes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let t = random_tree(&mut rng, 10);
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), t.n() - 1);

            let g = random_connected_graph(&mut rng, 9);
            assert!(g.is_connected());

            let c = random_chordal(&mut rng, 10);
            assert!(crate::graph::is_chordal(&c) && c.is_connected());

            let k = random_cactus(&mut rng, 15);
            assert!(crate::graph::is_cactus(&k));

            let d = random_graph_degree_capped(&mut rng, 5, 5, 3);
            assert!(d.is_connected());
            assert!((0..d.n()).all(|v| d.degree(v) <= 3));
            assert!(d.edge_count() <= 5);

            let p = random_point_set(&mut rng, 6, 2);
            assert_eq!(p.n(), 6);
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        assert_eq!(random_cactus(&mut a, 20), random_cactus(&mut b, 20));
    }
}
