//! Constructive multipacking for cactus graphs: find two radial isometric
//! paths sharing only a center, detect the unique joining path (at most one
//! exists in a cactus), assemble the labeled cycle-with-pendant-paths
//! structure, and select every third vertex along a case split that
//! guarantees a multipacking of size at least `(2/3) rad(G) - 11/3`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Metric, Path, INF};
use crate::multipacking::third_vertex_multipacking;
use crate::oracle::{verify_multipacking, PackingWitness};

/// A cycle `c_0..c_{gamma-1}` with up to three pendant isometric paths:
/// `p_path` (a_0..a_alpha) at `c_0`, `q_path` (b_0..b_beta) at `c_m`, and
/// optionally `r_path` (e_0..e_delta) at `c_t` strictly inside the arc
/// `c_0..c_m`. With no cycle present the structure degenerates to a single
/// isometric path stored in `p_path`.
#[derive(Debug, Clone)]
pub struct HStructure {
    cycle: Vec<usize>,
    p_path: Vec<usize>,
    q_path: Vec<usize>,
    r_path: Vec<usize>,
    m: usize,
    t: usize,
}

impl HStructure {
    pub fn gamma(&self) -> usize {
        self.cycle.len()
    }

    pub fn alpha(&self) -> usize {
        self.p_path.len() - 1
    }

    pub fn beta(&self) -> usize {
        self.q_path.len().saturating_sub(1)
    }

    pub fn delta(&self) -> usize {
        self.r_path.len().saturating_sub(1)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn p_path(&self) -> &[usize] {
        &self.p_path
    }

    pub fn q_path(&self) -> &[usize] {
        &self.q_path
    }

    pub fn r_path(&self) -> &[usize] {
        &self.r_path
    }

    /// No joining path: the structure is one isometric path.
    pub fn is_path_case(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .cycle
            .iter()
            .chain(&self.p_path)
            .chain(&self.q_path)
            .chain(&self.r_path)
            .copied()
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The same structure with the roles of the two pendant paths swapped:
    /// the cycle is relabeled as `d_j = c_{(m-j) mod gamma}`, so the new
    /// attachment of the p-side is the old `c_m` and the arc through the
    /// old center keeps index range `0..=m`.
    pub fn swapped(&self) -> HStructure {
        assert!(!self.is_path_case(), "swapping needs a cycle");
        let gamma = self.gamma();
        let cycle = (0..gamma)
            .map(|j| self.cycle[(self.m + gamma - j) % gamma])
            .collect();
        HStructure {
            cycle,
            p_path: self.q_path.clone(),
            q_path: self.p_path.clone(),
            r_path: self.r_path.clone(),
            m: self.m,
            t: self.m - self.t,
        }
    }

    fn cyc(&self, i: usize) -> usize {
        self.cycle[i % self.gamma()]
    }
}

/// Cycle distance between positions `a` and `b` on a cycle of length `g`.
fn cycle_dist(g: usize, a: usize, b: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(g - d)
}

/// A radius-length isometric path from the center `c`, paired with an
/// isometric path of length at least `rad - 1` from `c` that shares only
/// `c` with the first (such a path always exists).
pub fn find_radial_pair(g: &Graph, c: usize) -> Result<(Path, Path)> {
    if !crate::graph::is_cactus(g) {
        return Err(Error::NotCactus);
    }
    g.check_vertex(c)?;
    let metric = Metric::new(g);
    let r = metric.rad();
    if r == 0 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    if metric.ecc(c) != r {
        return Err(Error::InvalidArgument(format!(
            "vertex {c} is not a center"
        )));
    }
    let (dist, parent) = g.bfs_with_parents(c);
    let far = (0..g.n()).find(|&v| dist[v] == r).unwrap();
    let mut pv = vec![far];
    let mut cur = far;
    while cur != c {
        cur = parent[cur];
        pv.push(cur);
    }
    pv.reverse();
    let p = Path::new(g, pv)?;

    // BFS from c avoiding V(P) \ {c}; accept vertices whose restricted
    // distance equals the true distance, keep the deepest.
    let mut blocked = vec![false; g.n()];
    for &v in p.vertices().iter().skip(1) {
        blocked[v] = true;
    }
    let mut rdist = vec![INF; g.n()];
    let mut rparent = vec![usize::MAX; g.n()];
    rdist[c] = 0;
    rparent[c] = c;
    let mut queue = std::collections::VecDeque::from([c]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !blocked[w] && rdist[w] == INF {
                rdist[w] = rdist[u] + 1;
                rparent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let deep = (0..g.n())
        .filter(|&v| rdist[v] != INF && rdist[v] == dist[v])
        .max_by_key(|&v| (rdist[v], std::cmp::Reverse(v)))
        .unwrap();
    if rdist[deep] + 1 < r {
        return Err(Error::Verification(
            "no disjoint radial path of length rad-1 found".into(),
        ));
    }
    let mut qv = vec![deep];
    let mut cur = deep;
    while cur != c {
        cur = rparent[cur];
        qv.push(cur);
    }
    qv.reverse();
    let q = Path::new(g, qv)?;
    Ok((p, q))
}

/// The unique path joining an interior vertex of `p` to an interior vertex
/// of `q` while avoiding their shared endpoint, if any. Returns the indices
/// of the attachment vertices within `p` and `q` and the joining path,
/// oriented from the `p` side to the `q` side.
pub fn find_joining_path(g: &Graph, p: &Path, q: &Path) -> Result<Option<(usize, usize, Path)>> {
    if p.first() != q.first() {
        return Err(Error::InvalidArgument(
            "paths must share their first vertex".into(),
        ));
    }
    let c = p.first();
    let n = g.n();
    let mut in_p = vec![usize::MAX; n];
    for (i, &v) in p.vertices().iter().enumerate().skip(1) {
        in_p[v] = i;
    }
    let mut in_q = vec![usize::MAX; n];
    for (j, &v) in q.vertices().iter().enumerate().skip(1) {
        in_q[v] = j;
    }
    // Multi-source BFS from V(P) \ {c} in G - c, stopping at V(Q) \ {c}.
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for &v in p.vertices().iter().skip(1) {
        seen[v] = true;
        parent[v] = v;
        queue.push_back(v);
    }
    seen[c] = true; // excluded
    let mut hit = None;
    'bfs: while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            parent[w] = u;
            if in_q[w] != usize::MAX {
                hit = Some(w);
                break 'bfs;
            }
            queue.push_back(w);
        }
    }
    let Some(b) = hit else { return Ok(None) };
    let mut walk = vec![b];
    let mut cur = b;
    while in_p[cur] == usize::MAX {
        cur = parent[cur];
        walk.push(cur);
    }
    walk.reverse(); // from the p side to the q side
    let i = in_p[walk[0]];
    let j = in_q[b];
    let f1 = Path::new(g, walk)?;
    Ok(Some((i, j, f1)))
}

/// Assembles the labeled structure from the two radial paths, the optional
/// joining path, and an optional extra pendant path whose first vertex lies
/// strictly inside the cycle arc through the center.
pub fn build_h(
    g: &Graph,
    p: &Path,
    q: &Path,
    joining: Option<(usize, usize, &Path)>,
    rprime: Option<&Path>,
) -> Result<HStructure> {
    if p.first() != q.first() {
        return Err(Error::InvalidArgument(
            "paths must share their first vertex".into(),
        ));
    }
    let Some((i, j, f1)) = joining else {
        // Isometric-path case: P and Q concatenate.
        if rprime.is_some() {
            return Err(Error::InvalidArgument(
                "extra pendant path requires a cycle".into(),
            ));
        }
        let mut merged: Vec<usize> = p.vertices().iter().rev().copied().collect();
        merged.extend_from_slice(&q.vertices()[1..]);
        let merged = Path::new(g, merged)?;
        if !crate::graph::is_isometric_path(g, &merged)? {
            return Err(Error::NotIsometric);
        }
        return Ok(HStructure {
            cycle: Vec::new(),
            p_path: merged.vertices().to_vec(),
            q_path: Vec::new(),
            r_path: Vec::new(),
            m: 0,
            t: 0,
        });
    };
    let pv = p.vertices();
    let qv = q.vertices();
    if i == 0 || i >= pv.len() || j == 0 || j >= qv.len() {
        return Err(Error::InvalidArgument(
            "attachment indices out of range".into(),
        ));
    }
    if f1.first() != pv[i] || f1.last() != qv[j] {
        return Err(Error::InvalidArgument(
            "joining path must run between the attachment vertices".into(),
        ));
    }
    let m = i + j;
    // F2 = (p[i], .., p[1], c, q[1], .., q[j]); F1 closes the cycle.
    let mut cycle: Vec<usize> = (0..=i).rev().map(|s| pv[s]).collect();
    cycle.extend((1..=j).map(|s| qv[s]));
    cycle.extend(f1.vertices()[1..f1.vertices().len() - 1].iter().rev());
    let p_path: Vec<usize> = pv[i..].to_vec();
    let q_path: Vec<usize> = qv[j..].to_vec();

    // c_0 and c_m each appear twice: in the cycle and as a path root.
    let mut used: Vec<usize> = cycle
        .iter()
        .chain(&p_path)
        .chain(&q_path)
        .copied()
        .collect();
    used.sort_unstable();
    let total = used.len();
    used.dedup();
    if used.len() != total - 2 {
        return Err(Error::InvalidArgument(
            "cycle and pendant paths share interior vertices".into(),
        ));
    }

    let mut h = HStructure {
        cycle,
        p_path,
        q_path,
        r_path: Vec::new(),
        m,
        t: 0,
    };
    if let Some(rp) = rprime {
        let anchor = rp.first();
        let t =
            h.cycle.iter().position(|&v| v == anchor).ok_or_else(|| {
                Error::InvalidArgument("pendant path must start on the cycle".into())
            })?;
        if t == 0 || t >= m {
            return Err(Error::InvalidArgument(
                "pendant path must attach strictly inside the center arc".into(),
            ));
        }
        let body = h.vertices();
        if rp.vertices()[1..]
            .iter()
            .any(|v| body.binary_search(v).is_ok())
        {
            return Err(Error::InvalidArgument(
                "pendant path shares interior vertices with the structure".into(),
            ));
        }
        h.t = t;
        h.r_path = rp.vertices().to_vec();
    }
    Ok(h)
}

/// Selection side for the cycle constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    P,
    Q,
}

fn every_third(path: &[usize]) -> impl Iterator<Item = usize> + '_ {
    path.iter().copied().step_by(3)
}

/// Members of the pendant path skipping the cycle attachment itself.
fn path_members(path: &[usize]) -> Vec<usize> {
    every_third(path).skip(1).collect()
}

/// Both pendant paths plus runs into the cycle from each attachment:
/// `alpha1` steps from `c_0` toward the center, `beta1` steps from `c_m`
/// into the far arc. Yields a multipacking of size at least
/// `floor((alpha+alpha1+1)/3) + floor((beta+beta1+1)/3) - 2`.
pub fn choice1(g: &Graph, h: &HStructure, alpha1: usize, beta1: usize) -> Result<PackingWitness> {
    if h.is_path_case() {
        return Err(Error::InvalidArgument("choice1 needs a cycle".into()));
    }
    let gamma = h.gamma();
    let half = gamma / 2;
    if alpha1 + 1 > h.m || beta1 + h.m > gamma - 1 {
        return Err(Error::InvalidArgument(
            "cycle runs exceed their arcs".into(),
        ));
    }
    if alpha1 + 1 > half || beta1 + 1 > half {
        return Err(Error::InvalidArgument(
            "cycle runs exceed half the cycle".into(),
        ));
    }
    let mut members = path_members(&h.p_path);
    members.extend(path_members(&h.q_path));
    members.extend(
        (1..)
            .map(|s| 3 * s)
            .take_while(|&i| i <= alpha1)
            .map(|i| h.cyc(i)),
    );
    members.extend(
        (1..)
            .map(|s| h.m + 3 * s)
            .take_while(|&i| i <= h.m + beta1)
            .map(|i| h.cyc(i)),
    );
    let w = PackingWitness::new(members);
    debug_assert!(verify_multipacking(g, &w).unwrap());
    Ok(w)
}

/// One pendant path plus every third vertex around the whole cycle,
/// starting three steps from the attachment: size at least
/// `floor(gamma/3) + floor(alpha/3) - 1` (beta on the q side).
pub fn choice2(g: &Graph, h: &HStructure, side: Side) -> Result<PackingWitness> {
    if h.gamma() < 3 {
        return Err(Error::InvalidArgument("choice2 needs a cycle".into()));
    }
    let w = PackingWitness::new(choice2_members(h, side));
    debug_assert!(verify_multipacking(g, &w).unwrap());
    Ok(w)
}

fn choice2_members(h: &HStructure, side: Side) -> Vec<usize> {
    let gamma = h.gamma();
    let (path, start) = match side {
        Side::P => (&h.p_path, 0),
        Side::Q => (&h.q_path, h.m),
    };
    let mut members = path_members(path);
    members.extend((1..=(gamma - 1) / 3).map(|s| h.cyc(start + 3 * s)));
    members
}

/// Like `choice2`, additionally walking the extra pendant path: every third
/// vertex at depths congruent to `delta1 + 1 (mod 3)` strictly beyond
/// `delta1 + 2`, where `delta1 = floor(gamma/2) - d(attachment, c_t)`. The
/// offset keeps the pendant members spaced against the cycle selection even
/// when `c_t` itself is selected.
pub fn choice3(g: &Graph, h: &HStructure, side: Side) -> Result<PackingWitness> {
    if h.r_path.is_empty() {
        return Err(Error::InvalidArgument(
            "choice3 needs the extra pendant path".into(),
        ));
    }
    let gamma = h.gamma();
    let start = match side {
        Side::P => 0,
        Side::Q => h.m,
    };
    let d_attach = cycle_dist(gamma, start, h.t);
    let threshold = gamma / 2 - d_attach;
    let delta = h.delta();
    if delta < threshold {
        return Err(Error::InvalidArgument(format!(
            "pendant path too short: delta {delta} below threshold {threshold}"
        )));
    }
    let mut members = choice2_members(h, side);
    members.extend(
        (0..)
            .map(|s| threshold + 4 + 3 * s)
            .take_while(|&i| i <= delta)
            .map(|i| h.r_path[i]),
    );
    let w = PackingWitness::new(members);
    debug_assert!(verify_multipacking(g, &w).unwrap());
    Ok(w)
}

/// Every third vertex around the bare cycle, truncated so the wrap-around
/// gap stays at least three: size `floor(gamma/3)`.
fn cycle_only_members(h: &HStructure) -> Vec<usize> {
    (0..h.gamma() / 3).map(|s| h.cyc(3 * s)).collect()
}

/// Constructs a multipacking of a connected cactus of size at least
/// `ceil((2/3) rad(G) - 11/3)`, in particular at least
/// `(2/3) MP(G) - 11/3`.
pub fn cactus_multipacking(g: &Graph) -> Result<PackingWitness> {
    if !crate::graph::is_cactus(g) {
        return Err(Error::NotCactus);
    }
    let metric = Metric::new(g);
    let r = metric.rad();
    let c = metric.centers()[0];
    if r <= 1 {
        let w = PackingWitness::new(vec![c]);
        debug_assert!(verify_multipacking(g, &w).unwrap());
        return Ok(w);
    }
    let (p, q) = find_radial_pair(g, c)?;
    let joining = find_joining_path(g, &p, &q)?;

    let merged_path_witness = |g: &Graph| -> Result<PackingWitness> {
        let mut merged: Vec<usize> = p.vertices().iter().rev().copied().collect();
        merged.extend_from_slice(&q.vertices()[1..]);
        third_vertex_multipacking(g, &Path::new(g, merged)?)
    };

    let witness = match &joining {
        // No joining path: P and Q concatenate into one isometric path.
        None => merged_path_witness(g)?,
        Some((i, j, f1)) => {
            let x = f1.len();
            let m = i + j;
            if x >= m {
                // The far arc is no shorter than the center arc, so the
                // concatenation is still isometric.
                merged_path_witness(g)?
            } else {
                let h = build_h(g, &p, &q, Some((*i, *j, f1)), None)?;
                let gamma = h.gamma();
                let (y, z) = (*i, *j);
                // With the far arc strictly shorter than the center arc,
                // all three arc pieces fit in half the cycle.
                debug_assert!(x.max(y).max(z) <= gamma / 2);
                let (alpha, beta) = (h.alpha(), h.beta());
                let g_idx = m + x / 2;
                let cg = h.cycle[g_idx];
                let dist_cg = g.bfs(cg);
                let sphere = |v: usize| dist_cg[v] == r;

                if h.p_path[1..].iter().any(|&v| sphere(v)) {
                    choice1(g, &h.swapped(), z - 1, x - 1)?
                } else if h.q_path[1..].iter().any(|&v| sphere(v)) {
                    choice1(g, &h, y - 1, x - 1)?
                } else if h.cycle.iter().any(|&v| sphere(v)) {
                    let w = PackingWitness::new(cycle_only_members(&h));
                    debug_assert!(verify_multipacking(g, &w).unwrap());
                    w
                } else if x >= alpha {
                    choice2(g, &h, Side::Q)?
                } else if x >= beta {
                    choice2(g, &h, Side::P)?
                } else if r as usize <= gamma / 2 + x / 2 {
                    choice2(g, &h, Side::P)?
                } else {
                    // Walk a shortest path from the far-arc midpoint to the
                    // sphere; its exit vertex from the structure anchors the
                    // extra pendant path.
                    let u = (0..g.n()).find(|&v| sphere(v)).ok_or_else(|| {
                        Error::Verification("no vertex at radius distance".into())
                    })?;
                    let (_, rparent) = g.bfs_with_parents(cg);
                    let mut walk = vec![u];
                    let mut cur = u;
                    while cur != cg {
                        cur = rparent[cur];
                        walk.push(cur);
                    }
                    walk.reverse();
                    let body = h.vertices();
                    let h_idx = (0..walk.len())
                        .rev()
                        .find(|&idx| body.binary_search(&walk[idx]).is_ok())
                        .unwrap();
                    let rp = Path::new(g, walk[h_idx..].to_vec())?;
                    let h2 = build_h(g, &p, &q, Some((*i, *j, f1)), Some(&rp))?;
                    if z >= y {
                        choice3(g, &h2, Side::P)?
                    } else {
                        choice3(g, &h2, Side::Q)?
                    }
                }
            }
        }
    };
    // Degenerate structures can select nothing; a singleton always packs.
    let witness = if witness.is_empty() {
        PackingWitness::new(vec![c])
    } else {
        witness
    };
    if !verify_multipacking(g, &witness)? {
        return Err(Error::Verification(
            "constructed set failed multipacking verification".into(),
        ));
    }
    Ok(witness)
}

/// The guaranteed size `ceil((2 rad - 11) / 3)`, clamped at one.
pub fn guaranteed_size(rad: u32) -> usize {
    let num = 2 * rad as i64 - 11;
    if num <= 0 {
        1
    } else {
        (num as usize).div_ceil(3).max(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::{gamma_b_exact, mp_exact};
    use rand::SeedableRng;

    #[test]
    fn radial_pair_on_path() {
        let p7 = Graph::path(7);
        let (p, q) = find_radial_pair(&p7, 3).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(q.len(), 3);
        assert_eq!(p.first(), 3);
        assert_eq!(q.first(), 3);
        // Only the center is shared.
        let shared: Vec<usize> = p
            .vertices()
            .iter()
            .filter(|v| q.vertices().contains(v))
            .copied()
            .collect();
        assert_eq!(shared, vec![3]);
    }

    #[test]
    fn radial_pair_on_cycle_and_star() {
        let c8 = Graph::cycle(8);
        let (p, q) = find_radial_pair(&c8, 0).unwrap();
        assert_eq!(p.len(), 4);
        assert!(q.len() == 3 || q.len() == 4);

        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (p, q) = find_radial_pair(&star, 0).unwrap();
        assert_eq!((p.len(), q.len()), (1, 1));
        assert_ne!(p.last(), q.last());
    }

    #[test]
    fn radial_pair_rejects_bad_input() {
        assert!(find_radial_pair(&Graph::complete(4), 0).is_err());
        let p7 = Graph::path(7);
        assert!(find_radial_pair(&p7, 0).is_err()); // not a center
    }

    #[test]
    fn joining_path_cases() {
        // Trees never have one.
        let p7 = Graph::path(7);
        let (p, q) = find_radial_pair(&p7, 3).unwrap();
        assert!(find_joining_path(&p7, &p, &q).unwrap().is_none());

        // On a cycle the two arcs are joined by the opposite edge.
        let c8 = Graph::cycle(8);
        let (p, q) = find_radial_pair(&c8, 0).unwrap();
        let (i, j, f1) = find_joining_path(&c8, &p, &q).unwrap().unwrap();
        assert!(f1.len() >= 1);
        assert_eq!(f1.first(), p.vertices()[i]);
        assert_eq!(f1.last(), q.vertices()[j]);
        // F1 avoids the center and meets P and Q only at its endpoints.
        assert!(!f1.vertices().contains(&0));
        for &v in &f1.vertices()[1..f1.vertices().len() - 1] {
            assert!(!p.vertices().contains(&v) && !q.vertices().contains(&v));
        }
    }

    /// C_6 with pendant paths of length 2 at opposite cycle vertices:
    /// cycle 0..5, path 6-7 at 0, path 8-9 at 3.
    fn cycle_with_pendants() -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
        edges.extend([(0, 6), (6, 7), (3, 8), (8, 9)]);
        Graph::new(10, edges).unwrap()
    }

    #[test]
    fn choice_formula_examples() {
        // gamma = 6, alpha = 2: members {c_3}, size 1.
        let g = cycle_with_pendants();
        // Build H directly: cycle 0..5, p at 0 (0-6-7), q at 3 (3-8-9).
        let h = HStructure {
            cycle: vec![0, 1, 2, 3, 4, 5],
            p_path: vec![0, 6, 7],
            q_path: vec![3, 8, 9],
            r_path: vec![],
            m: 3,
            t: 0,
        };
        let w = choice2(&g, &h, Side::P).unwrap();
        assert_eq!(w.members, vec![3]);

        // gamma = 9, alpha = 0: members {c_3, c_6}, size 2.
        let c9 = Graph::cycle(9);
        let h = HStructure {
            cycle: (0..9).collect(),
            p_path: vec![0],
            q_path: vec![4],
            r_path: vec![],
            m: 4,
            t: 0,
        };
        let w = choice2(&c9, &h, Side::P).unwrap();
        assert_eq!(w.members, vec![3, 6]);
    }

    #[test]
    fn choice1_example_gamma8() {
        // gamma = 8, m = 4, alpha = beta = 5, alpha1 = beta1 = 2: the two
        // pendant thirds {a_3, b_3} are selected and no cycle vertices are.
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        // p path at 0: 0-8-9-10-11-12; q path at 4: 4-13-14-15-16-17.
        edges.extend([(0, 8), (8, 9), (9, 10), (10, 11), (11, 12)]);
        edges.extend([(4, 13), (13, 14), (14, 15), (15, 16), (16, 17)]);
        let g = Graph::new(18, edges).unwrap();
        let h = HStructure {
            cycle: (0..8).collect(),
            p_path: vec![0, 8, 9, 10, 11, 12],
            q_path: vec![4, 13, 14, 15, 16, 17],
            r_path: vec![],
            m: 4,
            t: 0,
        };
        let w = choice1(&g, &h, 2, 2).unwrap();
        assert_eq!(w.members, vec![10, 15]); // a_3 and b_3
        assert!(w.len() >= 8 / 3 + 8 / 3 - 2);

        // Zero-length runs keep only the pendant thirds.
        let w = choice1(&g, &h, 0, 0).unwrap();
        assert_eq!(w.members, vec![10, 15]);
        assert!(choice1(&g, &h, 4, 2).is_err()); // exceeds floor(gamma/2)-1
    }

    #[test]
    fn choice3_example() {
        // gamma = 8, attachment c_t at cycle distance 2 from c_0, so
        // delta1 = floor(8/2) - 2 = 2. With delta = 4 the pendant run
        // (depths delta1+4, delta1+7, ...) is still empty and the set is
        // {a_3, c_3, c_6}; extending the pendant to delta = 6 adds e_6.
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend([(0, 8), (8, 9), (9, 10)]); // p: 0-8-9-10
        edges.extend([(4, 11)]); // q: 4-11
        edges.extend([(2, 12), (12, 13), (13, 14), (14, 15), (15, 16), (16, 17)]); // r at c_2
        let g = Graph::new(18, edges).unwrap();
        let h = HStructure {
            cycle: (0..8).collect(),
            p_path: vec![0, 8, 9, 10],
            q_path: vec![4, 11],
            r_path: vec![2, 12, 13, 14, 15],
            m: 4,
            t: 2,
        };
        let w = choice3(&g, &h, Side::P).unwrap();
        assert_eq!(w.members, vec![3, 6, 10]);
        assert!(w.len() as i64 >= 8 / 3 + 3 / 3 + (4i64 - 2 - 1).div_euclid(3) - 1);

        let h6 = HStructure {
            r_path: vec![2, 12, 13, 14, 15, 16, 17],
            ..h.clone()
        };
        let w6 = choice3(&g, &h6, Side::P).unwrap();
        assert_eq!(w6.members, vec![3, 6, 10, 17]);

        // delta = threshold: reduces to choice2.
        let h2 = HStructure {
            r_path: vec![2, 12, 13],
            ..h.clone()
        };
        let w2 = choice3(&g, &h2, Side::P).unwrap();
        assert_eq!(w2.members, choice2(&g, &h2, Side::P).unwrap().members);
    }

    #[test]
    fn pipeline_on_paths_and_cycles() {
        let p10 = Graph::path(10);
        let w = cactus_multipacking(&p10).unwrap();
        assert!(w.len() >= 4); // ceil(2*5/3)

        let c5 = Graph::cycle(5);
        let w = cactus_multipacking(&c5).unwrap();
        assert!(!w.is_empty());

        let p2 = Graph::path(2);
        assert_eq!(cactus_multipacking(&p2).unwrap().len(), 1);

        assert!(cactus_multipacking(&Graph::complete(4)).is_err());
    }

    #[test]
    fn pipeline_on_pentagon_chains() {
        for k in [1, 2, 3] {
            let b = crate::family::pentagon_chain(k).unwrap();
            let m = Metric::new(&b.graph);
            let w = cactus_multipacking(&b.graph).unwrap();
            assert!(verify_multipacking(&b.graph, &w).unwrap());
            assert!(w.len() >= guaranteed_size(m.rad()));
        }
    }

    #[test]
    fn pipeline_on_random_cacti() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..150 {
            let g = crate::random::random_cactus(&mut rng, 40);
            let m = Metric::new(&g);
            let w = cactus_multipacking(&g).unwrap();
            assert!(
                verify_multipacking(&g, &w).unwrap(),
                "invalid witness on rad {} graph {:?}",
                m.rad(),
                g
            );
            assert!(
                w.len() >= guaranteed_size(m.rad()),
                "witness {} below bound {} on rad {} graph {:?}",
                w.len(),
                guaranteed_size(m.rad()),
                m.rad(),
                g
            );
        }
    }

    #[test]
    fn cactus_ratio_bound_small() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(55);
        for _ in 0..40 {
            let g = crate::random::random_cactus(&mut rng, 14);
            let (mp, _) = mp_exact(&g).unwrap();
            let (gb, _) = gamma_b_exact(&g).unwrap();
            assert!(2 * gb as usize <= 3 * mp + 11);
        }
    }

    #[test]
    fn radial_pair_lengths_are_tight() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..60 {
            let g = crate::random::random_cactus(&mut rng, 25);
            let m = Metric::new(&g);
            if m.rad() == 0 {
                continue;
            }
            let c = m.centers()[0];
            let (p, q) = find_radial_pair(&g, c).unwrap();
            assert_eq!(p.len() as u32, m.rad());
            assert!(q.len() as u32 + 1 >= m.rad() && q.len() as u32 <= m.rad());
            assert!(crate::graph::is_isometric_path(&g, &p).unwrap());
            assert!(crate::graph::is_isometric_path(&g, &q).unwrap());
        }
    }
}
