//! Euclidean point-set analogues: nearest-neighbor graphs, the exact
//! minimum-dominating-broadcast solver via minimum edge cover, point-set
//! multipacking verification with small exact solvers, a 1D r-multipacking
//! dynamic program, and kissing-number bound reports.
//!
//! Coordinates are exact integers (decimal input is scaled on ingestion), so
//! the all-pairwise-distances-distinct assumption is decidable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::Broadcast;

/// A point set in `R^d` with exact integer coordinates and pairwise-distinct
/// distances, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<i64>>,
    /// orders[v] = other points sorted by distance from v.
    orders: Vec<Vec<usize>>,
    /// ranks[v][u] = 1-based position of u among v's neighbors (0 for u = v).
    ranks: Vec<Vec<usize>>,
}

impl PointSet {
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty point set".into()));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "points need at least one coordinate".into(),
            ));
        }
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidArgument("inconsistent dimensions".into()));
        }
        let sq = |a: &[i64], b: &[i64]| -> i128 {
            a.iter()
                .zip(b)
                .map(|(&x, &y)| {
                    let d = (x - y) as i128;
                    d * d
                })
                .sum()
        };
        let mut all = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                all.push(sq(&points[i], &points[j]));
            }
        }
        all.sort_unstable();
        if all.first() == Some(&0) || all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "general position violated: pairwise distances are not distinct".into(),
            ));
        }
        let mut orders = Vec::with_capacity(n);
        let mut ranks = vec![vec![0usize; n]; n];
        for v in 0..n {
            let mut order: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            order.sort_by_key(|&u| sq(&points[v], &points[u]));
            for (i, &u) in order.iter().enumerate() {
                ranks[v][u] = i + 1;
            }
            orders.push(order);
        }
        Ok(PointSet {
            dim,
            points,
            orders,
            ranks,
        })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self, v: usize) -> &[i64] {
        &self.points[v]
    }

    /// 1-based position of `u` in the neighbor order of `v`; 0 when `u = v`.
    pub fn rank(&self, v: usize, u: usize) -> usize {
        self.ranks[v][u]
    }

    /// The unique nearest neighbor of `v`.
    pub fn nearest(&self, v: usize) -> usize {
        self.orders[v][0]
    }

    /// `N_r[v]`: `v` itself plus its `r` nearest points.
    pub fn ball(&self, v: usize, r: usize) -> Vec<usize> {
        let mut out = vec![v];
        out.extend_from_slice(&self.orders[v][..r.min(self.n() - 1)]);
        out
    }

    /// Parses one point per line, comma-separated decimal coordinates.
    /// Decimals are scaled to a common integer grid.
    pub fn from_text(s: &str) -> Result<Self> {
        // (sign, integer digits, fraction digits) per coordinate.
        let mut raw: Vec<Vec<(i64, i64, String)>> = Vec::new();
        let mut max_frac = 0usize;
        for (lno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut coords = Vec::new();
            for tok in line.split(',') {
                let tok = tok.trim();
                let bad = || Error::Parse {
                    line: lno + 1,
                    msg: format!("bad coordinate {tok:?}"),
                };
                let (sign, rest) = match tok.strip_prefix('-') {
                    Some(r) => (-1i64, r),
                    None => (1i64, tok),
                };
                let (int_part, frac_part) = match rest.split_once('.') {
                    Some((i, f)) => (i, f.trim_end_matches('0')),
                    None => (rest, ""),
                };
                if int_part.is_empty() && frac_part.is_empty() {
                    return Err(bad());
                }
                let int_val: i64 = if int_part.is_empty() {
                    0
                } else {
                    int_part.parse().map_err(|_| bad())?
                };
                if frac_part.chars().any(|c| !c.is_ascii_digit()) {
                    return Err(bad());
                }
                max_frac = max_frac.max(frac_part.len());
                coords.push((sign, int_val, frac_part.to_string()));
            }
            raw.push(coords);
        }
        if max_frac > 12 {
            return Err(Error::InvalidArgument(
                "more than 12 decimal places are not supported".into(),
            ));
        }
        let scale = 10i64.pow(max_frac as u32);
        let points = raw
            .into_iter()
            .map(|coords| {
                coords
                    .into_iter()
                    .map(|(sign, int_val, mut frac)| {
                        while frac.len() < max_frac {
                            frac.push('0');
                        }
                        let frac_val: i64 = if frac.is_empty() {
                            0
                        } else {
                            frac.parse().unwrap()
                        };
                        sign * (int_val * scale + frac_val)
                    })
                    .collect()
            })
            .collect();
        PointSet::new(points)
    }
}

/// Nearest-neighbor digraph: one out-arc per point; each weak component
/// contains exactly one mutual pair (its bi-root) and is a tree once the
/// mutual pair is merged into a single undirected edge.
#[derive(Debug, Clone, Serialize)]
pub struct NngGraph {
    pub out: Vec<usize>,
    /// Distinct undirected edges, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Weak components as sorted vertex lists.
    pub components: Vec<Vec<usize>>,
    /// One mutual pair per component, aligned with `components`.
    pub biroots: Vec<(usize, usize)>,
}

pub fn build_nng(p: &PointSet) -> Result<NngGraph> {
    let n = p.n();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "nearest-neighbor graph needs at least two points".into(),
        ));
    }
    let out: Vec<usize> = (0..n).map(|v| p.nearest(v)).collect();
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v.min(out[v]), v.max(out[v]))).collect();
    edges.sort_unstable();
    edges.dedup();

    // Weak components over the undirected edges.
    let mut comp = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut verts = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    verts.push(w);
                    stack.push(w);
                }
            }
        }
        verts.sort_unstable();
        components.push(verts);
    }

    let mut biroots = vec![None; components.len()];
    for v in 0..n {
        let u = out[v];
        if v < u && out[u] == v {
            let c = comp[v];
            if biroots[c].is_some() {
                return Err(Error::Verification(
                    "nearest-neighbor component with two mutual pairs".into(),
                ));
            }
            biroots[c] = Some((v, u));
        }
    }
    let biroots: Vec<(usize, usize)> =
        biroots
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::Verification("nearest-neighbor component without a mutual pair".into())
            })?;
    Ok(NngGraph {
        out,
        edges,
        components,
        biroots,
    })
}

/// Minimum edge cover of the underlying undirected nearest-neighbor forest:
/// a maximum matching (leaf matching, exact on forests) extended greedily.
pub fn min_edge_cover(nng: &NngGraph) -> Vec<(usize, usize)> {
    let n = nng.out.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &nng.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut alive = vec![true; n];
    let mut matched = vec![false; n];
    let mut cover: Vec<(usize, usize)> = Vec::new();
    let mut queue: std::collections::VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(u) = queue.pop_front() {
        if !alive[u] || deg[u] != 1 {
            continue;
        }
        let p = *adj[u].iter().find(|&&w| alive[w]).unwrap();
        cover.push((u.min(p), u.max(p)));
        matched[u] = true;
        matched[p] = true;
        alive[u] = false;
        alive[p] = false;
        for &w in &adj[p] {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
        deg[u] = 0;
        deg[p] = 0;
    }
    // Cover the unmatched vertices with their own out-arc edge.
    for v in 0..n {
        if !matched[v] {
            let u = nng.out[v];
            cover.push((v.min(u), v.max(u)));
        }
    }
    cover.sort_unstable();
    cover.dedup();
    cover
}

/// Minimum dominating broadcast via the nearest-neighbor edge cover: each
/// cover edge contributes one weight-1 tower at its tail (the lower-indexed
/// endpoint for a mutual pair).
pub fn mdb(p: &PointSet) -> Result<(u32, Broadcast)> {
    let nng = build_nng(p)?;
    let cover = min_edge_cover(&nng);
    let mut f = Broadcast::new();
    for &(a, b) in &cover {
        let tower = if nng.out[a] == b && nng.out[b] == a {
            a.min(b)
        } else if nng.out[a] == b {
            a
        } else {
            b
        };
        debug_assert_eq!(f.get(tower), 0);
        f.set(tower, 1);
    }
    let cost = cover.len() as u32;
    debug_assert_eq!(f.cost(), cost);
    debug_assert!(verify_point_broadcast(p, &f).unwrap());
    Ok((cost, f))
}

/// True iff every point hears some tower: `u` is covered by `v` when
/// `u` lies among the `f(v)` nearest points of `v` (or `u = v`, `f(v) > 0`).
pub fn verify_point_broadcast(p: &PointSet, f: &Broadcast) -> Result<bool> {
    let n = p.n();
    for (v, w) in f.towers() {
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        if w as usize > n.saturating_sub(1) {
            return Err(Error::InvalidArgument(format!(
                "weight {w} at point {v} exceeds n-1 = {}",
                n - 1
            )));
        }
    }
    'points: for u in 0..n {
        for (v, w) in f.towers() {
            if p.rank(v, u) <= w as usize {
                continue 'points;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Point-set ball condition `|N_s[v] ∩ M| <= (s+1)/2` for `s` in `1..=r`.
fn point_ball_condition(p: &PointSet, members: &[usize], r: usize) -> bool {
    for v in 0..p.n() {
        let mut ranks: Vec<usize> = members.iter().map(|&m| p.rank(v, m)).collect();
        ranks.sort_unstable();
        for (i, &rk) in ranks.iter().enumerate() {
            let s = rk.max(1);
            if s <= r && i + 1 > (s + 1) / 2 {
                return false;
            }
        }
    }
    true
}

/// Multipacking check over all sizes `s` in `1..=n-1`.
pub fn verify_point_multipacking(p: &PointSet, members: &[usize]) -> Result<bool> {
    verify_point_r_multipacking(p, members, p.n().saturating_sub(1))
}

pub fn verify_point_r_multipacking(p: &PointSet, members: &[usize], r: usize) -> Result<bool> {
    for &m in members {
        if m >= p.n() {
            return Err(Error::VertexOutOfRange { v: m, n: p.n() });
        }
    }
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(point_ball_condition(p, &sorted, r))
}

/// Exact maximum r-multipacking of a point set by branch-and-bound
/// (`r = None` means the full multipacking, `r = n-1`).
pub fn mp_points_exact(p: &PointSet, r: Option<usize>, cap: u64) -> Result<(usize, Vec<usize>)> {
    let n = p.n();
    let r = r.unwrap_or(n.saturating_sub(1));
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes = 0u64;

    fn dfs(
        p: &PointSet,
        r: usize,
        v: usize,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        nodes: &mut u64,
        cap: u64,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::Inconclusive { nodes: *nodes });
        }
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if v >= p.n() || chosen.len() + (p.n() - v) <= best.len() {
            return Ok(());
        }
        chosen.push(v);
        if point_ball_condition(p, chosen, r) {
            dfs(p, r, v + 1, chosen, best, nodes, cap)?;
        }
        chosen.pop();
        dfs(p, r, v + 1, chosen, best, nodes, cap)
    }

    dfs(p, r, 0, &mut chosen, &mut best, &mut nodes, cap)?;
    best.sort_unstable();
    Ok((best.len(), best))
}

/// Exact minimum broadcast cost over 0/1 assignments (justified: some
/// minimum broadcast is 0/1-valued). A weight-1 tower covers itself and its
/// nearest neighbor only.
pub fn gamma_b_points_exact(p: &PointSet, cap: u64) -> Result<(u32, Broadcast)> {
    let n = p.n();
    if n == 1 {
        // The lone point must be its own tower.
        return Ok((1, Broadcast::from_pairs([(0, 1)])));
    }
    let mut best: Option<Vec<usize>> = None;
    let mut chosen: Vec<usize> = Vec::new();
    let mut covered = vec![0u32; n];
    let mut nodes = 0u64;
    // in_arcs[u] = towers whose weight-1 ball covers u (besides u itself).
    let mut in_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        in_arcs[p.nearest(v)].push(v);
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        p: &PointSet,
        in_arcs: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        covered: &mut Vec<u32>,
        best: &mut Option<Vec<usize>>,
        nodes: &mut u64,
        cap: u64,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::Inconclusive { nodes: *nodes });
        }
        if let Some(b) = best {
            if chosen.len() >= b.len() {
                return Ok(());
            }
        }
        let u = match covered.iter().position(|&c| c == 0) {
            None => {
                *best = Some(chosen.clone());
                return Ok(());
            }
            Some(u) => u,
        };
        let mut cands = vec![u];
        cands.extend_from_slice(&in_arcs[u]);
        for t in cands {
            chosen.push(t);
            covered[t] += 1;
            covered[p.nearest(t)] += 1;
            dfs(p, in_arcs, chosen, covered, best, nodes, cap)?;
            chosen.pop();
            covered[t] -= 1;
            covered[p.nearest(t)] -= 1;
        }
        Ok(())
    }

    dfs(
        p,
        &in_arcs,
        &mut chosen,
        &mut covered,
        &mut best,
        &mut nodes,
        cap,
    )?;
    let towers = best.unwrap();
    let f = Broadcast::from_pairs(towers.iter().map(|&t| (t, 1)));
    Ok((f.cost(), f))
}

/// Minimum broadcast cost over the full weight codomain `0..=n-1`; slow,
/// used to validate the 0/1 restriction.
pub fn gamma_b_points_unrestricted(p: &PointSet, cap: u64) -> Result<u32> {
    let n = p.n();
    if n == 1 {
        return Ok(1);
    }
    let mut best = u32::MAX;
    let mut covered = vec![0u32; n];
    let mut nodes = 0u64;

    fn dfs(
        p: &PointSet,
        covered: &mut Vec<u32>,
        cost: u32,
        best: &mut u32,
        nodes: &mut u64,
        cap: u64,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::Inconclusive { nodes: *nodes });
        }
        if cost >= *best {
            return Ok(());
        }
        let u = match covered.iter().position(|&c| c == 0) {
            None => {
                *best = cost;
                return Ok(());
            }
            Some(u) => u,
        };
        let n = p.n();
        for v in 0..n {
            let need = p.rank(v, u).max(1) as u32;
            for w in need..n as u32 {
                if cost + w >= *best {
                    break;
                }
                let ball = p.ball(v, w as usize);
                for &x in &ball {
                    covered[x] += 1;
                }
                dfs(p, covered, cost + w, best, nodes, cap)?;
                for &x in &ball {
                    covered[x] -= 1;
                }
            }
        }
        Ok(())
    }

    dfs(p, &mut covered, 0, &mut best, &mut nodes, cap)?;
    Ok(best)
}

/// Exact maximum r-multipacking of a 1D point set by dynamic programming
/// over the points in coordinate order, tracking the chosen-pattern of the
/// last `r` points (windows never span more than r+1 consecutive points).
pub fn line_r_multipacking(p: &PointSet, r: usize) -> Result<(usize, Vec<usize>)> {
    if p.dim() != 1 {
        return Err(Error::InvalidArgument(
            "line solver requires 1-dimensional input".into(),
        ));
    }
    let n = p.n();
    if r < 1 || r > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "r must lie in 1..={}",
            n - 1
        )));
    }
    // The DP carries n * 2^(r+1) parent entries.
    if r > 18 {
        return Err(Error::InvalidArgument(
            "r above 18 exceeds the desk-scale pattern DP".into(),
        ));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&v| p.coords(v)[0]);

    // is_window[l][h]: [l..=h] (in sorted order) equals N_s[v] for some v
    // and s = h - l <= r.
    let mut is_window = vec![vec![false; n]; n];
    for (pos, _) in idx.iter().enumerate() {
        let (mut lo, mut hi) = (pos, pos);
        for _s in 1..=r {
            let left_gap = if lo > 0 {
                Some(p.coords(idx[pos])[0] - p.coords(idx[lo - 1])[0])
            } else {
                None
            };
            let right_gap = if hi + 1 < n {
                Some(p.coords(idx[hi + 1])[0] - p.coords(idx[pos])[0])
            } else {
                None
            };
            match (left_gap, right_gap) {
                (None, None) => break,
                (Some(_), None) => lo -= 1,
                (None, Some(_)) => hi += 1,
                (Some(l), Some(rg)) => {
                    if l < rg {
                        lo -= 1;
                    } else {
                        hi += 1;
                    }
                }
            }
            is_window[lo][hi] = true;
        }
    }

    // DP over positions; after processing position i, mask bit j records
    // whether position i-j was chosen (windows span at most r+1 positions).
    // Score = chosen count; parents enable witness reconstruction.
    let width = (r + 1).min(n);
    let masks = 1usize << width;
    const NEG: i32 = i32::MIN / 2;
    let mut dp = vec![NEG; masks];
    let mut parents: Vec<Vec<(usize, bool)>> = Vec::with_capacity(n + 1);
    dp[0] = 0;
    for i in 0..n {
        let mut next = vec![NEG; masks];
        let mut par = vec![(usize::MAX, false); masks];
        for mask in 0..masks {
            if dp[mask] == NEG {
                continue;
            }
            'choice: for take in [false, true] {
                // Pattern of positions i-width+1 ..= i; offset 0 = position i.
                let newmask = ((mask << 1) | usize::from(take)) & (masks - 1);
                // Check windows ending at position i.
                let lo_min = i.saturating_sub(width - 1);
                for l in lo_min..=i {
                    if !is_window[l][i] {
                        continue;
                    }
                    let size = i - l + 1;
                    let cap = size / 2; // floor((s+1)/2), s = size-1
                    let mut count = 0;
                    for off in 0..size {
                        // position i-off: bit off of newmask
                        if newmask >> off & 1 == 1 {
                            count += 1;
                        }
                    }
                    if count > cap {
                        continue 'choice;
                    }
                }
                let score = dp[mask] + i32::from(take);
                if score > next[newmask] {
                    next[newmask] = score;
                    par[newmask] = (mask, take);
                }
            }
        }
        parents.push(par);
        dp = next;
    }
    let (mut mask, &score) = dp
        .iter()
        .enumerate()
        .max_by_key(|&(_, &s)| s)
        .map(|(m, s)| (m, s))
        .unwrap();
    let mut members = Vec::new();
    for i in (0..n).rev() {
        let (prev, take) = parents[i][mask];
        if take {
            members.push(idx[i]);
        }
        mask = prev;
    }
    members.sort_unstable();
    debug_assert_eq!(members.len(), score as usize);
    debug_assert!(point_ball_condition(p, &members, r));
    Ok((score as usize, members))
}

#[derive(Debug, Clone, Serialize)]
pub struct PointBoundEntry {
    pub value: i64,
    pub rule: String,
}

/// Bounds on the broadcast domination number of a point set: `n/2` from
/// below; kissing-number bounds from above (d <= 4), sharpened to `5n/6`
/// in the plane.
#[derive(Debug, Clone, Serialize)]
pub struct PointBounds {
    pub lower: Vec<PointBoundEntry>,
    pub upper: Vec<PointBoundEntry>,
}

/// Kissing numbers for dimensions 1..=4.
pub const KISSING: [i64; 4] = [2, 6, 12, 24];

pub fn bounds_points(p: &PointSet) -> Result<PointBounds> {
    let n = p.n() as i64;
    if n < 2 {
        return Err(Error::InvalidArgument(
            "bounds apply to point sets with at least two points".into(),
        ));
    }
    let mut lower = vec![PointBoundEntry {
        value: (n + 1) / 2,
        rule: "half-n".into(),
    }];
    let mut upper = Vec::new();
    if p.dim() <= 4 {
        let tau = KISSING[p.dim() - 1];
        upper.push(PointBoundEntry {
            value: tau * n / (tau + 1),
            rule: format!("kissing-tau{}", p.dim()),
        });
    }
    if p.dim() == 2 {
        upper.push(PointBoundEntry {
            value: 5 * n / 6,
            rule: "plane-5/6".into(),
        });
    }
    lower.sort_by(|a, b| b.value.cmp(&a.value));
    upper.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(PointBounds { lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(points: &[i64]) -> PointSet {
        PointSet::new(points.iter().map(|&x| vec![x]).collect()).unwrap()
    }

    #[test]
    fn nng_line_example() {
        let p = line(&[0, 1, 3, 7]);
        let g = build_nng(&p).unwrap();
        assert_eq!(g.out, vec![1, 0, 1, 2]);
        assert_eq!(g.components.len(), 1);
        assert_eq!(g.biroots, vec![(0, 1)]);

        let two = line(&[0, 5]);
        let g = build_nng(&two).unwrap();
        assert_eq!(g.biroots, vec![(0, 1)]);
    }

    #[test]
    fn nng_rejects_ties() {
        assert!(PointSet::new(vec![vec![0], vec![2], vec![4]]).is_err());
        assert!(PointSet::new(vec![vec![0], vec![0]]).is_err());
    }

    #[test]
    fn edge_cover_examples() {
        let p = line(&[0, 1, 3, 7]);
        let g = build_nng(&p).unwrap();
        let cover = min_edge_cover(&g);
        assert_eq!(cover.len(), 2);
        // Star-shaped component: center 0 nearest to all.
        let star = PointSet::new(vec![vec![0, 0], vec![10, 0], vec![0, 11], vec![-12, 0]]).unwrap();
        let g = build_nng(&star).unwrap();
        assert_eq!(min_edge_cover(&g).len(), 3);
    }

    #[test]
    fn mdb_example() {
        let p = line(&[0, 1, 3, 7]);
        let (cost, f) = mdb(&p).unwrap();
        assert_eq!(cost, 2);
        assert!(verify_point_broadcast(&p, &f).unwrap());
        let (exact, _) = gamma_b_points_exact(&p, 1 << 30).unwrap();
        assert_eq!(exact, 2);

        let two = line(&[0, 5]);
        assert_eq!(mdb(&two).unwrap().0, 1);
    }

    #[test]
    fn well_separated_pairs_cost_half_n() {
        let p = line(&[0, 1, 100, 102, 220, 223]);
        let (cost, _) = mdb(&p).unwrap();
        assert_eq!(cost, 3);
    }

    #[test]
    fn point_multipacking_examples() {
        // Points at coordinates 0, 1, 5 (indices 0, 1, 2).
        let p = line(&[0, 1, 5]);
        assert!(verify_point_multipacking(&p, &[0]).unwrap());
        // A mutual nearest pair is never a multipacking.
        assert!(!verify_point_multipacking(&p, &[0, 1]).unwrap());
        // {0, 5}: N_2[first point] holds both members but allows only 1.
        assert!(!verify_point_multipacking(&p, &[0, 2]).unwrap());
        assert_eq!(mp_points_exact(&p, None, 1 << 20).unwrap().0, 1);
    }

    #[test]
    fn gamma_b_single_point() {
        let p = PointSet::new(vec![vec![3]]).unwrap();
        assert_eq!(gamma_b_points_exact(&p, 1 << 10).unwrap().0, 1);
    }

    #[test]
    fn unrestricted_matches_zero_one() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..30 {
            let n = rng.gen_range(2..=6);
            let dim = rng.gen_range(1..=2);
            let p = crate::random::random_point_set(&mut rng, n, dim);
            let (zo, f) = gamma_b_points_exact(&p, 1 << 30).unwrap();
            assert!(verify_point_broadcast(&p, &f).unwrap());
            assert_eq!(zo, gamma_b_points_unrestricted(&p, 1 << 30).unwrap());
        }
    }

    /// Maximum matching by edge-subset enumeration (forests are tiny here).
    fn brute_matching(n: usize, edges: &[(usize, usize)]) -> usize {
        let m = edges.len();
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let mut used = vec![false; n];
            let mut ok = true;
            let mut size = 0;
            for (i, &(a, b)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used[a] || used[b] {
                        ok = false;
                        break;
                    }
                    used[a] = true;
                    used[b] = true;
                    size += 1;
                }
            }
            if ok {
                best = best.max(size);
            }
        }
        best
    }

    #[test]
    fn gallai_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let n = rng.gen_range(2..=10);
            let dim = rng.gen_range(1..=3);
            let p = crate::random::random_point_set(&mut rng, n, dim);
            let g = build_nng(&p).unwrap();
            let cover = min_edge_cover(&g);
            let mu = brute_matching(n, &g.edges);
            assert_eq!(cover.len(), n - mu);
        }
    }

    #[test]
    fn line_dp_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..60 {
            let n = rng.gen_range(2..=10);
            let p = crate::random::random_point_set(&mut rng, n, 1);
            let r_hi = (n - 1).min(5);
            for r in 1..=r_hi {
                let (dp, w) = line_r_multipacking(&p, r).unwrap();
                assert!(verify_point_r_multipacking(&p, &w, r).unwrap());
                let (bf, _) = mp_points_exact(&p, Some(r), 1 << 30).unwrap();
                assert_eq!(dp, bf, "n={n} r={r} points={:?}", p.points);
            }
        }
    }

    #[test]
    fn line_specific_cases() {
        let p = line(&[0, 1, 5]);
        assert_eq!(line_r_multipacking(&p, 2).unwrap().0, 1);
        let p = line(&[0, 1, 3, 7, 12, 20]);
        let (bf, _) = mp_points_exact(&p, Some(1), 1 << 30).unwrap();
        assert_eq!(line_r_multipacking(&p, 1).unwrap().0, bf);
        // r = n-1 equals the full multipacking number.
        let (full, _) = mp_points_exact(&p, None, 1 << 30).unwrap();
        assert_eq!(line_r_multipacking(&p, 5).unwrap().0, full);
    }

    #[test]
    fn bounds_examples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101);
        let p = crate::random::random_point_set(&mut rng, 12, 2);
        let b = bounds_points(&p).unwrap();
        assert_eq!(b.lower[0].value, 6);
        assert_eq!(b.upper[0].value, 10);

        // Mian-Chowla prefix: a Sidon set, so 1D distances are distinct.
        let p = line(&[0, 1, 3, 7, 12, 20, 30, 44, 65, 80]);
        let b = bounds_points(&p).unwrap();
        assert_eq!(b.lower[0].value, 5);
        assert_eq!(b.upper[0].value, 6);

        let p = crate::random::random_point_set(&mut rng, 13, 3);
        let b = bounds_points(&p).unwrap();
        assert_eq!(b.upper[0].value, 12);
    }

    #[test]
    fn from_text_scales_decimals() {
        let p = PointSet::from_text("0.5, 1\n2, 3.25\n-1.5, 0\n").unwrap();
        assert_eq!(p.coords(0), &[50, 100]);
        assert_eq!(p.coords(1), &[200, 325]);
        assert_eq!(p.coords(2), &[-150, 0]);
        let q = PointSet::from_text("0\n1\n3\n7\n").unwrap();
        assert_eq!(q.coords(3), &[7]);
    }
}
