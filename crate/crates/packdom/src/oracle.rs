//! Exact desk-scale solvers used as ground truth: maximum multipacking and
//! r-multipacking, broadcast domination number, minimum (total) dominating
//! set, minimum hitting set, maximum independent set, and the verifiers they
//! share. Searches carry an explicit node budget; exceeding it is reported
//! as an inconclusive outcome, never as a bound.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Metric, INF};

/// Default search-node cap for the exact solvers.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// A vertex subset claimed as a multipacking or r-multipacking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingWitness {
    pub members: Vec<usize>,
    /// Largest radius the witness is claimed against; `None` means all radii
    /// (equivalently, up to the radius of each component).
    pub r_max: Option<u32>,
}

impl PackingWitness {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        PackingWitness {
            members,
            r_max: None,
        }
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r_max = Some(r);
        self
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "M": self.members })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct W {
            #[serde(rename = "M")]
            m: Vec<usize>,
        }
        let w: W = serde_json::from_str(s)?;
        Ok(PackingWitness::new(w.m))
    }
}

/// Integer-weight broadcast: vertex -> weight, zero weights omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Broadcast {
    weights: BTreeMap<usize, u32>,
}

impl Broadcast {
    pub fn new() -> Self {
        Broadcast::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut b = Broadcast::new();
        for (v, w) in pairs {
            b.set(v, w);
        }
        b
    }

    pub fn set(&mut self, v: usize, w: u32) {
        if w == 0 {
            self.weights.remove(&v);
        } else {
            self.weights.insert(v, w);
        }
    }

    pub fn get(&self, v: usize) -> u32 {
        self.weights.get(&v).copied().unwrap_or(0)
    }

    /// Towers and their weights, in vertex order.
    pub fn towers(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.weights.iter().map(|(&v, &w)| (v, w))
    }

    pub fn cost(&self) -> u32 {
        self.weights.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, u32> = self
            .weights
            .iter()
            .map(|(&v, &w)| (v.to_string(), w))
            .collect();
        serde_json::json!({ "f": map })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct B {
            f: BTreeMap<String, u32>,
        }
        let b: B = serde_json::from_str(s)?;
        let mut out = Broadcast::new();
        for (k, w) in b.f {
            let v: usize = k.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad vertex key {k:?}"),
            })?;
            out.set(v, w);
        }
        Ok(out)
    }
}

/// A set system (universe `0..n`, list of subsets) for hitting-set inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSystem {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetSystem {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        for s in &sets {
            for &e in s {
                if e >= n {
                    return Err(Error::InvalidArgument(format!(
                        "set element {e} outside universe of size {n}"
                    )));
                }
            }
        }
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        Ok(SetSystem { n, sets })
    }

    /// Text format: a line `n m`, then one line of space-separated element
    /// indices per set (a blank line encodes an empty set).
    pub fn from_text(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let mut it = header.split_whitespace();
        let n: usize = it.next().and_then(|t| t.parse().ok()).ok_or(Error::Parse {
            line: 1,
            msg: "expected universe size".into(),
        })?;
        let m: usize = it.next().and_then(|t| t.parse().ok()).ok_or(Error::Parse {
            line: 1,
            msg: "expected set count".into(),
        })?;
        let mut sets = Vec::with_capacity(m);
        for i in 0..m {
            let line = lines.next().ok_or(Error::Parse {
                line: i + 2,
                msg: format!("expected {m} set lines"),
            })?;
            let mut set = Vec::new();
            for tok in line.split_whitespace() {
                let e: usize = tok.parse().map_err(|_| Error::Parse {
                    line: i + 2,
                    msg: format!("bad element {tok:?}"),
                })?;
                set.push(e);
            }
            sets.push(set);
        }
        SetSystem::new(n, sets)
    }
}

fn check_members(g: &Graph, members: &[usize]) -> Result<()> {
    for &v in members {
        g.check_vertex(v)?;
    }
    Ok(())
}

/// Sorted distances from `v` to the members, unreachable pairs dropped.
fn member_distances(row: &[u32], members: &[usize]) -> Vec<u32> {
    let mut ds: Vec<u32> = members
        .iter()
        .map(|&m| row[m])
        .filter(|&d| d != INF)
        .collect();
    ds.sort_unstable();
    ds
}

/// `|N_s[v] ∩ M| <= s` for every vertex `v` and every `s` in `1..=s_max`
/// (all radii when `s_max` is `None`). Vertices in other components never
/// enter a ball.
fn ball_condition(g: &Graph, members: &[usize], s_max: Option<u32>) -> bool {
    for v in 0..g.n() {
        let row = g.bfs(v);
        let ds = member_distances(&row, members);
        for (i, &d) in ds.iter().enumerate().skip(1) {
            // i members besides the closest lie within distance d, so the
            // ball of radius max(d,1) holds i+1 members; it must hold <= i.
            if d as usize <= i && s_max.map_or(true, |s| i as u32 <= s) {
                return false;
            }
        }
    }
    true
}

/// Checks the full multipacking condition (all radii up to each component's
/// radius; larger radii are implied).
pub fn verify_multipacking(g: &Graph, witness: &PackingWitness) -> Result<bool> {
    check_members(g, &witness.members)?;
    Ok(ball_condition(g, &witness.members, None))
}

/// Checks the ball condition only for radii `1..=r`.
pub fn verify_r_multipacking(g: &Graph, witness: &PackingWitness, r: u32) -> Result<bool> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    check_members(g, &witness.members)?;
    Ok(ball_condition(g, &witness.members, Some(r)))
}

/// Result of checking a broadcast.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BroadcastCheck {
    pub dominating: bool,
    pub cost: u32,
    pub efficient: bool,
}

/// Checks domination (every vertex within distance `f(t)` of some tower `t`)
/// and efficiency (no vertex hears two towers).
pub fn verify_broadcast(g: &Graph, f: &Broadcast) -> Result<BroadcastCheck> {
    let m = Metric::new(g);
    for (v, w) in f.towers() {
        g.check_vertex(v)?;
        if m.diam() != INF && w > m.diam() {
            return Err(Error::InvalidArgument(format!(
                "weight {w} at vertex {v} exceeds diameter {}",
                m.diam()
            )));
        }
    }
    let mut heard = vec![0u32; g.n()];
    for (t, w) in f.towers() {
        for u in 0..g.n() {
            if m.dist(t, u) <= w {
                heard[u] += 1;
            }
        }
    }
    Ok(BroadcastCheck {
        dominating: heard.iter().all(|&h| h > 0),
        cost: f.cost(),
        efficient: heard.iter().all(|&h| h <= 1),
    })
}

struct Budget {
    nodes: u64,
    cap: u64,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Budget { nodes: 0, cap }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            Err(Error::Inconclusive { nodes: self.nodes })
        } else {
            Ok(())
        }
    }
}

/// Search state for the packing branch-and-bound: per-vertex sorted member
/// distances, updated incrementally.
struct PackSearch<'a> {
    g: &'a Graph,
    metric: Metric,
    order: Vec<usize>,
    s_max: Option<u32>,
    chosen: Vec<usize>,
    dists: Vec<Vec<u32>>,
    best: Vec<usize>,
    target: Option<usize>,
    found_target: bool,
    budget: Budget,
}

impl<'a> PackSearch<'a> {
    fn new(g: &'a Graph, s_max: Option<u32>, target: Option<usize>, cap: u64) -> Self {
        let metric = Metric::new(g);
        // Decreasing eccentricity, ties by index.
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(metric.ecc(v)), v));
        PackSearch {
            g,
            metric,
            order,
            s_max,
            chosen: Vec::new(),
            dists: vec![Vec::new(); g.n()],
            best: Vec::new(),
            target,
            found_target: false,
            budget: Budget::new(cap),
        }
    }

    /// Whether adding `u` keeps every ball constraint satisfiable.
    fn feasible_with(&self, u: usize) -> bool {
        for v in 0..self.g.n() {
            let d = self.metric.dist(v, u);
            if d == INF {
                continue;
            }
            let ds = &self.dists[v];
            let pos = ds.partition_point(|&x| x <= d);
            // After inserting d at pos, entry i is ds[i] for i < pos, d at pos,
            // ds[i-1] above. Check the violated-index condition for i >= pos.
            let violated = |idx: usize, val: u32| {
                idx >= 1 && val as usize <= idx && self.s_max.map_or(true, |s| idx as u32 <= s)
            };
            if violated(pos, d) {
                return false;
            }
            for i in pos..ds.len() {
                if violated(i + 1, ds[i]) {
                    return false;
                }
            }
        }
        true
    }

    fn add(&mut self, u: usize) {
        self.chosen.push(u);
        for v in 0..self.g.n() {
            let d = self.metric.dist(v, u);
            if d == INF {
                continue;
            }
            let pos = self.dists[v].partition_point(|&x| x <= d);
            self.dists[v].insert(pos, d);
        }
    }

    fn remove(&mut self, u: usize) {
        self.chosen.pop();
        for v in 0..self.g.n() {
            let d = self.metric.dist(v, u);
            if d == INF {
                continue;
            }
            let pos = self.dists[v].partition_point(|&x| x < d);
            self.dists[v].remove(pos);
        }
    }

    fn run(&mut self, idx: usize) -> Result<()> {
        self.budget.tick()?;
        if self.found_target {
            return Ok(());
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            self.best.sort_unstable();
            if let Some(t) = self.target {
                if self.best.len() >= t {
                    self.found_target = true;
                    return Ok(());
                }
            }
        }
        if idx >= self.order.len() {
            return Ok(());
        }
        // Prune only when the branch cannot improve on the incumbent; the
        // target is an early stop, never a prune (smaller components still
        // contribute toward a global target).
        let remaining = self.order.len() - idx;
        if self.chosen.len() + remaining < self.best.len() + 1 {
            return Ok(());
        }
        let u = self.order[idx];
        if self.feasible_with(u) {
            self.add(u);
            self.run(idx + 1)?;
            self.remove(u);
            if self.found_target {
                return Ok(());
            }
        }
        self.run(idx + 1)
    }
}

/// Maximum multipacking (all radii) or r-multipacking (`r = Some(..)`) by
/// exhaustive branch-and-bound. Disconnected graphs are solved per component
/// and the witnesses are unioned.
pub fn mp_exact_with(g: &Graph, r: Option<u32>, cap: u64) -> Result<(usize, PackingWitness)> {
    if let Some(r) = r {
        if r < 1 {
            return Err(Error::InvalidArgument("r must be at least 1".into()));
        }
    }
    let mut members = Vec::new();
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        let mut search = PackSearch::new(&sub, r, None, cap);
        search.run(0)?;
        members.extend(search.best.iter().map(|&v| comp[v]));
    }
    let size = members.len();
    let mut w = PackingWitness::new(members);
    if let Some(r) = r {
        w = w.with_r(r);
    }
    debug_assert!(match r {
        Some(r) => verify_r_multipacking(g, &w, r).unwrap(),
        None => verify_multipacking(g, &w).unwrap(),
    });
    Ok((size, w))
}

pub fn mp_exact(g: &Graph) -> Result<(usize, PackingWitness)> {
    mp_exact_with(g, None, DEFAULT_BUDGET)
}

/// Decides whether a multipacking (or r-multipacking) of size at least `k`
/// exists, stopping as soon as one is found.
pub fn mp_atleast(g: &Graph, k: usize, r: Option<u32>, cap: u64) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    // Solve per component, accumulating until the target is reached.
    let mut have = 0usize;
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        let need = k - have;
        let mut search = PackSearch::new(&sub, r, Some(need), cap);
        search.run(0)?;
        have += search.best.len();
        if have >= k {
            return Ok(true);
        }
    }
    Ok(have >= k)
}

/// Branch over how the first uncovered vertex gets dominated. With
/// `efficient` set, tower balls must stay pairwise disjoint.
struct BroadcastSearch<'a> {
    g: &'a Graph,
    metric: Metric,
    efficient: bool,
    budget: Budget,
    /// Best coverage-per-weight over all balls: (vertices, weight).
    ratio: (u64, u64),
}

impl<'a> BroadcastSearch<'a> {
    fn new(g: &'a Graph, metric: Metric, efficient: bool, cap: u64) -> Self {
        let mut ratio = (1, 1);
        for v in 0..g.n() {
            for w in 1..=metric.ecc(v) {
                let size = (0..g.n()).filter(|&x| metric.dist(v, x) <= w).count() as u64;
                if size * ratio.1 > ratio.0 * w as u64 {
                    ratio = (size, w as u64);
                }
            }
        }
        BroadcastSearch {
            g,
            metric,
            efficient,
            budget: Budget::new(cap),
            ratio,
        }
    }

    fn solve(&mut self, max_cost: u32) -> Result<Option<Vec<(usize, u32)>>> {
        let mut covered = vec![false; self.g.n()];
        let mut towers = Vec::new();
        self.dfs(&mut covered, &mut towers, max_cost)
    }

    fn dfs(
        &mut self,
        covered: &mut [bool],
        towers: &mut Vec<(usize, u32)>,
        left: u32,
    ) -> Result<Option<Vec<(usize, u32)>>> {
        self.budget.tick()?;
        let uncovered = covered.iter().filter(|&&c| !c).count() as u64;
        if uncovered == 0 {
            return Ok(Some(towers.clone()));
        }
        let u = covered.iter().position(|&c| !c).unwrap();
        if left == 0 {
            return Ok(None);
        }
        // The leftover budget cannot cover the rest even at the best
        // ball-size-to-weight ratio.
        if uncovered * self.ratio.1 > left as u64 * self.ratio.0 {
            return Ok(None);
        }
        for t in 0..self.g.n() {
            let need = self.metric.dist(t, u);
            if need == INF {
                continue;
            }
            let w_lo = need.max(1);
            let w_hi = self.metric.ecc(t).min(left);
            for w in w_lo..=w_hi {
                let ball: Vec<usize> = (0..self.g.n())
                    .filter(|&x| self.metric.dist(t, x) <= w)
                    .collect();
                if self.efficient && ball.iter().any(|&x| covered[x]) {
                    continue;
                }
                let newly: Vec<usize> = ball.iter().copied().filter(|&x| !covered[x]).collect();
                for &x in &newly {
                    covered[x] = true;
                }
                towers.push((t, w));
                let res = self.dfs(covered, towers, left - w)?;
                towers.pop();
                for &x in &newly {
                    covered[x] = false;
                }
                if res.is_some() {
                    return Ok(res);
                }
            }
        }
        Ok(None)
    }
}

fn gamma_b_component(g: &Graph, efficient: bool, cap: u64) -> Result<(u32, Vec<(usize, u32)>)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    if n == 1 {
        return Err(Error::Infeasible(
            "a single-vertex graph admits no dominating broadcast".into(),
        ));
    }
    let metric = Metric::new(g);
    let lb = (metric.diam() + 1).div_ceil(3).max(1);
    let ub = metric.rad();
    let mut search = BroadcastSearch::new(g, metric, efficient, cap);
    for bound in lb..=ub {
        if let Some(towers) = search.solve(bound)? {
            let cost = towers.iter().map(|&(_, w)| w).sum();
            return Ok((cost, towers));
        }
    }
    // The center broadcast always succeeds at bound = rad.
    unreachable!("search must succeed at the radius bound");
}

/// Exact broadcast domination number by iterative deepening over the cost,
/// searching efficient broadcasts (an optimal efficient broadcast always
/// exists). Disconnected graphs are solved per component and summed.
pub fn gamma_b_exact_with(g: &Graph, cap: u64) -> Result<(u32, Broadcast)> {
    let mut f = Broadcast::new();
    let mut total = 0;
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        let (cost, towers) = gamma_b_component(&sub, true, cap)?;
        total += cost;
        for (t, w) in towers {
            f.set(comp[t], w);
        }
    }
    debug_assert!(verify_broadcast(g, &f).unwrap().dominating);
    Ok((total, f))
}

pub fn gamma_b_exact(g: &Graph) -> Result<(u32, Broadcast)> {
    gamma_b_exact_with(g, DEFAULT_BUDGET)
}

/// Broadcast optimum without the efficiency restriction; slow, kept to
/// validate that restricting the search to efficient broadcasts loses
/// nothing.
pub fn gamma_b_unrestricted(g: &Graph, cap: u64) -> Result<u32> {
    let mut total = 0;
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        let (cost, _) = gamma_b_component(&sub, false, cap)?;
        total += cost;
    }
    Ok(total)
}

/// Minimum dominating set by branch-and-bound on the first undominated vertex.
pub fn minimum_dominating(g: &Graph, cap: u64) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    let mut budget = Budget::new(cap);
    let mut best: Option<Vec<usize>> = None;
    let mut chosen: Vec<usize> = Vec::new();
    let mut dominated = vec![0u32; n];
    let max_ball = (0..n).map(|v| g.degree(v) + 1).max().unwrap_or(1);

    fn dfs(
        g: &Graph,
        budget: &mut Budget,
        chosen: &mut Vec<usize>,
        dominated: &mut Vec<u32>,
        best: &mut Option<Vec<usize>>,
        max_ball: usize,
    ) -> Result<()> {
        budget.tick()?;
        let undom = dominated.iter().filter(|&&d| d == 0).count();
        if undom == 0 {
            if best.as_ref().map_or(true, |b| chosen.len() < b.len()) {
                let mut b = chosen.clone();
                b.sort_unstable();
                *best = Some(b);
            }
            return Ok(());
        }
        let lower = chosen.len() + undom.div_ceil(max_ball);
        if let Some(b) = best {
            if lower >= b.len() {
                return Ok(());
            }
        }
        let u = dominated.iter().position(|&d| d == 0).unwrap();
        let mut cands = vec![u];
        cands.extend_from_slice(g.neighbors(u));
        for t in cands {
            chosen.push(t);
            dominated[t] += 1;
            for &w in g.neighbors(t) {
                dominated[w] += 1;
            }
            dfs(g, budget, chosen, dominated, best, max_ball)?;
            chosen.pop();
            dominated[t] -= 1;
            for &w in g.neighbors(t) {
                dominated[w] -= 1;
            }
        }
        Ok(())
    }

    dfs(
        g,
        &mut budget,
        &mut chosen,
        &mut dominated,
        &mut best,
        max_ball,
    )?;
    let best = best.unwrap_or_default();
    Ok((best.len(), best))
}

/// Minimum total dominating set: every vertex needs a neighbor in the set.
pub fn minimum_total_dominating(g: &Graph, cap: u64) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if (0..n).any(|v| g.degree(v) == 0) {
        return Err(Error::Infeasible(
            "graph with an isolated vertex has no total dominating set".into(),
        ));
    }
    let mut budget = Budget::new(cap);
    let mut best: Option<Vec<usize>> = None;
    let mut chosen: Vec<usize> = Vec::new();
    let mut covered = vec![0u32; n];
    let maxdeg = (0..n).map(|v| g.degree(v)).max().unwrap_or(1);

    fn dfs(
        g: &Graph,
        budget: &mut Budget,
        chosen: &mut Vec<usize>,
        covered: &mut Vec<u32>,
        best: &mut Option<Vec<usize>>,
        maxdeg: usize,
    ) -> Result<()> {
        budget.tick()?;
        let uncov = covered.iter().filter(|&&c| c == 0).count();
        if uncov == 0 {
            if best.as_ref().map_or(true, |b| chosen.len() < b.len()) {
                let mut b = chosen.clone();
                b.sort_unstable();
                *best = Some(b);
            }
            return Ok(());
        }
        let lower = chosen.len() + uncov.div_ceil(maxdeg);
        if let Some(b) = best {
            if lower >= b.len() {
                return Ok(());
            }
        }
        let u = covered.iter().position(|&c| c == 0).unwrap();
        for &t in g.neighbors(u) {
            chosen.push(t);
            for &w in g.neighbors(t) {
                covered[w] += 1;
            }
            dfs(g, budget, chosen, covered, best, maxdeg)?;
            chosen.pop();
            for &w in g.neighbors(t) {
                covered[w] -= 1;
            }
        }
        Ok(())
    }

    dfs(g, &mut budget, &mut chosen, &mut covered, &mut best, maxdeg)?;
    let best = best.unwrap();
    Ok((best.len(), best))
}

/// Minimum hitting set of a set system.
pub fn minimum_hitting(sys: &SetSystem, cap: u64) -> Result<(usize, Vec<usize>)> {
    if sys.sets.iter().any(|s| s.is_empty()) {
        return Err(Error::Infeasible(
            "family contains an empty set; no hitting set exists".into(),
        ));
    }
    let mut budget = Budget::new(cap);
    let mut best: Option<Vec<usize>> = None;
    let mut chosen: Vec<usize> = Vec::new();
    let mut in_set = vec![false; sys.n];

    fn dfs(
        sys: &SetSystem,
        budget: &mut Budget,
        chosen: &mut Vec<usize>,
        in_set: &mut Vec<bool>,
        best: &mut Option<Vec<usize>>,
    ) -> Result<()> {
        budget.tick()?;
        let unhit = sys.sets.iter().find(|s| !s.iter().any(|&e| in_set[e]));
        match unhit {
            None => {
                if best.as_ref().map_or(true, |b| chosen.len() < b.len()) {
                    let mut b = chosen.clone();
                    b.sort_unstable();
                    *best = Some(b);
                }
            }
            Some(set) => {
                if let Some(b) = best {
                    if chosen.len() + 1 >= b.len() {
                        return Ok(());
                    }
                }
                for &e in set {
                    chosen.push(e);
                    in_set[e] = true;
                    dfs(sys, budget, chosen, in_set, best)?;
                    chosen.pop();
                    in_set[e] = false;
                }
            }
        }
        Ok(())
    }

    dfs(sys, &mut budget, &mut chosen, &mut in_set, &mut best)?;
    let best = best.unwrap();
    Ok((best.len(), best))
}

/// Whether the system has a hitting set of size at most `k`.
pub fn hitting_atmost(sys: &SetSystem, k: usize, cap: u64) -> Result<bool> {
    match minimum_hitting(sys, cap) {
        Ok((size, _)) => Ok(size <= k),
        Err(Error::Infeasible(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Maximum independent set by include/exclude branch-and-bound.
pub fn maximum_independent(g: &Graph, cap: u64) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    let mut budget = Budget::new(cap);
    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut blocked = vec![0u32; n];

    fn dfs(
        g: &Graph,
        v: usize,
        budget: &mut Budget,
        chosen: &mut Vec<usize>,
        blocked: &mut Vec<u32>,
        best: &mut Vec<usize>,
    ) -> Result<()> {
        budget.tick()?;
        if chosen.len() > best.len() {
            *best = chosen.clone();
            best.sort_unstable();
        }
        if v >= g.n() || chosen.len() + (g.n() - v) <= best.len() {
            return Ok(());
        }
        if blocked[v] == 0 {
            chosen.push(v);
            for &w in g.neighbors(v) {
                blocked[w] += 1;
            }
            dfs(g, v + 1, budget, chosen, blocked, best)?;
            chosen.pop();
            for &w in g.neighbors(v) {
                blocked[w] -= 1;
            }
        }
        dfs(g, v + 1, budget, chosen, blocked, best)
    }

    dfs(g, 0, &mut budget, &mut chosen, &mut blocked, &mut best)?;
    Ok((best.len(), best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Definitional multipacking check, independent of the solver path.
    fn brute_is_multipacking(g: &Graph, members: &[usize]) -> bool {
        let n = g.n() as u32;
        for v in 0..g.n() {
            let dist = g.bfs(v);
            for r in 1..=n {
                let count = members.iter().filter(|&&m| dist[m] <= r).count();
                if count as u32 > r {
                    return false;
                }
            }
        }
        true
    }

    /// Maximum multipacking by full subset enumeration.
    fn brute_mp(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 16);
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if members.len() > best && brute_is_multipacking(g, &members) {
                best = members.len();
            }
        }
        best
    }

    #[test]
    fn verify_examples() {
        let p7 = Graph::path(7);
        assert!(verify_multipacking(&p7, &PackingWitness::new(vec![0, 3, 6])).unwrap());
        let edge = Graph::path(2);
        assert!(!verify_multipacking(&edge, &PackingWitness::new(vec![0, 1])).unwrap());
        assert!(verify_multipacking(&edge, &PackingWitness::new(vec![0])).unwrap());
        assert!(verify_multipacking(&p7, &PackingWitness::new(vec![9])).is_err());
    }

    #[test]
    fn r_multipacking_examples() {
        let p7 = Graph::path(7);
        // Pairwise distance >= 3 is exactly the r = 1 condition.
        let w = PackingWitness::new(vec![0, 3, 6]);
        assert!(verify_r_multipacking(&p7, &w, 1).unwrap());
        let w2 = PackingWitness::new(vec![0, 2]);
        assert!(!verify_r_multipacking(&p7, &w2, 1).unwrap());
        // r = rad agrees with the full verifier.
        let m = crate::graph::Metric::new(&p7);
        for mask in 0u32..(1 << 7) {
            let members: Vec<usize> = (0..7).filter(|&v| mask >> v & 1 == 1).collect();
            let w = PackingWitness::new(members);
            assert_eq!(
                verify_r_multipacking(&p7, &w, m.rad()).unwrap(),
                verify_multipacking(&p7, &w).unwrap()
            );
        }
    }

    #[test]
    fn mp_exact_frozen_values() {
        // Frozen from brute-force subset enumeration.
        assert_eq!(brute_mp(&Graph::cycle(5)), 1);
        assert_eq!(brute_mp(&Graph::path(7)), 3);
        assert_eq!(brute_mp(&Graph::cycle(8)), 2);

        assert_eq!(mp_exact(&Graph::cycle(5)).unwrap().0, 1);
        assert_eq!(mp_exact(&Graph::path(7)).unwrap().0, 3);
        assert_eq!(mp_exact(&Graph::cycle(8)).unwrap().0, 2);
        assert_eq!(mp_exact(&Graph::complete(4)).unwrap().0, 1);
    }

    #[test]
    fn mp_exact_matches_brute_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let (size, w) = mp_exact(&g).unwrap();
            assert!(verify_multipacking(&g, &w).unwrap());
            assert_eq!(size, brute_mp(&g), "on {:?}", g);
        }
    }

    #[test]
    fn mp_witness_pairwise_distance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(2..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let (_, w) = mp_exact(&g).unwrap();
            let m = crate::graph::Metric::new(&g);
            for (i, &a) in w.members.iter().enumerate() {
                for &b in &w.members[i + 1..] {
                    assert!(m.dist(a, b) >= 3, "members {a},{b} too close in {:?}", g);
                }
            }
        }
    }

    #[test]
    fn broadcast_verification() {
        let p7 = Graph::path(7);
        // Center at full radius dominates.
        let f = Broadcast::from_pairs([(3, 3)]);
        let chk = verify_broadcast(&p7, &f).unwrap();
        assert!(chk.dominating && chk.efficient);
        assert_eq!(chk.cost, 3);
        // Zero broadcast does not dominate.
        let chk = verify_broadcast(&p7, &Broadcast::new()).unwrap();
        assert!(!chk.dominating);
        // Weight above the diameter is rejected.
        assert!(verify_broadcast(&p7, &Broadcast::from_pairs([(0, 7)])).is_err());
    }

    #[test]
    fn gamma_b_frozen_values() {
        assert_eq!(gamma_b_exact(&Graph::path(7)).unwrap().0, 3);
        assert_eq!(gamma_b_exact(&Graph::cycle(5)).unwrap().0, 2);
        assert_eq!(gamma_b_exact(&Graph::complete(4)).unwrap().0, 1);
        assert_eq!(gamma_b_exact(&Graph::cycle(9)).unwrap().0, 3);
    }

    #[test]
    fn gamma_b_matches_unrestricted_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut done = 0;
        while done < 40 {
            let n = rng.gen_range(2..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let (eff, f) = gamma_b_exact(&g).unwrap();
            assert!(verify_broadcast(&g, &f).unwrap().dominating);
            assert_eq!(eff, gamma_b_unrestricted(&g, DEFAULT_BUDGET).unwrap());
            done += 1;
        }
    }

    #[test]
    fn set_oracles() {
        assert_eq!(minimum_dominating(&Graph::cycle(4), 1 << 20).unwrap().0, 2);
        let (size, w) = minimum_total_dominating(&Graph::path(4), 1 << 20).unwrap();
        assert_eq!((size, w), (2, vec![1, 2]));
        let sys = SetSystem::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let (size, w) = minimum_hitting(&sys, 1 << 20).unwrap();
        assert_eq!((size, w), (1, vec![1]));
        let sys = SetSystem::new(3, vec![vec![0], vec![]]).unwrap();
        assert!(matches!(
            minimum_hitting(&sys, 1 << 20),
            Err(Error::Infeasible(_))
        ));
        let iso = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            minimum_total_dominating(&iso, 1 << 20),
            Err(Error::Infeasible(_))
        ));
        assert_eq!(maximum_independent(&Graph::cycle(5), 1 << 20).unwrap().0, 2);
        assert_eq!(
            maximum_independent(&Graph::complete(4), 1 << 20).unwrap().0,
            1
        );
    }

    #[test]
    fn sandwich_on_random_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut done = 0;
        while done < 50 {
            let n = rng.gen_range(2..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let m = crate::graph::Metric::new(&g);
            let (mp, _) = mp_exact(&g).unwrap();
            let (gb, _) = gamma_b_exact(&g).unwrap();
            let (dom, _) = minimum_dominating(&g, 1 << 22).unwrap();
            let lb = (m.diam() + 1).div_ceil(3) as usize;
            assert!(lb <= mp);
            assert!(mp <= gb as usize);
            assert!(gb <= (dom as u32).min(m.rad()));
            assert!(gb as usize <= 2 * mp + 3);
            done += 1;
        }
    }

    #[test]
    fn disconnected_graphs_solve_per_component() {
        // Two paths on three vertices: values add up across components.
        let g = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let (mp, w) = mp_exact(&g).unwrap();
        assert_eq!(mp, 2);
        assert!(verify_multipacking(&g, &w).unwrap());
        let (gb, f) = gamma_b_exact(&g).unwrap();
        assert_eq!(gb, 2);
        assert!(verify_broadcast(&g, &f).unwrap().dominating);
        // An isolated vertex admits no dominating broadcast.
        let iso = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(gamma_b_exact(&iso), Err(Error::Infeasible(_))));
        assert_eq!(mp_exact(&iso).unwrap().0, 2);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = Graph::cycle(12);
        match mp_exact_with(&g, None, 5) {
            Err(Error::Inconclusive { .. }) => {}
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn witness_json_round_trip() {
        let w = PackingWitness::new(vec![3, 1, 4]);
        let s = w.to_json().to_string();
        assert_eq!(s, "{\"M\":[1,3,4]}");
        assert_eq!(PackingWitness::from_json_str(&s).unwrap(), w);
        let f = Broadcast::from_pairs([(2, 3), (0, 1)]);
        let s = f.to_json().to_string();
        assert_eq!(s, "{\"f\":{\"0\":1,\"2\":3}}");
        assert_eq!(Broadcast::from_json_str(&s).unwrap(), f);
    }
}
