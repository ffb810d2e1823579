//! Simple undirected graphs and their metric primitives: BFS distances,
//! eccentricities, balls, isometric and diametral paths, structural
//! classification (bipartite / chordal / cactus / claw-free / regular) and
//! four-point hyperbolicity.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance value for unreachable pairs.
pub const INF: u32 = u32::MAX;

/// A simple undirected graph on vertices `0..n`.
///
/// No loops, no multi-edges; both are rejected at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        };
        let mut seen = std::collections::HashSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} {}",
                    e.0, e.1
                )));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edges.push(e);
        }
        for a in &mut g.adj {
            a.sort_unstable();
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    /// Path on `n` vertices `0-1-2-...`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    /// BFS distances from `src`; `INF` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        self.bfs_with_parents(src).0
    }

    /// BFS distances and parent links (parent of the root is itself).
    /// Neighbor lists are sorted, so parents are the lowest-index choice.
    pub fn bfs_with_parents(&self, src: usize) -> (Vec<u32>, Vec<usize>) {
        let mut dist = vec![INF; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut q = VecDeque::new();
        dist[src] = 0;
        parent[src] = src;
        q.push_back(src);
        while let Some(u) = q.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == INF {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs(0).iter().all(|&d| d != INF)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut verts = vec![s];
            comp[s] = id;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        verts.push(w);
                        q.push_back(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push(verts);
        }
        out
    }

    /// Induced subgraph on `verts`; returns the graph and the map old -> new index.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        (Graph::new(verts.len(), edges).unwrap(), index)
    }

    /// Parses the plain text format: a line `n m`, then `m` lines `u v`.
    pub fn from_text(s: &str) -> Result<Self> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (lno, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, lno: usize| -> Result<usize> {
            tok.ok_or(Error::Parse {
                line: lno + 1,
                msg: "expected a number".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: lno + 1,
                msg: "expected a number".into(),
            })
        };
        let n = parse_num(it.next(), lno)?;
        let m = parse_num(it.next(), lno)?;
        let mut edges = Vec::with_capacity(m);
        let mut line_of_edge = Vec::with_capacity(m);
        for _ in 0..m {
            let (lno, line) = lines.next().ok_or(Error::Parse {
                line: lno + 1,
                msg: format!("expected {m} edge lines"),
            })?;
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), lno)?;
            let v = parse_num(it.next(), lno)?;
            edges.push((u, v));
            line_of_edge.push(lno + 1);
        }
        Graph::new(n, edges.iter().copied()).map_err(|e| match e {
            Error::InvalidGraph(_) | Error::VertexOutOfRange { .. } => {
                // Re-run edge insertion to locate the offending line.
                let mut seen = std::collections::HashSet::new();
                for (i, &(u, v)) in edges.iter().enumerate() {
                    let bad = u >= n || v >= n || u == v || !seen.insert((u.min(v), u.max(v)));
                    if bad {
                        return Error::Parse {
                            line: line_of_edge[i],
                            msg: format!("bad edge {u} {v}"),
                        };
                    }
                }
                e
            }
            other => other,
        })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let gj: GraphJson = serde_json::from_str(s)?;
        Graph::new(gj.n, gj.edges)
    }

    /// Accepts either the text format or the JSON object form.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Self::from_json_str(s)
        } else {
            Self::from_text(s)
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "edges": self.edges })
    }
}

/// All-pairs hop distances plus the derived radius / diameter / center data.
#[derive(Debug, Clone)]
pub struct Metric {
    dist: Vec<Vec<u32>>,
    ecc: Vec<u32>,
    rad: u32,
    diam: u32,
    centers: Vec<usize>,
}

impl Metric {
    /// Repeated BFS; `INF` is recorded between distinct components, in which
    /// case eccentricities, radius and diameter are all `INF`.
    pub fn new(g: &Graph) -> Metric {
        let n = g.n();
        let dist: Vec<Vec<u32>> = (0..n).map(|v| g.bfs(v)).collect();
        let ecc: Vec<u32> = dist
            .iter()
            .map(|row| row.iter().copied().max().unwrap_or(0))
            .collect();
        let rad = ecc.iter().copied().min().unwrap_or(0);
        let diam = ecc.iter().copied().max().unwrap_or(0);
        let centers = (0..n).filter(|&v| ecc[v] == rad).collect();
        Metric {
            dist,
            ecc,
            rad,
            diam,
            centers,
        }
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u]
    }

    pub fn ecc(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn rad(&self) -> u32 {
        self.rad
    }

    pub fn diam(&self) -> u32 {
        self.diam
    }

    pub fn centers(&self) -> &[usize] {
        &self.centers
    }
}

/// Closed ball `{ u : d(v,u) <= r }`, sorted.
pub fn ball(g: &Graph, v: usize, r: u32) -> Result<Vec<usize>> {
    g.check_vertex(v)?;
    let dist = g.bfs(v);
    Ok((0..g.n()).filter(|&u| dist[u] <= r).collect())
}

/// A path given by its vertex sequence; consecutive vertices are adjacent
/// and all vertices are distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Path> {
        if verts.is_empty() {
            return Err(Error::NotAPath("empty vertex sequence".into()));
        }
        for &v in &verts {
            g.check_vertex(v)?;
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &verts {
            if !seen.insert(v) {
                return Err(Error::NotAPath(format!("repeated vertex {v}")));
            }
        }
        for w in verts.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::NotAPath(format!(
                    "{} and {} not adjacent",
                    w[0], w[1]
                )));
            }
        }
        Ok(Path(verts))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }
}

/// True iff the path length equals the distance of its endpoints (which
/// forces every sub-segment to be a shortest path as well).
pub fn is_isometric_path(g: &Graph, p: &Path) -> Result<bool> {
    let dist = g.bfs(p.first());
    Ok(dist[p.last()] as usize == p.len())
}

/// A diametral path: isometric, of length `diam(G)`. Endpoints are the
/// lexicographically smallest pair at diameter distance; the path follows
/// BFS parents, so the result is deterministic.
pub fn diametral_path(g: &Graph) -> Result<Path> {
    let m = Metric::new(g);
    if m.diam() == INF || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let mut ends = None;
    'outer: for u in 0..g.n() {
        for v in u..g.n() {
            if m.dist(u, v) == m.diam() {
                ends = Some((u, v));
                break 'outer;
            }
        }
    }
    let (u, v) = ends.unwrap();
    let (_, parent) = g.bfs_with_parents(u);
    let mut verts = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        verts.push(cur);
    }
    verts.reverse();
    Path::new(g, verts)
}

/// Structural classification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub connected: bool,
    pub bipartite: bool,
    pub chordal: bool,
    pub cactus: bool,
    pub claw_free: bool,
    pub regular_degree: Option<usize>,
}

pub fn classify(g: &Graph) -> ClassFlags {
    ClassFlags {
        connected: g.is_connected(),
        bipartite: is_bipartite(g),
        chordal: is_chordal(g),
        cactus: is_cactus(g),
        claw_free: is_claw_free(g),
        regular_degree: regular_degree(g),
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Maximum-cardinality-search ordering; its reverse is a perfect elimination
/// ordering iff the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        picked[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !picked[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let order = mcs_order(g);
    // Eliminate in reverse pick order; check the perfect elimination property.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Vertex eliminated earlier = picked later. For each v, its picked-earlier
    // neighbors must form a set whose latest member dominates the rest.
    for &v in &order {
        let mut earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        if earlier.len() <= 1 {
            continue;
        }
        earlier.sort_by_key(|&w| std::cmp::Reverse(pos[w]));
        let u0 = earlier[0];
        for &w in &earlier[1..] {
            if !g.has_edge(u0, w) {
                return false;
            }
        }
    }
    true
}

/// Biconnected components as edge lists.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut comps = Vec::new();
    let mut estack: Vec<(usize, usize)> = Vec::new();

    // Iterative DFS; frame = (vertex, parent, next neighbor index).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.neighbors(u).len() {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    estack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    estack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = estack.pop() {
                            comp.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        comps.push(comp);
                    }
                }
            }
        }
    }
    comps
}

/// Connected, and every block is a single edge or a chordless cycle.
pub fn is_cactus(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    for comp in biconnected_components(g) {
        if comp.len() <= 1 {
            continue;
        }
        let mut verts: Vec<usize> = comp.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if comp.len() != verts.len() {
            return false;
        }
    }
    true
}

pub fn is_claw_free(g: &Graph) -> bool {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in nb.iter().skip(j + 1) {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn regular_degree(g: &Graph) -> Option<usize> {
    if g.n() == 0 {
        return None;
    }
    let d = g.degree(0);
    (1..g.n()).all(|v| g.degree(v) == d).then_some(d)
}

/// A half-integer, stored as twice its value. Hyperbolicity values live here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub fn from_halves(h: u32) -> HalfInt {
        HalfInt(h)
    }

    pub fn halves(self) -> u32 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

/// Gromov hyperbolicity by the four-point condition: over all vertex
/// quadruples, half the difference of the two larger of the three pairwise
/// distance sums. Brute force over all quadruples.
pub fn hyperbolicity(g: &Graph) -> Result<HalfInt> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let m = Metric::new(g);
    let mut best = 0u32;
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                for x in w + 1..n {
                    let s1 = m.dist(u, v) + m.dist(w, x);
                    let s2 = m.dist(u, w) + m.dist(v, x);
                    let s3 = m.dist(u, x) + m.dist(v, w);
                    let hi = s1.max(s2).max(s3);
                    let mid = s1 + s2 + s3 - hi - s1.min(s2).min(s3);
                    best = best.max(hi - mid);
                }
            }
        }
    }
    Ok(HalfInt(best))
}
