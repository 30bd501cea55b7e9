//! Matching oracles: maximum matching in general graphs (augmenting paths
//! with blossom contraction), perfect / almost-perfect matching existence,
//! and fractional perfect matchings computed through the bipartite double
//! cover with exact half-integral witnesses.
//!
//! Two independent routes decide fractional perfect matching existence: the
//! double-cover matching here, and `fractional_pm_bruteforce`, which scans
//! every vertex subset `S` and checks that `G - S` never has more than `|S|`
//! isolated vertices. The test suite holds the two routes equal.

use crate::error::{Error, Result};
use crate::graph::{canonical_edge, Edge, Graph};
use std::collections::{BTreeMap, VecDeque};

const NONE: usize = usize::MAX;

/// Outcome of a maximum-matching computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    pub size: usize,
    /// Canonical sorted list of matched edges, pairwise vertex-disjoint.
    pub matched_pairs: Vec<Edge>,
    /// True iff the matching covers every vertex.
    pub covers_all: bool,
    /// True iff `|V|` is odd and exactly one vertex is exposed.
    pub covers_all_but_one: bool,
}

/// Maximum-cardinality matching. Deterministic: vertices are scanned in
/// index order and adjacency lists are sorted at construction.
pub fn max_matching(g: &Graph) -> MatchingResult {
    let n = g.vertex_count();
    let mut matcher = Matcher::new();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let alive = vec![true; n];
    let mut mate = vec![NONE; n];
    let size = matcher.solve(&adj, &alive, &mut mate);
    let mut matched_pairs: Vec<Edge> = (0..n)
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    matched_pairs.sort_unstable();
    MatchingResult {
        size,
        matched_pairs,
        covers_all: 2 * size == n,
        covers_all_but_one: n % 2 == 1 && 2 * size == n - 1,
    }
}

/// True iff the graph has a perfect matching or, at odd order, an
/// almost-perfect matching: `max_matching >= floor(|V| / 2)`.
pub fn has_pm_or_apm(g: &Graph) -> bool {
    max_matching(g).size >= g.vertex_count() / 2
}

/// Decides fractional perfect matching existence without building a witness.
pub fn has_fractional_pm(g: &Graph) -> bool {
    let n = g.vertex_count();
    let adj = double_cover_adjacency(g);
    let alive = vec![true; 2 * n];
    let mut mate = vec![NONE; 2 * n];
    Matcher::new().solve(&adj, &alive, &mut mate) == n
}

/// Numerator of an edge weight over denominator 2, so values are exactly
/// 0, 1/2, or 1. No floating point anywhere.
pub type HalfNumerator = u8;

/// A half-integral fractional perfect matching: every vertex's incident
/// weights sum to exactly 1, weight-1 edges form a matching, and weight-1/2
/// edges form vertex-disjoint odd cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalMatching {
    weights: BTreeMap<Edge, HalfNumerator>,
}

impl FractionalMatching {
    /// Weight numerator of an edge (0, 1, or 2 over denominator 2).
    pub fn numerator(&self, u: usize, v: usize) -> HalfNumerator {
        self.weights.get(&canonical_edge(u, v)).copied().unwrap_or(0)
    }

    /// All edges with their numerators, in canonical order.
    pub fn weights(&self) -> impl Iterator<Item = (Edge, HalfNumerator)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    /// Sum of numerators; equals `|V|` exactly when the witness is valid.
    pub fn total_numerator(&self) -> u64 {
        self.weights.values().map(|&w| w as u64).sum()
    }

    /// Checks every witness invariant against the host graph, exactly.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.weights.len() != g.edge_count()
            || !self.weights.keys().eq(g.edges().iter())
        {
            return Err("weight domain differs from the host edge set".into());
        }
        let n = g.vertex_count();
        let mut vertex_sum = vec![0u64; n];
        for (&(u, v), &w) in &self.weights {
            if w > 2 {
                return Err(format!("edge ({u},{v}) has numerator {w} > 2"));
            }
            vertex_sum[u] += w as u64;
            vertex_sum[v] += w as u64;
        }
        for v in 0..n {
            if vertex_sum[v] != 2 {
                return Err(format!(
                    "vertex {v} has incident weight {}/2, expected 1",
                    vertex_sum[v]
                ));
            }
        }
        if self.total_numerator() != n as u64 {
            return Err(format!(
                "total weight {}/2 differs from |V|/2 = {n}/2",
                self.total_numerator()
            ));
        }
        // Half-weight edges must decompose into vertex-disjoint odd cycles.
        let mut half_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (&(u, v), &w) in &self.weights {
            if w == 1 {
                half_adj[u].push(v);
                half_adj[v].push(u);
            }
        }
        let mut seen = vec![false; n];
        for start in 0..n {
            if half_adj[start].is_empty() || seen[start] {
                continue;
            }
            if half_adj[start].len() != 2 {
                return Err(format!("vertex {start} has {} half edges", half_adj[start].len()));
            }
            let mut len = 0usize;
            let (mut prev, mut cur) = (start, half_adj[start][0]);
            seen[start] = true;
            while cur != start {
                if half_adj[cur].len() != 2 {
                    return Err(format!("vertex {cur} has {} half edges", half_adj[cur].len()));
                }
                seen[cur] = true;
                let next = if half_adj[cur][0] == prev {
                    half_adj[cur][1]
                } else {
                    half_adj[cur][0]
                };
                prev = cur;
                cur = next;
                len += 1;
            }
            if (len + 1) % 2 == 0 {
                return Err(format!("half edges form an even cycle of length {}", len + 1));
            }
        }
        Ok(())
    }

    /// Serializes as `{"edges": [[u, v, "0" | "1/2" | "1"], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .weights
            .iter()
            .map(|(&(u, v), &w)| {
                let label = match w {
                    0 => "0",
                    1 => "1/2",
                    _ => "1",
                };
                serde_json::json!([u, v, label])
            })
            .collect();
        serde_json::json!({ "edges": edges })
    }
}

/// Fractional perfect matching witness, if one exists.
///
/// Route: build the bipartite double cover `H` on classes `V'` and `V''`
/// with edges `u'v''` and `v'u''` for each edge `uv`, compute a maximum
/// matching of `H` with the same blossom routine, and read the weight of
/// `uv` as half the number of matched cover edges above it. A fractional
/// perfect matching exists iff the cover matching is perfect. Half-weight
/// cycles of even length are then re-rounded to alternating 0/1 so the
/// witness meets the odd-cycle normal form.
pub fn fractional_pm(g: &Graph) -> Option<FractionalMatching> {
    let n = g.vertex_count();
    let adj = double_cover_adjacency(g);
    let alive = vec![true; 2 * n];
    let mut mate = vec![NONE; 2 * n];
    if Matcher::new().solve(&adj, &alive, &mut mate) != n {
        return None;
    }
    let mut weights: BTreeMap<Edge, HalfNumerator> = BTreeMap::new();
    for &(u, v) in g.edges() {
        let mut num = 0;
        if mate[u] == n + v {
            num += 1;
        }
        if mate[v] == n + u {
            num += 1;
        }
        weights.insert((u, v), num);
    }
    normalize_half_cycles(n, &mut weights);
    Some(FractionalMatching { weights })
}

/// Rounds even half-weight cycles to alternating 0/1. Odd cycles stay as
/// all-1/2 (they cannot be rounded integrally).
fn normalize_half_cycles(n: usize, weights: &mut BTreeMap<Edge, HalfNumerator>) {
    let mut half_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (&(u, v), &w) in weights.iter() {
        if w == 1 {
            half_adj[u].push(v);
            half_adj[v].push(u);
        }
    }
    for list in &mut half_adj {
        list.sort_unstable();
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] || half_adj[start].is_empty() {
            continue;
        }
        debug_assert_eq!(half_adj[start].len(), 2);
        let mut cycle = vec![start];
        seen[start] = true;
        let (mut prev, mut cur) = (start, half_adj[start][0]);
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = if half_adj[cur][0] == prev {
                half_adj[cur][1]
            } else {
                half_adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        if cycle.len() % 2 == 0 {
            for (i, pair) in cycle.iter().zip(cycle.iter().cycle().skip(1)).enumerate() {
                let e = canonical_edge(*pair.0, *pair.1);
                weights.insert(e, if i % 2 == 0 { 2 } else { 0 });
                if i + 1 == cycle.len() {
                    break;
                }
            }
        }
    }
}

/// Adjacency of the bipartite double cover: vertex `u` is `u'`, vertex
/// `n + u` is `u''`, and each edge `uv` contributes `u'v''` and `v'u''`.
pub(crate) fn double_cover_adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); 2 * n];
    for v in 0..n {
        adj[v] = g.neighbors(v).iter().map(|&u| n + u).collect();
        adj[n + v] = g.neighbors(v).to_vec();
    }
    adj
}

/// Default vertex cap for the subset-scan oracle; `2^22` scans stay well
/// under a minute.
pub const BRUTEFORCE_CAP: usize = 22;

/// Reference oracle: `G` has a fractional perfect matching iff
/// `i(G - S) <= |S|` for every `S` subseteq `V(G)`.
pub fn fractional_pm_bruteforce(g: &Graph) -> Result<bool> {
    fractional_pm_bruteforce_with_cap(g, BRUTEFORCE_CAP)
}

/// Subset-scan oracle with an explicit cap (hard limit 63 vertices).
pub fn fractional_pm_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n > cap.min(63) {
        return Err(Error::TooLarge {
            vertices: n,
            cap: cap.min(63),
        });
    }
    let adj_mask: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    for s in 0u64..(1u64 << n) {
        let mut isolated = 0u32;
        for v in 0..n {
            if s & (1 << v) == 0 && adj_mask[v] & !s == 0 {
                isolated += 1;
            }
        }
        if isolated > s.count_ones() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximum matching with blossom contraction, with reusable scratch space.
///
/// `solve` takes an adjacency structure, an aliveness mask (dead vertices
/// are ignored entirely; their adjacency entries must already be absent),
/// and a mate array that may be pre-seeded with any valid matching of the
/// same restricted graph. It augments from every exposed vertex in index
/// order until no augmenting path remains, and returns the number of
/// matched pairs. O(V^3); intended for graphs up to a couple thousand
/// vertices.
pub(crate) struct Matcher {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Matcher {
    pub fn new() -> Self {
        Matcher {
            parent: Vec::new(),
            base: Vec::new(),
            used: Vec::new(),
            blossom: Vec::new(),
            on_path: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    pub fn solve(&mut self, adj: &[Vec<usize>], alive: &[bool], mate: &mut [usize]) -> usize {
        let n = adj.len();
        self.parent.resize(n, NONE);
        self.base.resize(n, 0);
        self.used.resize(n, false);
        self.blossom.resize(n, false);
        self.on_path.resize(n, false);
        for v in 0..n {
            if alive[v] && mate[v] == NONE {
                if let Some(finish) = self.find_path(adj, alive, mate, v) {
                    augment(&self.parent, mate, finish);
                }
            }
        }
        (0..n).filter(|&v| alive[v] && mate[v] != NONE).count() / 2
    }

    fn find_path(
        &mut self,
        adj: &[Vec<usize>],
        alive: &[bool],
        mate: &[usize],
        start: usize,
    ) -> Option<usize> {
        let n = adj.len();
        for v in 0..n {
            self.parent[v] = NONE;
            self.used[v] = false;
            self.base[v] = v;
        }
        self.queue.clear();
        self.used[start] = true;
        self.queue.push_back(start);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..adj[v].len() {
                let to = adj[v][i];
                if !alive[to] || self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == start || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    // Odd cycle: contract the blossom at the lca of v and to.
                    let cur_base = self.lca(mate, v, to);
                    for u in 0..n {
                        self.blossom[u] = false;
                    }
                    self.mark_path(mate, v, cur_base, to);
                    self.mark_path(mate, to, cur_base, v);
                    for u in 0..n {
                        if alive[u] && self.blossom[self.base[u]] {
                            self.base[u] = cur_base;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    fn lca(&mut self, mate: &[usize], a: usize, b: usize) -> usize {
        for v in 0..self.on_path.len() {
            self.on_path[v] = false;
        }
        let mut a = self.base[a];
        loop {
            self.on_path[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.base[self.parent[mate[a]]];
        }
        let mut b = self.base[b];
        while !self.on_path[b] {
            b = self.base[self.parent[mate[b]]];
        }
        b
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, cur_base: usize, mut child: usize) {
        while self.base[v] != cur_base {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }
}

fn augment(parent: &[usize], mate: &mut [usize], finish: usize) {
    let mut v = finish;
    while v != NONE {
        let pv = parent[v];
        let ppv = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = ppv;
    }
}
