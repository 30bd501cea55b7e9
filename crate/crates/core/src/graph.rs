//! Immutable simple-graph representation, mixed vertex/edge fault sets, and
//! the isolated-vertex count that drives the fractional-matching criterion.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Canonical undirected edge, stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Orders the endpoints of an edge canonically.
pub fn canonical_edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Immutable after construction: edges are deduplicated canonical pairs and
/// each adjacency list is sorted, so every derived report is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Duplicate pairs
    /// collapse to a single edge; endpoint order does not matter.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::InvalidEdge { u, v });
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        bound: vertex_count,
                    });
                }
            }
            edges.push(canonical_edge(u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n: vertex_count,
            edges,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&canonical_edge(u, v)).is_ok()
    }

    /// Minimum degree over all vertices.
    pub fn min_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok((0..self.n).map(|v| self.degree(v)).min().unwrap())
    }

    /// A vertex of minimum degree (the smallest such id).
    pub fn min_degree_vertex(&self) -> Result<usize> {
        let d = self.min_degree()?;
        Ok((0..self.n).find(|&v| self.degree(v) == d).unwrap())
    }

    /// Counts the vertices of `G - S` with no neighbor outside `S`, i.e.
    /// `i(G - S)`. Degree-zero vertices outside `S` count as isolated.
    pub fn isolated_count(&self, s: &[usize]) -> Result<usize> {
        let mut in_s = vec![false; self.n];
        for &v in s {
            if v >= self.n {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    bound: self.n,
                });
            }
            in_s[v] = true;
        }
        Ok((0..self.n)
            .filter(|&v| !in_s[v] && self.adj[v].iter().all(|&u| in_s[u]))
            .count())
    }

    /// Deletes the faults of `F`, relabels the surviving vertices densely in
    /// their original order, and returns the new graph together with the
    /// relabel map (`old_label(new) = map[new]`).
    pub fn apply_faults(&self, faults: &FaultSet) -> Result<FaultedGraph> {
        faults.validate(self)?;
        let mut deleted = vec![false; self.n];
        for &v in &faults.vertices {
            deleted[v] = true;
        }
        let mut new_id = vec![usize::MAX; self.n];
        let mut old_labels = Vec::with_capacity(self.n - faults.vertices.len());
        for v in 0..self.n {
            if !deleted[v] {
                new_id[v] = old_labels.len();
                old_labels.push(v);
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            if deleted[u] || deleted[v] || faults.edges.binary_search(&(u, v)).is_ok() {
                continue;
            }
            edges.push((new_id[u], new_id[v]));
        }
        let graph = Graph::new(old_labels.len(), &edges)?;
        Ok(FaultedGraph { graph, old_labels })
    }

    /// Ids of vertices with degree zero.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// Serializes to the edge-list text format: a header line `n m` followed
    /// by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    /// Parses the edge-list text format. The first non-comment line is
    /// `n m`; each of the next `m` non-comment lines is `u v`. Lines starting
    /// with `#` are comments.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing 'n m' header line".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parse_field(parts.next(), "vertex count")?;
        let m: usize = parse_field(parts.next(), "edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {} edge lines", m)))?;
            let mut parts = line.split_whitespace();
            let u: usize = parse_field(parts.next(), "edge endpoint")?;
            let v: usize = parse_field(parts.next(), "edge endpoint")?;
            edges.push((u, v));
        }
        Graph::new(n, &edges)
    }
}

fn parse_field(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing {}", what)))?
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {}: not a non-negative integer", what)))
}

/// Result of deleting a fault set: the surviving graph with vertices
/// relabeled densely, plus the order-preserving relabel map.
#[derive(Clone, Debug)]
pub struct FaultedGraph {
    pub graph: Graph,
    /// `old_labels[new] = old`; ascending.
    pub old_labels: Vec<usize>,
}

/// A mixed set of vertices and edges to delete, kept in canonical sorted
/// order. The set is *dominated* when it lists an edge incident to one of
/// its own vertices (deleting the vertex already deletes the edge).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaultSet {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl FaultSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| canonical_edge(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        FaultSet { vertices, edges }
    }

    pub fn empty() -> Self {
        FaultSet {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::new([], edges)
    }

    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    /// True when some listed edge has an endpoint in the vertex part.
    pub fn is_dominated(&self) -> bool {
        self.edges.iter().any(|&(u, v)| {
            self.vertices.binary_search(&u).is_ok() || self.vertices.binary_search(&v).is_ok()
        })
    }

    /// Checks that every listed element belongs to `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &v in &self.vertices {
            if v >= g.vertex_count() {
                return Err(Error::InvalidFault(format!(
                    "vertex {} is not in the graph",
                    v
                )));
            }
        }
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidFault(format!(
                    "edge ({}, {}) is not in the graph",
                    u, v
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for FaultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for &v in &self.vertices {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "v{}", v)?;
            first = false;
        }
        for &(u, v) in &self.edges {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", u, v)?;
            first = false;
        }
        write!(f, "}}")
    }
}
