//! Generators for the graph families under study: cycles, complete graphs,
//! paths, Cartesian products, and n-dimensional torus networks.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;
use std::path::PathBuf;

/// A parsed description of a graph to synthesize.
///
/// Grammar accepted by [`GeneratorSpec::parse`]:
/// `cycle:5`, `complete:6`, `path:4`, `torus:5,5,5`,
/// `cartesian(<spec>,<spec>)`, `file:PATH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Torus(Vec<usize>),
    Cartesian(Box<GeneratorSpec>, Box<GeneratorSpec>),
    File(PathBuf),
}

impl GeneratorSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("cartesian(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::InvalidSpec(format!("unbalanced parentheses in '{text}'")))?;
            // Torus parameters contain commas, so the argument separator is
            // whichever top-level comma splits into two parseable specs.
            for i in top_level_commas(inner) {
                let (left, right) = inner.split_at(i);
                if let (Ok(a), Ok(b)) = (Self::parse(left), Self::parse(&right[1..])) {
                    return Ok(GeneratorSpec::Cartesian(Box::new(a), Box::new(b)));
                }
            }
            return Err(Error::InvalidSpec(format!(
                "cartesian needs two comma-separated specs in '{text}'"
            )));
        }
        let (kind, args) = text
            .split_once(':')
            .ok_or_else(|| Error::InvalidSpec(format!("missing ':' in '{text}'")))?;
        match kind {
            "cycle" => Ok(GeneratorSpec::Cycle(parse_len(args)?)),
            "complete" => Ok(GeneratorSpec::Complete(parse_len(args)?)),
            "path" => Ok(GeneratorSpec::Path(parse_len(args)?)),
            "torus" => {
                let dims = args
                    .split(',')
                    .map(parse_len)
                    .collect::<Result<Vec<usize>>>()?;
                Ok(GeneratorSpec::Torus(dims))
            }
            "file" => Ok(GeneratorSpec::File(PathBuf::from(args))),
            other => Err(Error::InvalidSpec(format!("unknown generator kind '{other}'"))),
        }
    }

    /// Validates the parameter invariants for this spec.
    pub fn validate(&self) -> Result<()> {
        match self {
            GeneratorSpec::Cycle(k) if *k < 3 => {
                Err(Error::InvalidSpec(format!("cycle length {k} < 3")))
            }
            GeneratorSpec::Path(k) if *k < 1 => Err(Error::InvalidSpec("path length 0".into())),
            GeneratorSpec::Complete(k) if *k < 1 => {
                Err(Error::InvalidSpec("complete order 0".into()))
            }
            GeneratorSpec::Torus(dims) => {
                if dims.len() < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "torus needs at least 2 dimensions, got {}",
                        dims.len()
                    )));
                }
                if let Some(k) = dims.iter().find(|&&k| k < 3) {
                    return Err(Error::InvalidSpec(format!("torus dimension {k} < 3")));
                }
                Ok(())
            }
            GeneratorSpec::Cartesian(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle(k) => write!(f, "cycle:{k}"),
            GeneratorSpec::Complete(k) => write!(f, "complete:{k}"),
            GeneratorSpec::Path(k) => write!(f, "path:{k}"),
            GeneratorSpec::Torus(dims) => {
                write!(f, "torus:")?;
                for (i, k) in dims.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{k}")?;
                }
                Ok(())
            }
            GeneratorSpec::Cartesian(a, b) => write!(f, "cartesian({a},{b})"),
            GeneratorSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn parse_len(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidSpec(format!("invalid integer parameter '{s}'")))
}

/// Byte offsets of every comma outside parentheses.
fn top_level_commas(s: &str) -> Vec<usize> {
    let mut depth = 0usize;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => out.push(i),
            _ => {}
        }
    }
    out
}

/// Synthesizes the graph described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        GeneratorSpec::Cycle(k) => cycle(*k),
        GeneratorSpec::Complete(k) => complete(*k),
        GeneratorSpec::Path(k) => path(*k),
        GeneratorSpec::Torus(dims) => torus(dims),
        GeneratorSpec::Cartesian(a, b) => cartesian_product(&generate(a)?, &generate(b)?),
        GeneratorSpec::File(p) => {
            let text = std::fs::read_to_string(p)?;
            Graph::from_edge_list(&text)
        }
    }
}

/// Cycle `C_k`: vertex `i` adjacent to `(i ± 1) mod k`.
pub fn cycle(k: usize) -> Result<Graph> {
    GeneratorSpec::Cycle(k).validate()?;
    Graph::new(k, &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>())
}

/// Complete graph `K_k`.
pub fn complete(k: usize) -> Result<Graph> {
    GeneratorSpec::Complete(k).validate()?;
    let mut edges = Vec::with_capacity(k * (k - 1) / 2);
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    Graph::new(k, &edges)
}

/// Path `P_k` on `k` vertices.
pub fn path(k: usize) -> Result<Graph> {
    GeneratorSpec::Path(k).validate()?;
    Graph::new(k, &(0..k - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
}

/// Torus `T(k_1, ..., k_n)`: mixed-radix vertex labels (last coordinate
/// fastest), adjacency differs in exactly one coordinate by `±1 mod k_j`.
/// Coincides label-for-label with the left fold of cycle products.
pub fn torus(dims: &[usize]) -> Result<Graph> {
    GeneratorSpec::Torus(dims.to_vec()).validate()?;
    let n: usize = dims.iter().product();
    let mut edges = Vec::new();
    let mut coords = vec![0usize; dims.len()];
    for label in 0..n {
        for (j, &k) in dims.iter().enumerate() {
            let mut next = coords.clone();
            next[j] = (coords[j] + 1) % k;
            edges.push((label, mixed_radix(&next, dims)));
        }
        // advance mixed-radix counter
        for j in (0..dims.len()).rev() {
            coords[j] += 1;
            if coords[j] < dims[j] {
                break;
            }
            coords[j] = 0;
        }
    }
    Graph::new(n, &edges)
}

fn mixed_radix(coords: &[usize], dims: &[usize]) -> usize {
    coords
        .iter()
        .zip(dims.iter())
        .fold(0, |acc, (&c, &k)| acc * k + c)
}

/// Cartesian product `G □ H`: vertex `(g, h)` is labeled `g * |V(H)| + h`;
/// `(g1, h1)` and `(g2, h2)` are adjacent iff they agree in one coordinate
/// and are adjacent in the other factor.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    if ng == 0 || nh == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for gv in 0..ng {
        for &(h1, h2) in h.edges() {
            edges.push((gv * nh + h1, gv * nh + h2));
        }
    }
    for &(g1, g2) in g.edges() {
        for hv in 0..nh {
            edges.push((g1 * nh + hv, g2 * nh + hv));
        }
    }
    Graph::new(ng * nh, &edges)
}
