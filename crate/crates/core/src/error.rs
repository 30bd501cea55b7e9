use thiserror::Error;

/// Errors produced by graph construction, oracles, and preclusion searches.
#[derive(Debug, Error)]
pub enum Error {
    /// A vertex id is outside `0..vertex_count`.
    #[error("vertex {vertex} out of range (graph has {bound} vertices)")]
    InvalidVertex { vertex: usize, bound: usize },

    /// A self-loop or otherwise malformed edge.
    #[error("invalid edge ({u}, {v})")]
    InvalidEdge { u: usize, v: usize },

    /// A fault set refers to elements that are not in the host graph, or
    /// violates the fault domain of the requested variant.
    #[error("invalid fault set: {0}")]
    InvalidFault(String),

    /// An operation that requires at least one vertex was given none.
    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    /// The brute-force oracle refuses graphs above its subset-scan cap.
    #[error("graph has {vertices} vertices, above the brute-force cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },

    /// The exhaustive search would exceed its oracle-call budget. Carries
    /// the partial evidence gathered before giving up: every size up to
    /// `largest_cleared` was fully scanned without finding a precluding
    /// set, and `best_upper_bound` is a size known to contain one.
    #[error(
        "search budget of {budget} candidate sets exceeded \
         (cleared all sizes <= {largest_cleared}, upper bound {best_upper_bound})"
    )]
    BudgetExceeded {
        budget: u64,
        largest_cleared: usize,
        best_upper_bound: usize,
    },

    /// No fault set of any size defeats the survival oracle (e.g. MP on a
    /// single-vertex graph, which trivially keeps an almost-perfect matching).
    #[error("no fault set in the {0} domain precludes this graph")]
    NotPrecludable(String),

    /// A malformed generator spec string or invalid generator parameters.
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    /// A malformed edge-list or suite file.
    #[error("parse error: {0}")]
    Parse(String),

    /// A theorem hypothesis stated as a hard precondition does not hold.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
