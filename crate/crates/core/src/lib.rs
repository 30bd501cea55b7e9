//! Matching preclusion laboratory.
//!
//! Computes the four matching preclusion numbers of a finite simple graph —
//! `mp` (edge faults against perfect/almost-perfect matchings), `smp`
//! (mixed vertex and edge faults), and their fractional counterparts `fmp`
//! and `fsmp` — by bounded exhaustive search over fault sets, backed by two
//! independent oracles for fractional perfect matching existence. Ships
//! generators for cycles, complete graphs, paths, Cartesian products, and
//! torus networks, plus a verification harness that reproduces the known
//! closed-form values for those families at desk scale.
//!
//! A *fractional perfect matching* assigns each edge a weight in `[0, 1]`
//! so that every vertex's incident weights sum to exactly 1. On the
//! fractional matching polytope it suffices to consider half-integral
//! weights, so witnesses here are exact: numerators in `{0, 1, 2}` over a
//! fixed denominator of 2, never floating point.
//!
//! The search core is data-parallel over subset rank ranges (rayon, behind
//! the default `parallel` feature) with a sequential fallback that produces
//! byte-identical reports.

pub mod combin;
pub mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod preclusion;

pub use error::{Error, Result};
pub use generators::{cartesian_product, generate, GeneratorSpec};
pub use graph::{FaultSet, FaultedGraph, Graph};
pub use matching::{
    fractional_pm, fractional_pm_bruteforce, has_fractional_pm, has_pm_or_apm, max_matching,
    FractionalMatching, MatchingResult,
};
pub use preclusion::{
    classify_fault_set, is_fractional_strongly_super_matched, preclusion_number,
    randomized_preclusion_probe, FaultClass, PreclusionReport, PreclusionVariant, ProbeConfig,
    ProbeReport, SearchConfig, SuperMatchedEvidence,
};
