//! Independent reference oracles shared by the integration suites. These
//! deliberately avoid the library's matching engine: matchings are found by
//! exponential enumeration and fractional perfect matchings by the
//! isolated-vertex subset criterion, so they can referee the fast paths.

use fsmp_core::graph::{FaultSet, Graph};
use fsmp_core::matching::fractional_pm_bruteforce_with_cap;
use fsmp_core::preclusion::PreclusionVariant;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Maximum matching size by branch-and-bound over vertices. Exponential;
/// fine up to a dozen vertices.
pub fn brute_max_matching(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, used: &mut Vec<bool>) -> usize {
        if v == g.vertex_count() {
            return 0;
        }
        if used[v] {
            return go(g, v + 1, used);
        }
        let mut best = go(g, v + 1, used);
        used[v] = true;
        for &u in g.neighbors(v) {
            if !used[u] {
                used[u] = true;
                best = best.max(1 + go(g, v + 1, used));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, 0, &mut vec![false; g.vertex_count()])
}

/// Survival decision built only from the reference oracles.
pub fn reference_survives(g: &Graph, variant: PreclusionVariant) -> bool {
    if variant.is_fractional() {
        fractional_pm_bruteforce_with_cap(g, 63).expect("graph within reference cap")
    } else {
        brute_max_matching(g) >= g.vertex_count() / 2
    }
}

/// Reference preclusion number: ascending exhaustive search over all
/// non-dominated fault sets, deciding survival with the reference oracles
/// only. Returns `None` when the intact graph is already precluded.
pub fn reference_preclusion_number(g: &Graph, variant: PreclusionVariant) -> Option<usize> {
    if !reference_survives(g, variant) {
        return None;
    }
    let mut domain: Vec<(Option<usize>, Option<(usize, usize)>)> = Vec::new();
    if variant.includes_vertex_faults() {
        domain.extend((0..g.vertex_count()).map(|v| (Some(v), None)));
    }
    domain.extend(g.edges().iter().map(|&e| (None, Some(e))));
    for k in 1..=domain.len() {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let vertices: Vec<usize> = combo.iter().filter_map(|&i| domain[i].0).collect();
            let edges: Vec<(usize, usize)> = combo.iter().filter_map(|&i| domain[i].1).collect();
            let fs = FaultSet::new(vertices, edges);
            if !fs.is_dominated() {
                let faulted = g.apply_faults(&fs).expect("domain elements are valid");
                if !reference_survives(&faulted.graph, variant) {
                    return Some(k);
                }
            }
            if !advance(&mut combo, domain.len()) {
                break;
            }
        }
    }
    None
}

fn advance(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Deterministic random graph: `index` selects the stream of `seed`.
pub fn seeded_random_graph(seed: u64, index: u64, n_range: (usize, usize)) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = rng.gen_range(n_range.0..=n_range.1);
    let p: f64 = rng.gen_range(0.05..0.95);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}
