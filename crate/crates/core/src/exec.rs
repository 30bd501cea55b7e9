//! Chunked execution of independent work items.
//!
//! With the `parallel` feature (default), chunks run on the rayon pool;
//! without it, the same code path runs sequentially. Callers always merge
//! chunk results in chunk order, so the two modes are output-identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Number of workers available to a parallel map (1 without the feature).
pub fn workers() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Maps `f` over `items`, returning results in input order.
///
/// `parallel` requests the rayon path; it is ignored (sequential) when the
/// `parallel` feature is compiled out.
pub fn map_collect<T, R, F>(parallel: bool, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(&f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Splits `0..total` into at most `pieces` contiguous ranges of near-equal
/// length. The split depends only on `total` and `pieces`.
pub fn split_ranges(total: u128, pieces: usize) -> Vec<(u128, u128)> {
    if total == 0 {
        return Vec::new();
    }
    let pieces = (pieces as u128).min(total).max(1);
    let base = total / pieces;
    let extra = total % pieces;
    let mut ranges = Vec::with_capacity(pieces as usize);
    let mut start = 0u128;
    for i in 0..pieces {
        let len = base + u128::from(i < extra);
        ranges.push((start, start + len));
        start += len;
    }
    ranges
}
