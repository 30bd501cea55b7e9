//! Lexicographic k-combination counting, unranking, and iteration used to
//! partition exhaustive searches into independent rank ranges.

/// Binomial coefficient as u128, saturating on overflow. The saturation
/// only matters for budget comparisons, where "astronomical" is enough.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The `rank`-th k-subset of `0..n` in lexicographic order.
///
/// Panics if `rank >= C(n, k)`.
pub fn unrank(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    debug_assert!(rank < binomial(n, k));
    let mut combo = Vec::with_capacity(k);
    let mut next = 0;
    for remaining in (1..=k).rev() {
        let mut candidate = next;
        loop {
            let with_candidate = binomial(n - candidate - 1, remaining - 1);
            if rank < with_candidate {
                break;
            }
            rank -= with_candidate;
            candidate += 1;
        }
        combo.push(candidate);
        next = candidate + 1;
    }
    combo
}

/// Advances `combo` to its lexicographic successor among k-subsets of
/// `0..n`. Returns false when `combo` was the last one.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
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
