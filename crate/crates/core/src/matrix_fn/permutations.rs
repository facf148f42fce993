//! Enumeration of the permutations with nonzero weight `Π A[i][π(i)]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Matrix;

/// Calls `visit(π, weight)` for every permutation whose weight is nonzero.
/// Zero entries prune the search, so sparse matrices are cheap.
pub(crate) fn for_each_weighted_permutation(a: &Matrix, mut visit: impl FnMut(&[usize], &BigInt)) {
    let n = a.dim();
    let mut perm = vec![0; n];
    let mut used = vec![false; n];
    let mut weights = vec![BigInt::one(); n + 1];
    fn go(
        row: usize,
        a: &Matrix,
        perm: &mut [usize],
        used: &mut [bool],
        weights: &mut [BigInt],
        visit: &mut dyn FnMut(&[usize], &BigInt),
    ) {
        let n = a.dim();
        if row == n {
            visit(perm, &weights[n]);
            return;
        }
        for col in 0..n {
            if used[col] || a.get(row, col).is_zero() {
                continue;
            }
            weights[row + 1] = &weights[row] * a.get(row, col);
            perm[row] = col;
            used[col] = true;
            go(row + 1, a, perm, used, weights, visit);
            used[col] = false;
        }
    }
    go(0, a, &mut perm, &mut used, &mut weights, &mut visit);
}

/// Cycle lengths of a permutation, in no particular order.
pub(crate) fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        out.push(len);
    }
    out
}
