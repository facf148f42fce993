//! Tableau counts, class sizes, and the Schur–Weyl expansion of `k^{c(π)}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::partition::{partitions_with_depth_at_most, Partition};

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Number of standard Young tableaux of the given shape (hook-length formula).
pub fn count_syt(shape: &Partition) -> BigInt {
    let hooks: BigInt = shape
        .cells()
        .map(|(r, c)| BigInt::from(shape.hook(r, c)))
        .product();
    factorial(shape.size()) / hooks
}

/// Number of semistandard tableaux of the given shape with entries in
/// `1..=k` (hook-content formula). Zero when the shape is deeper than `k`.
pub fn count_ssyt(shape: &Partition, k: usize) -> BigInt {
    if shape.depth() > k {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (r, c) in shape.cells() {
        num *= k + c - r;
        den *= shape.hook(r, c);
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    q
}

/// Number of permutations in `S_n` with the given cycle type: `n! / z_μ`.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (len, &mult) in cycle_type.multiplicities().iter().enumerate().skip(1) {
        z *= BigInt::from(len).pow(mult as u32) * factorial(mult);
    }
    factorial(cycle_type.size()) / z
}

/// Multiplicities of the irreducible `S_n` modules inside `(C^k)^{⊗n}`.
///
/// Returns `(λ, d_λ)` over partitions of `n` with at most `k` parts, in
/// canonical (lexicographically descending) order, where `d_λ` counts
/// semistandard tableaux with entries in `1..=k`. For every cycle type μ,
/// `Σ_λ d_λ χ_λ(μ) = k^{depth(μ)}`.
pub fn schur_weyl_expand(n: usize, k: usize) -> Vec<(Partition, BigInt)> {
    partitions_with_depth_at_most(n, k)
        .into_iter()
        .map(|lambda| {
            let d = count_ssyt(&lambda, k);
            (lambda, d)
        })
        .collect()
}
