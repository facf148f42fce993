//! `Ferm_k A = (−1)^n Σ_π (−k)^{c(π)} Π_i A[i][π(i)]`, where `c(π)` is the
//! number of cycles of `π`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::immanant::fermionant_via_immanants_with;
use super::permutations::{cycle_lengths, for_each_weighted_permutation};
use super::Capacity;
use crate::error::{check_capacity, Error, Result};
use crate::graph::Matrix;
use crate::poly::UniPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FermionantAlgorithm {
    /// Enumerate every permutation.
    Brute,
    /// Cycle sums per vertex subset, combined over set partitions.
    Dp,
    /// Expand into immanants of width at most `k`.
    Immanants,
}

impl FromStr for FermionantAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Self::Brute),
            "dp" => Ok(Self::Dp),
            "immanants" => Ok(Self::Immanants),
            other => Err(Error::InvalidInput(format!(
                "unknown algorithm {other:?}; expected brute, dp or immanants"
            ))),
        }
    }
}

/// The cycle-generating polynomial `f(z) = Σ_π z^{c(π)} Π_i A[i][π(i)]`,
/// so that `Ferm_k A = (−1)^n f(−k)`, `f(1)` is the permanent and
/// `(−1)^n f(−1)` the determinant.
pub fn fermionant_cycle_poly(a: &Matrix) -> Result<UniPolynomial> {
    check_capacity(
        "permutation enumeration dimension",
        a.dim(),
        Capacity::default().factorial_max_n,
    )?;
    let mut coeffs = vec![BigInt::zero(); a.dim() + 1];
    for_each_weighted_permutation(a, |perm, w| {
        coeffs[cycle_lengths(perm).len()] += w;
    });
    Ok(UniPolynomial::new(coeffs))
}

fn sign_n(n: usize, x: BigInt) -> BigInt {
    if n.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// Fermionant by enumerating `S_n`.
pub fn fermionant_brute(a: &Matrix, k: &BigInt) -> Result<BigInt> {
    let f = fermionant_cycle_poly(a)?;
    Ok(sign_n(a.dim(), f.eval(&-k)))
}

/// Fermionant by dynamic programming over vertex subsets.
///
/// For each subset `T`, `C(T)` sums the weights of directed cycles with
/// vertex set exactly `T`, each cycle rooted at `min(T)`; diagonal entries
/// are the 1-cycles. Then `F(∅) = 1` and
/// `F(S) = Σ_{T ⊆ S, min(S) ∈ T} C(T)·(−k)·F(S∖T)`, and the result is
/// `(−1)^n F(all)`. Runs in `O(2^n n^2 + 3^n)`; arithmetic is done in
/// `i128` and redone with big integers if anything overflows.
pub fn fermionant_dp(a: &Matrix, k: &BigInt) -> Result<BigInt> {
    check_capacity(
        "subset dynamic program dimension",
        a.dim(),
        Capacity::default().subset_dp_max_n,
    )?;
    let n = a.dim();
    let fast = a
        .to_i128()
        .zip(i128::try_from(-k).ok())
        .and_then(|(entries, weight)| cycle_cover_sum(n, &entries, &weight));
    let total = match fast {
        Some(v) => BigInt::from(v),
        None => {
            let entries: Vec<BigInt> = a.rows().flatten().cloned().collect();
            cycle_cover_sum(n, &entries, &-k).expect("big integers do not overflow")
        }
    };
    Ok(sign_n(n, total))
}

/// Dispatches to one of the three evaluation routes with default limits.
pub fn fermionant(a: &Matrix, k: &BigInt, algorithm: FermionantAlgorithm) -> Result<BigInt> {
    fermionant_with(a, k, algorithm, &Capacity::default())
}

pub fn fermionant_with(
    a: &Matrix,
    k: &BigInt,
    algorithm: FermionantAlgorithm,
    capacity: &Capacity,
) -> Result<BigInt> {
    match algorithm {
        FermionantAlgorithm::Brute => {
            check_capacity(
                "permutation enumeration dimension",
                a.dim(),
                capacity.factorial_max_n,
            )?;
            fermionant_brute(a, k)
        }
        FermionantAlgorithm::Dp => {
            check_capacity(
                "subset dynamic program dimension",
                a.dim(),
                capacity.subset_dp_max_n,
            )?;
            fermionant_dp(a, k)
        }
        FermionantAlgorithm::Immanants => {
            let k = usize::try_from(k).ok().filter(|&k| k >= 1).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "the immanant expansion needs a positive integer k, got {k}"
                ))
            })?;
            fermionant_via_immanants_with(a, k, capacity)
        }
    }
}

/// Ring operations for the subset dynamic program. Every operation reports
/// overflow as `None`.
trait Scalar: Clone + Send + Sync {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    /// `acc += a * b`.
    fn mul_add(acc: &mut Self, a: &Self, b: &Self) -> Option<()>;
    fn times(&self, b: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn mul_add(acc: &mut Self, a: &Self, b: &Self) -> Option<()> {
        *acc = acc.checked_add(a.checked_mul(*b)?)?;
        Some(())
    }
    fn times(&self, b: &Self) -> Option<Self> {
        self.checked_mul(*b)
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_add(acc: &mut Self, a: &Self, b: &Self) -> Option<()> {
        *acc += a * b;
        Some(())
    }
    fn times(&self, b: &Self) -> Option<Self> {
        Some(self * b)
    }
}

/// `C(T)` for every subset `T` (indexed by bitmask; `C(∅) = 0`).
fn cycle_sums<T: Scalar>(n: usize, a: &[T]) -> Option<Vec<T>> {
    let at = |i: usize, j: usize| &a[i * n + j];
    let mut cycles = vec![T::nil(); 1 << n];
    for root in 0..n {
        cycles[1 << root] = at(root, root).clone();
        // vertices above the root, relabelled 0..m
        let m = n - root - 1;
        if m == 0 {
            continue;
        }
        let vertex = |j: usize| root + 1 + j;
        // paths[sub * m + j]: root -> ... -> vertex(j) through exactly sub
        let mut paths = vec![T::nil(); (1usize << m) * m];
        for j in 0..m {
            paths[(1 << j) * m + j] = at(root, vertex(j)).clone();
        }
        for sub in 1usize..(1 << m) {
            let mut closing = T::nil();
            for j in 0..m {
                if sub & (1 << j) == 0 {
                    continue;
                }
                let p = paths[sub * m + j].clone();
                if p.is_nil() {
                    continue;
                }
                T::mul_add(&mut closing, &p, at(vertex(j), root))?;
                for l in 0..m {
                    if sub & (1 << l) != 0 {
                        continue;
                    }
                    let w = at(vertex(j), vertex(l));
                    if w.is_nil() {
                        continue;
                    }
                    T::mul_add(&mut paths[(sub | (1 << l)) * m + l], &p, w)?;
                }
            }
            cycles[(1 << root) | (sub << (root + 1))] = closing;
        }
    }
    Some(cycles)
}

/// `F(all)`, with `weight` multiplied in once per cycle.
fn cycle_cover_sum<T: Scalar>(n: usize, a: &[T], weight: &T) -> Option<T> {
    let cycles = cycle_sums(n, a)?;
    let weighted: Vec<T> = cycles
        .iter()
        .map(|c| c.times(weight))
        .collect::<Option<_>>()?;
    let mut covers = vec![T::nil(); 1 << n];
    covers[0] = T::unit();
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 1usize..(1 << n) {
        layers[mask.count_ones() as usize].push(mask);
    }
    for layer in layers.iter().skip(1) {
        let values: Vec<T> = layer
            .par_iter()
            .map(|&set| {
                let low = set & set.wrapping_neg();
                let rest = set ^ low;
                let mut acc = T::nil();
                // every subset of `rest`, including the empty one
                let mut sub = rest;
                loop {
                    let block = sub | low;
                    let c = &weighted[block];
                    if !c.is_nil() {
                        let remainder = &covers[set ^ block];
                        if !remainder.is_nil() {
                            T::mul_add(&mut acc, c, remainder)?;
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                Some(acc)
            })
            .collect::<Option<_>>()?;
        for (&set, v) in layer.iter().zip(values) {
            covers[set] = v;
        }
    }
    Some(covers[(1 << n) - 1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn all_routes(a: &Matrix, k: i64) -> BigInt {
        let k = big(k);
        let b = fermionant(a, &k, FermionantAlgorithm::Brute).unwrap();
        let d = fermionant(a, &k, FermionantAlgorithm::Dp).unwrap();
        assert_eq!(b, d, "brute vs dp");
        if k >= BigInt::one() && k <= big(4) {
            let i = fermionant(a, &k, FermionantAlgorithm::Immanants).unwrap();
            assert_eq!(b, i, "brute vs immanants");
        }
        b
    }

    #[test]
    fn cycle_poly_examples() {
        assert_eq!(
            fermionant_cycle_poly(&Matrix::from_i64(&[[5]]).unwrap()).unwrap(),
            UniPolynomial::from_i64(&[0, 5])
        );
        assert_eq!(
            fermionant_cycle_poly(&Matrix::identity(2)).unwrap(),
            UniPolynomial::monomial(2)
        );
        assert_eq!(
            fermionant_cycle_poly(&Matrix::ones(2)).unwrap(),
            UniPolynomial::from_i64(&[0, 1, 1])
        );
        // Stirling numbers of the first kind for J_4
        assert_eq!(
            fermionant_cycle_poly(&Matrix::ones(4)).unwrap(),
            UniPolynomial::from_i64(&[0, 6, 11, 6, 1])
        );
    }

    #[test]
    fn identity_gives_k_to_the_n() {
        for n in 0..7 {
            for k in -2..4 {
                assert_eq!(all_routes(&Matrix::identity(n), k), big(k).pow(n as u32));
            }
        }
    }

    #[test]
    fn all_ones_two_by_two() {
        for k in -3..5 {
            assert_eq!(all_routes(&Matrix::ones(2), k), big(k * k - k));
        }
    }

    #[test]
    fn five_cycle_at_two() {
        let c5 = crate::graph::Multigraph::cycle(5).adjacency_matrix();
        assert_eq!(all_routes(&c5, 2), big(4));
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let huge: BigInt = big(1) << 100;
        let mut a = Matrix::ones(4);
        a.set(0, 1, huge.clone());
        a.set(2, 3, huge);
        for k in [1, 2, 3] {
            let k = big(k);
            assert_eq!(
                fermionant_dp(&a, &k).unwrap(),
                fermionant_brute(&a, &k).unwrap()
            );
        }
        let k: BigInt = big(1) << 90;
        assert_eq!(
            fermionant_dp(&Matrix::ones(5), &k).unwrap(),
            fermionant_brute(&Matrix::ones(5), &k).unwrap()
        );
    }

    #[test]
    fn capacity_and_argument_errors() {
        let a = Matrix::zeros(10);
        assert!(matches!(
            fermionant(&a, &big(2), FermionantAlgorithm::Brute),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            fermionant(&Matrix::zeros(21), &big(2), FermionantAlgorithm::Dp),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            fermionant(&Matrix::ones(2), &big(0), FermionantAlgorithm::Immanants),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            fermionant(&Matrix::ones(2), &big(5), FermionantAlgorithm::Immanants),
            Err(Error::Capacity { .. })
        ));
        assert!("ryser".parse::<FermionantAlgorithm>().is_err());
        assert_eq!(
            "dp".parse::<FermionantAlgorithm>().unwrap(),
            FermionantAlgorithm::Dp
        );
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(all_routes(&Matrix::zeros(0), 3), BigInt::one());
    }
}
