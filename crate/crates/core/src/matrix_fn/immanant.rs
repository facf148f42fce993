use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::permutations::{cycle_lengths, for_each_weighted_permutation};
use super::Capacity;
use crate::algebra::{character, schur_weyl_expand, Partition};
use crate::error::{check_capacity, Error, Result};
use crate::graph::Matrix;

/// `Σ_{π of type μ} Π_i A[i][π(i)]` for every cycle type `μ` that occurs
/// with nonzero weight.
pub fn class_sums(a: &Matrix) -> Result<BTreeMap<Partition, BigInt>> {
    check_capacity(
        "permutation enumeration dimension",
        a.dim(),
        Capacity::default().factorial_max_n,
    )?;
    let mut sums: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for_each_weighted_permutation(a, |perm, w| {
        let mu = Partition::from_unsorted(cycle_lengths(perm)).expect("cycle lengths are positive");
        *sums.entry(mu).or_default() += w;
    });
    Ok(sums)
}

fn immanant_from_class_sums(
    sums: &BTreeMap<Partition, BigInt>,
    shape: &Partition,
) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (mu, s) in sums {
        total += character(shape, mu)? * s;
    }
    Ok(total)
}

/// `Imm_λ A = Σ_π χ_λ(π) Π_i A[i][π(i)]`, summed class by class.
pub fn immanant(a: &Matrix, shape: &Partition) -> Result<BigInt> {
    if shape.size() != a.dim() {
        return Err(Error::SizeMismatch(format!(
            "shape [{shape}] has {} cells but the matrix is {}x{}",
            shape.size(),
            a.dim(),
            a.dim()
        )));
    }
    let sums = class_sums(a)?;
    immanant_from_class_sums(&sums, shape)
}

/// `Ferm_k A = Σ_λ d_λ Imm_{λᵀ} A`, over partitions `λ` of `n` with at most
/// `k` rows, where `d_λ` counts semistandard tableaux with entries `1..=k`.
pub fn fermionant_via_immanants(a: &Matrix, k: usize) -> Result<BigInt> {
    fermionant_via_immanants_with(a, k, &Capacity::default())
}

pub(crate) fn fermionant_via_immanants_with(
    a: &Matrix,
    k: usize,
    capacity: &Capacity,
) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "the immanant expansion needs a positive integer k, got 0".into(),
        ));
    }
    check_capacity("immanant expansion k", k, capacity.immanant_max_k)?;
    check_capacity(
        "permutation enumeration dimension",
        a.dim(),
        capacity.factorial_max_n,
    )?;
    let sums = class_sums(a)?;
    let mut total = BigInt::zero();
    for (lambda, d) in schur_weyl_expand(a.dim(), k) {
        total += d * immanant_from_class_sums(&sums, &lambda.transpose())?;
    }
    Ok(total)
}
