//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! border-strip rule.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};

/// `χ_λ(μ)`: the irreducible character indexed by `shape`, evaluated on the
/// conjugacy class of cycle type `cycle_type`.
pub fn character(shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    if shape.size() != cycle_type.size() {
        return Err(Error::SizeMismatch(format!(
            "character of shape [{shape}] (size {}) at class [{cycle_type}] (size {})",
            shape.size(),
            cycle_type.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(strip(shape.parts().to_vec(), cycle_type.parts(), &mut memo))
}

/// Memo key: the remaining shape and how many cycles are still to be removed.
type Memo = HashMap<(Vec<usize>, usize), BigInt>;

fn strip(shape: Vec<usize>, cycles: &[usize], memo: &mut Memo) -> BigInt {
    let Some((&len, rest)) = cycles.split_first() else {
        // sizes agree, so an exhausted cycle type leaves the empty shape
        debug_assert!(shape.is_empty());
        return BigInt::one();
    };
    let key = (shape, rest.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let shape = &key.0;

    // Beta numbers: removing a border strip of length `len` slides one bead
    // down by `len` onto a free position; the sign counts beads jumped over.
    let depth = shape.len();
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + depth - 1 - i)
        .collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let target = b - len;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&g| target < g && g < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let reduced: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &g)| g - (depth - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sub = strip(reduced, rest, memo);
        if jumped % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::partition::partitions;
    use crate::algebra::tableaux::{class_size, count_syt};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chi(l: &[usize], m: &[usize]) -> i64 {
        character(&p(l), &p(m)).unwrap().try_into().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&[3], &[2, 1]), 1);
        assert_eq!(chi(&[1, 1, 1], &[3]), 1);
        assert_eq!(chi(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(chi(&[2, 1], &[3]), -1);
        assert_eq!(chi(&[2, 1], &[2, 1]), 0);
        assert_eq!(chi(&[], &[]), 1);
    }

    #[test]
    fn s4_table() {
        // rows [4],[3,1],[2,2],[2,1,1],[1^4]; columns [1^4],[2,1,1],[2,2],[3,1],[4]
        let classes = [&[1, 1, 1, 1][..], &[2, 1, 1], &[2, 2], &[3, 1], &[4]];
        let expected = [
            [1, 1, 1, 1, 1],
            [3, 1, -1, 0, -1],
            [2, 0, 2, -1, 0],
            [3, -1, -1, 0, 1],
            [1, -1, 1, 1, -1],
        ];
        let shapes = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];
        for (row, shape) in shapes.iter().enumerate() {
            for (col, class) in classes.iter().enumerate() {
                assert_eq!(
                    chi(shape, class),
                    expected[row][col],
                    "[{shape:?}] at {class:?}"
                );
            }
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(
            character(&p(&[2, 1]), &p(&[2])),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=8 {
            for mu in partitions(n) {
                assert_eq!(character(&Partition::row(n), &mu).unwrap(), BigInt::one());
                let sign = if (n - mu.depth()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    character(&Partition::column(n), &mu).unwrap(),
                    BigInt::from(sign)
                );
            }
        }
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 0..=8 {
            for lambda in partitions(n) {
                assert_eq!(
                    character(&lambda, &Partition::column(n)).unwrap(),
                    count_syt(&lambda)
                );
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            let shapes = partitions(n);
            let table: Vec<Vec<BigInt>> = shapes
                .iter()
                .map(|l| shapes.iter().map(|m| character(l, m).unwrap()).collect())
                .collect();
            let sizes: Vec<BigInt> = shapes.iter().map(class_size).collect();
            let n_fact: BigInt = (1..=n).map(BigInt::from).product();
            for a in 0..shapes.len() {
                for b in 0..shapes.len() {
                    let s: BigInt = (0..shapes.len())
                        .map(|c| &sizes[c] * &table[a][c] * &table[b][c])
                        .sum();
                    let want = if a == b {
                        n_fact.clone()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, want, "n={n} rows {a},{b}");
                }
            }
        }
    }
}
