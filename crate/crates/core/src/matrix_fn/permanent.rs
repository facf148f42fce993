use num_bigint::BigInt;
use num_traits::Zero;

use super::Capacity;
use crate::error::{check_capacity, Result};
use crate::graph::Matrix;

/// Exact permanent by Ryser's inclusion–exclusion formula, visiting column
/// subsets in Gray-code order.
pub fn permanent(a: &Matrix) -> Result<BigInt> {
    let n = a.dim();
    check_capacity(
        "permanent dimension",
        n,
        Capacity::default().permanent_max_n,
    )?;
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut row_sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray: u64 = 0;
    for step in 1u64..(1 << n) {
        let next = step ^ (step >> 1);
        let col = (gray ^ next).trailing_zeros() as usize;
        let added = next & (1 << col) != 0;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if added {
                *s += a.get(i, col);
            } else {
                *s -= a.get(i, col);
            }
        }
        gray = next;
        let prod: BigInt = row_sums.iter().product();
        if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn small_permanents() {
        assert_eq!(
            permanent(&Matrix::from_i64(&[[1, 2], [3, 4]]).unwrap()).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(permanent(&Matrix::ones(3)).unwrap(), BigInt::from(6));
        let zero_row = Matrix::from_i64(&[[1, 2, 3], [0, 0, 0], [4, 5, 6]]).unwrap();
        assert_eq!(permanent(&zero_row).unwrap(), BigInt::zero());
        assert_eq!(permanent(&Matrix::ones(8)).unwrap(), BigInt::from(40320));
        assert_eq!(permanent(&Matrix::zeros(0)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            permanent(&Matrix::zeros(21)),
            Err(Error::Capacity { .. })
        ));
    }
}
