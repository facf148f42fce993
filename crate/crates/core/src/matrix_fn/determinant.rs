use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Matrix;

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(a: &Matrix) -> BigInt {
    let n = a.dim();
    let mut m: Vec<Vec<BigInt>> = a.rows().map(<[BigInt]>::to_vec).collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    prev * sign
}
