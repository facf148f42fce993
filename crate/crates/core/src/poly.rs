//! Polynomials with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

/// A univariate polynomial; `coeffs[i]` is the coefficient of `z^i`.
///
/// Stored without trailing zeros, so the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPolynomial {
    coeffs: Vec<BigInt>,
}

impl UniPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        UniPolynomial { coeffs }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPolynomial { coeffs }
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients as decimal strings, constant term first.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl Add for &UniPolynomial {
    type Output = UniPolynomial;

    fn add(self, rhs: &UniPolynomial) -> UniPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPolynomial {
    type Output = UniPolynomial;

    fn mul(self, rhs: &UniPolynomial) -> UniPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UniPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPolynomial::new(out)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, monomial: &str) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let mag = c.abs();
    if monomial.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(monomial)
    } else {
        write!(f, "{mag}{monomial}")
    }
}

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Highest degree first, e.g. `z^2 + z`.
impl fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &power("z", k))?;
            first = false;
        }
        Ok(())
    }
}

/// A polynomial in `x` and `y`, keyed by `(deg_x, deg_y)`. No zero
/// coefficient is ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPolynomial {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivarPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    /// `x^i y^j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((i, j), BigInt::one());
        BivarPolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, key: (usize, usize), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.terms
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i as u32) * y.pow(j as u32))
            .sum()
    }

    /// Substitutes `x = y = z + shift`, giving a univariate polynomial in `z`.
    pub fn diagonal_shifted(&self, shift: &BigInt) -> UniPolynomial {
        let top = self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0);
        let mut by_degree = vec![BigInt::zero(); top + 1];
        for (&(i, j), c) in &self.terms {
            by_degree[i + j] += c;
        }
        // Σ_d a_d (z + s)^d, expanded binomially
        let mut out = vec![BigInt::zero(); top + 1];
        for (d, a) in by_degree.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut binom = BigInt::one();
            for t in 0..=d {
                // coefficient of z^t in (z + s)^d is C(d, t) s^(d - t)
                out[t] += a * &binom * shift.pow((d - t) as u32);
                binom = binom * (d - t) / (t + 1);
            }
        }
        UniPolynomial::new(out)
    }

    /// `{"i,j": "coeff"}` with decimal-string coefficients.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (format!("{i},{j}"), Value::String(c.to_string())))
            .collect();
        Value::Object(map)
    }
}

impl Add for &BivarPolynomial {
    type Output = BivarPolynomial;

    fn add(self, rhs: &BivarPolynomial) -> BivarPolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Mul for &BivarPolynomial {
    type Output = BivarPolynomial;

    fn mul(self, rhs: &BivarPolynomial) -> BivarPolynomial {
        let mut out = BivarPolynomial::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

/// Highest total degree first, e.g. `x^2 + x + y`.
impl fmt::Display for BivarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(usize, usize)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(i, j)| std::cmp::Reverse((i + j, i)));
        for (n, key) in keys.into_iter().enumerate() {
            let mono = format!("{}{}", power("x", key.0), power("y", key.1));
            write_term(f, n == 0, &self.terms[key], &mono)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalisation_and_degree() {
        assert_eq!(UniPolynomial::from_i64(&[0, 0]).degree(), None);
        assert_eq!(UniPolynomial::from_i64(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(
            UniPolynomial::monomial(3).shift(2),
            UniPolynomial::monomial(5)
        );
    }

    #[test]
    fn display() {
        assert_eq!(UniPolynomial::from_i64(&[0, 1, 1]).to_string(), "z^2 + z");
        assert_eq!(
            UniPolynomial::from_i64(&[-3, 0, -2]).to_string(),
            "-2z^2 - 3"
        );
        let t = BivarPolynomial::from_terms([
            ((2, 0), BigInt::one()),
            ((1, 0), BigInt::one()),
            ((0, 1), BigInt::one()),
        ]);
        assert_eq!(t.to_string(), "x^2 + x + y");
    }

    #[test]
    fn diagonal_substitution() {
        // x^2 + x + y at x = y = z + 1 is z^2 + 4z + 3
        let t = BivarPolynomial::from_terms([
            ((2, 0), BigInt::one()),
            ((1, 0), BigInt::one()),
            ((0, 1), BigInt::one()),
        ]);
        assert_eq!(
            t.diagonal_shifted(&BigInt::one()),
            UniPolynomial::from_i64(&[3, 4, 1])
        );
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = BivarPolynomial::monomial(1, 2);
        p.add_term((1, 2), BigInt::from(-1));
        assert!(p.is_zero());
        assert!(p.terms().is_empty());
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(
            a in proptest::collection::vec(-5i64..5, 0..6),
            b in proptest::collection::vec(-5i64..5, 0..6),
            z in -4i64..4,
        ) {
            let (pa, pb) = (UniPolynomial::from_i64(&a), UniPolynomial::from_i64(&b));
            let z = BigInt::from(z);
            prop_assert_eq!((&pa * &pb).eval(&z), pa.eval(&z) * pb.eval(&z));
            prop_assert_eq!((&pa + &pb).eval(&z), pa.eval(&z) + pb.eval(&z));
        }

        #[test]
        fn diagonal_shift_agrees_with_eval(
            terms in proptest::collection::vec(((0usize..4, 0usize..4), -6i64..6), 0..6),
            z in -5i64..5,
            s in -3i64..3,
        ) {
            let p = BivarPolynomial::from_terms(terms.into_iter().map(|(k, c)| (k, BigInt::from(c))));
            let zs = BigInt::from(z + s);
            prop_assert_eq!(
                p.diagonal_shifted(&BigInt::from(s)).eval(&BigInt::from(z)),
                p.eval(&zs, &zs)
            );
        }
    }
}
