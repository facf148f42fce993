//! Exact determinant, permanent, fermionant and immanant evaluation.

mod determinant;
mod fermionant;
mod immanant;
mod permanent;
mod permutations;

pub use determinant::determinant;
pub use fermionant::{
    fermionant, fermionant_brute, fermionant_cycle_poly, fermionant_dp, fermionant_with,
    FermionantAlgorithm,
};
pub use immanant::{class_sums, fermionant_via_immanants, immanant};
pub use permanent::permanent;

/// Size limits for the exponential-time routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capacity {
    /// Largest `n` for routines that enumerate all of `S_n`.
    pub factorial_max_n: usize,
    /// Largest `n` for the subset dynamic program.
    pub subset_dp_max_n: usize,
    /// Largest `n` for Ryser's permanent formula.
    pub permanent_max_n: usize,
    /// Largest `k` accepted by the immanant expansion of the fermionant.
    pub immanant_max_k: usize,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            factorial_max_n: 9,
            subset_dp_max_n: 20,
            permanent_max_n: 20,
            immanant_max_k: 4,
        }
    }
}
