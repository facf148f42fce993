//! Exact evaluation of fermionants, immanants, Tutte polynomials and
//! circuit-partition polynomials, together with the medial and line-digraph
//! constructions that connect them.
//!
//! Everything is computed with arbitrary-precision integers. The
//! exponential-time routines carry explicit size limits and return
//! [`Error::Capacity`] rather than running away.

pub mod algebra;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph_poly;
pub mod hamiltonian;
pub mod matrix_fn;
pub mod poly;
pub mod transforms;
pub mod verify;

pub use algebra::{
    character, class_size, count_ssyt, count_syt, partitions, partitions_with_depth_at_most,
    schur_weyl_expand, Partition,
};
pub use error::{Error, Result};
pub use graph::{Digraph, GraphDocument, HalfEdge, Matrix, Multigraph, PlaneGraph};
pub use graph_poly::{
    circuit_partition_poly, martin_rhs, tutte, tutte_diagonal, tutte_subgraph_sum,
};
pub use hamiltonian::{count_hamiltonian_cycles, ham_parity_via_ferm2};
pub use matrix_fn::{
    determinant, fermionant, fermionant_cycle_poly, fermionant_via_immanants, immanant, permanent,
    Capacity, FermionantAlgorithm,
};
pub use num_bigint::BigInt;
pub use poly::{BivarPolynomial, UniPolynomial};
pub use transforms::{bicycle_dimension, ferm2_medial_closed_form, line_digraph, medial};
