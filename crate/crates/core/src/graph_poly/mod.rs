//! Tutte and circuit-partition polynomials, and the bridge between them
//! through the medial graph.

mod circuit;
mod tutte;

pub use circuit::{circuit_partition_poly, CIRCUIT_SYSTEMS_MAX};
pub use tutte::{
    tutte, tutte_diagonal, tutte_subgraph_sum, SUBGRAPH_SUM_MAX_EDGES, TUTTE_MAX_EDGES,
};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::graph::PlaneGraph;
use crate::poly::UniPolynomial;

/// `z^{c(G)} T(G; z + 1, z + 1)` as a polynomial in `z`; for a plane graph
/// without isolated vertices this is the circuit-partition polynomial of
/// its directed medial graph.
pub fn martin_rhs(g: &PlaneGraph) -> Result<UniPolynomial> {
    let t = tutte(g.graph())?;
    Ok(t.diagonal_shifted(&BigInt::one())
        .shift(g.graph().num_components()))
}
