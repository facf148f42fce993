//! Hamiltonian cycle counting and its parity as read off `Ferm_2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{check_capacity, Error, Result};
use crate::graph::Multigraph;
use crate::matrix_fn::fermionant_dp;

/// Largest vertex count for the bitmask dynamic program.
pub const HAMILTONIAN_MAX_N: usize = 18;

/// Number of Hamiltonian cycles of the underlying simple graph, each cycle
/// counted once as an undirected edge set. Loops are ignored and parallel
/// edges collapse. Graphs with fewer than 3 vertices have none.
pub fn count_hamiltonian_cycles(g: &Multigraph) -> Result<BigInt> {
    let n = g.num_vertices();
    check_capacity("Hamiltonian cycle count vertices", n, HAMILTONIAN_MAX_N)?;
    if n < 3 {
        return Ok(BigInt::zero());
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    // paths from vertex 0; vertex 0 stays out of the mask
    let m = n - 1;
    let mut paths = vec![0u64; (1 << m) * m];
    for j in 0..m {
        if adj[0] >> (j + 1) & 1 == 1 {
            paths[(1 << j) * m + j] = 1;
        }
    }
    for sub in 1usize..(1 << m) {
        for j in 0..m {
            let p = paths[sub * m + j];
            if p == 0 {
                continue;
            }
            let mut free = (adj[j + 1] >> 1) as usize & !sub;
            while free != 0 {
                let l = free.trailing_zeros() as usize;
                free &= free - 1;
                paths[(sub | (1 << l)) * m + l] += p;
            }
        }
    }
    let full = (1usize << m) - 1;
    let closed: u64 = (0..m)
        .filter(|&j| adj[0] >> (j + 1) & 1 == 1)
        .map(|j| paths[full * m + j])
        .sum();
    // each cycle is found once per direction
    Ok(BigInt::from(closed / 2))
}

/// Parity of the number of Hamiltonian cycles, computed as
/// `(Ferm_2 A / 4) mod 2` for the adjacency matrix `A`.
///
/// Requires a simple graph with at least 5 vertices: for smaller graphs,
/// covers by 2-cycles contribute terms that are not multiples of 8.
pub fn ham_parity_via_ferm2(g: &Multigraph) -> Result<u8> {
    let n = g.num_vertices();
    if n <= 4 {
        return Err(Error::InvalidInput(format!(
            "the Ferm_2 parity relation needs at least 5 vertices, got {n}"
        )));
    }
    if !g.is_simple() {
        return Err(Error::InvalidInput(
            "the Ferm_2 parity relation needs a simple graph (no loops or parallel edges)".into(),
        ));
    }
    let f = fermionant_dp(&g.adjacency_matrix(), &BigInt::from(2))?;
    let (quarter, rem) = f.div_mod_floor(&BigInt::from(4));
    if !rem.is_zero() {
        return Err(Error::Consistency(format!(
            "Ferm_2 of the adjacency matrix is {f}, not a multiple of 4"
        )));
    }
    Ok(quarter.mod_floor(&BigInt::from(2)).to_u8().expect("0 or 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix_fn::{fermionant, FermionantAlgorithm};

    /// Counts vertex orderings starting at 0 that close into a cycle, then
    /// divides out the two directions.
    fn brute_count(g: &Multigraph) -> u64 {
        let n = g.num_vertices();
        let a = g.adjacency_matrix();
        let adj = |u: usize, v: usize| u != v && !a.get(u, v).is_zero();
        let mut rest: Vec<usize> = (1..n).collect();
        let mut total = 0;
        fn permute(
            k: usize,
            rest: &mut Vec<usize>,
            total: &mut u64,
            adj: &dyn Fn(usize, usize) -> bool,
        ) {
            if k == rest.len() {
                let mut ok = adj(0, rest[0]) && adj(*rest.last().unwrap(), 0);
                ok &= rest.windows(2).all(|w| adj(w[0], w[1]));
                if ok {
                    *total += 1;
                }
                return;
            }
            for i in k..rest.len() {
                rest.swap(k, i);
                permute(k + 1, rest, total, adj);
                rest.swap(k, i);
            }
        }
        permute(0, &mut rest, &mut total, &adj);
        total / 2
    }

    #[test]
    fn counts() {
        for n in 3..9 {
            assert_eq!(
                count_hamiltonian_cycles(&Multigraph::cycle(n)).unwrap(),
                BigInt::from(1)
            );
        }
        assert_eq!(
            count_hamiltonian_cycles(&Multigraph::path(6)).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            count_hamiltonian_cycles(&Multigraph::complete(4)).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            count_hamiltonian_cycles(&Multigraph::complete(6)).unwrap(),
            BigInt::from(60)
        );
        assert_eq!(
            count_hamiltonian_cycles(&Multigraph::petersen()).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            count_hamiltonian_cycles(&Multigraph::complete(2)).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn dp_matches_enumeration() {
        let graphs = [
            Multigraph::complete(5),
            Multigraph::complete(7),
            Multigraph::new(
                6,
                vec![
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 0),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            )
            .unwrap(),
            Multigraph::new(
                5,
                vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 2)],
            )
            .unwrap(),
        ];
        for g in graphs {
            assert_eq!(
                count_hamiltonian_cycles(&g).unwrap(),
                BigInt::from(brute_count(&g))
            );
        }
    }

    #[test]
    fn parity_examples() {
        let c5 = Multigraph::cycle(5);
        assert_eq!(
            fermionant(
                &c5.adjacency_matrix(),
                &BigInt::from(2),
                FermionantAlgorithm::Brute
            )
            .unwrap(),
            BigInt::from(4)
        );
        assert_eq!(ham_parity_via_ferm2(&c5).unwrap(), 1);
        assert_eq!(ham_parity_via_ferm2(&Multigraph::petersen()).unwrap(), 0);
        assert!(matches!(
            ham_parity_via_ferm2(&Multigraph::complete(4)),
            Err(Error::InvalidInput(_))
        ));
        let multi =
            Multigraph::new(5, vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(ham_parity_via_ferm2(&multi).is_err());
    }

    #[test]
    fn odd_cycles_have_only_hamiltonian_covers() {
        for n in [5usize, 7, 9] {
            let a = Multigraph::cycle(n).adjacency_matrix();
            let f = fermionant(&a, &BigInt::from(2), FermionantAlgorithm::Dp).unwrap();
            let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(f, BigInt::from(4 * sign));
        }
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            count_hamiltonian_cycles(&Multigraph::cycle(19)),
            Err(Error::Capacity { .. })
        ));
    }
}
