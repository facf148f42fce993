use crate::error::Result;

use super::multigraph::check_endpoints;
use super::{components_of, Matrix};

/// A directed multigraph. Arc `i` is `arcs()[i]` as `(tail, head)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    num_vertices: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(num_vertices: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        check_endpoints(num_vertices, &arcs, "arc")?;
        Ok(Digraph { num_vertices, arcs })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.num_vertices];
        for &(u, _) in &self.arcs {
            d[u] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.num_vertices];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    /// First vertex whose in-degree differs from its out-degree.
    pub fn unbalanced_vertex(&self) -> Option<usize> {
        let (ins, outs) = (self.in_degrees(), self.out_degrees());
        (0..self.num_vertices).find(|&v| ins[v] != outs[v])
    }

    pub fn is_eulerian(&self) -> bool {
        self.unbalanced_vertex().is_none()
    }

    /// Weak components (direction ignored), isolated vertices included.
    pub fn num_components(&self) -> usize {
        components_of(self.num_vertices, &self.arcs).0
    }

    /// Entry `(u, v)` counts arcs `u → v`.
    pub fn adjacency_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.num_vertices);
        for &(u, v) in &self.arcs {
            m.add_to(u, v, 1);
        }
        m
    }

    /// Every arc reversed, ids preserved.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            num_vertices: self.num_vertices,
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// The directed cycle `0 → 1 → … → n−1 → 0`.
    pub fn cycle(n: usize) -> Digraph {
        Digraph {
            num_vertices: n,
            arcs: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn adjacency_examples() {
        let two_cycle = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            two_cycle.adjacency_matrix(),
            Matrix::from_i64(&[[0, 1], [1, 0]]).unwrap()
        );
        let parallel = Digraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(*parallel.adjacency_matrix().get(0, 1), BigInt::from(2));
        let lp = Digraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(lp.adjacency_matrix(), Matrix::from_i64(&[[1]]).unwrap());
    }

    #[test]
    fn degree_sums_match_matrix() {
        let g = Digraph::new(4, vec![(0, 1), (1, 2), (2, 0), (0, 0), (3, 1), (3, 1)]).unwrap();
        let a = g.adjacency_matrix();
        let outs: Vec<BigInt> = g.out_degrees().into_iter().map(BigInt::from).collect();
        let ins: Vec<BigInt> = g.in_degrees().into_iter().map(BigInt::from).collect();
        assert_eq!(a.row_sums(), outs);
        assert_eq!(a.column_sums(), ins);
        assert_eq!(g.unbalanced_vertex(), Some(1));
    }
}
