use crate::error::{Error, Result};

use super::{components_of, Matrix};

/// An undirected multigraph. Edge `i` is `edges()[i]`; loops and parallel
/// edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_endpoints(num_vertices, &edges, "edge")?;
        Ok(Multigraph {
            num_vertices,
            edges,
        })
    }

    pub fn empty(num_vertices: usize) -> Self {
        Multigraph {
            num_vertices,
            edges: Vec::new(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// Number of connected components, isolated vertices included.
    pub fn num_components(&self) -> usize {
        components_of(self.num_vertices, &self.edges).0
    }

    /// Component count and a component label per vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        components_of(self.num_vertices, &self.edges)
    }

    /// Number of vertices with no incident edge.
    pub fn num_isolated(&self) -> usize {
        (0..self.num_vertices)
            .filter(|&v| self.degree(v) == 0)
            .count()
    }

    /// Entry `(u, v)` counts the edges between `u` and `v`; the diagonal
    /// counts loops.
    pub fn adjacency_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.num_vertices);
        for &(u, v) in &self.edges {
            m.add_to(u, v, 1);
            if u != v {
                m.add_to(v, u, 1);
            }
        }
        m
    }

    /// True when there are no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    /// Disjoint union; the vertices and edges of `other` are renumbered
    /// after those of `self`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.num_vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Multigraph {
            num_vertices: shift + other.num_vertices,
            edges,
        }
    }

    pub fn cycle(n: usize) -> Multigraph {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph {
            num_vertices: n,
            edges,
        }
    }

    pub fn path(n: usize) -> Multigraph {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Multigraph {
            num_vertices: n,
            edges,
        }
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Multigraph {
            num_vertices: n,
            edges,
        }
    }

    pub fn petersen() -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph {
            num_vertices: 10,
            edges,
        }
    }
}

pub(crate) fn check_endpoints(n: usize, edges: &[(usize, usize)], what: &str) -> Result<()> {
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!(
                "{what} {i} = ({u}, {v}) has an endpoint outside 0..{n}"
            )));
        }
    }
    Ok(())
}
