//! Multigraphs, digraphs, plane embeddings, matrices, and their file formats.

pub mod digraph;
pub mod io;
pub mod matrix;
pub mod multigraph;
pub mod plane;

pub use digraph::Digraph;
pub use io::{read_graph, read_matrix, write_graph, write_matrix, GraphDocument};
pub use matrix::Matrix;
pub use multigraph::Multigraph;
pub use plane::{HalfEdge, PlaneGraph};

/// Union–find over `0..n` with path halving.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if the two elements were in different sets.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.sets -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

/// Connected components of an edge list on `n` vertices: the number of
/// components (isolated vertices included) and a label per vertex, labels
/// numbered in order of first appearance.
pub(crate) fn components_of(n: usize, edges: &[(usize, usize)]) -> (usize, Vec<usize>) {
    let mut ds = DisjointSets::new(n);
    for &(u, v) in edges {
        ds.union(u, v);
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut roots = vec![usize::MAX; n];
    for v in 0..n {
        let r = ds.find(v);
        if roots[r] == usize::MAX {
            roots[r] = next;
            next += 1;
        }
        label[v] = roots[r];
    }
    (next, label)
}
