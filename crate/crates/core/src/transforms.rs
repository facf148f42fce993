//! Directed medial graphs, line digraphs, and the bicycle space.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Multigraph, PlaneGraph};

/// The directed medial graph: one vertex per edge of `g`, and for every
/// face walk `e_1, …, e_m` the arcs `e_i → e_{i+1}` (indices cyclic).
/// Bounded faces are encircled counterclockwise. Every medial vertex has
/// in-degree and out-degree 2; a pendant edge yields a medial loop.
///
/// Arcs are listed face by face in the order of [`PlaneGraph::faces`].
pub fn medial(g: &PlaneGraph) -> Result<Digraph> {
    if g.num_edges() == 0 {
        return Err(Error::InvalidInput(
            "the medial graph of an edgeless graph is empty".into(),
        ));
    }
    let mut arcs = Vec::with_capacity(2 * g.num_edges());
    for walk in g.faces() {
        for (i, h) in walk.iter().enumerate() {
            arcs.push((h.edge, walk[(i + 1) % walk.len()].edge));
        }
    }
    Digraph::new(g.num_edges(), arcs)
}

/// The line digraph: one vertex per arc, and an arc `a → b` whenever the
/// head of `a` is the tail of `b`. Vertex `i` is arc `i` of `g`.
pub fn line_digraph(g: &Digraph) -> Digraph {
    let mut leaving = vec![Vec::new(); g.num_vertices()];
    for (i, &(u, _)) in g.arcs().iter().enumerate() {
        leaving[u].push(i);
    }
    let arcs = g
        .arcs()
        .iter()
        .enumerate()
        .flat_map(|(a, &(_, head))| leaving[head].iter().map(move |&b| (a, b)))
        .collect();
    Digraph::new(g.num_arcs(), arcs).expect("line digraph endpoints are arc ids")
}

/// Dense GF(2) row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(bits: usize) -> Self {
        BitRow(vec![0; bits.div_ceil(64).max(1)])
    }

    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn xor_with(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }
}

/// Rank over GF(2), by Gaussian elimination.
fn gf2_rank(mut rows: Vec<BitRow>, bits: usize) -> usize {
    let mut rank = 0;
    for col in 0..bits {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_with(&pivot);
            }
        }
        rank += 1;
    }
    rank
}

/// Fundamental cycles of a spanning forest, one per non-forest edge.
fn cycle_basis(g: &Multigraph) -> Vec<BitRow> {
    let n = g.num_vertices();
    let m = g.num_edges();
    // BFS forest: parent edge and depth per vertex
    let mut incident = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push((i, v));
        if u != v {
            incident[v].push((i, u));
        }
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut in_forest = vec![false; m];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(e, w) in &incident[u] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some((e, u));
                    in_forest[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_forest[e] {
            continue;
        }
        let mut row = BitRow::zeros(m);
        row.flip(e);
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let (pe, up) = parent[a].expect("non-root vertex has a parent");
            row.flip(pe);
            a = up;
        }
        basis.push(row);
    }
    basis
}

/// Vertex stars, skipping one vertex per component. Loops cancel out of
/// their star.
fn cut_basis(g: &Multigraph) -> Vec<BitRow> {
    let m = g.num_edges();
    let (count, label) = g.components();
    let mut skipped = vec![false; count];
    let mut basis = Vec::new();
    for v in 0..g.num_vertices() {
        if !skipped[label[v]] {
            skipped[label[v]] = true;
            continue;
        }
        let mut row = BitRow::zeros(m);
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if a == v {
                row.flip(e);
            }
            if b == v {
                row.flip(e);
            }
        }
        basis.push(row);
    }
    basis
}

/// Dimension over GF(2) of the bicycle space: edge sets that lie both in
/// the cycle space and in the cut space.
///
/// Computed as `dim cycle + dim cut − rank(cycle basis ∪ cut basis)`.
pub fn bicycle_dimension(g: &Multigraph) -> usize {
    let cycles = cycle_basis(g);
    let cuts = cut_basis(g);
    let (dc, dk) = (cycles.len(), cuts.len());
    debug_assert_eq!(dc, g.num_edges() + g.num_components() - g.num_vertices());
    debug_assert_eq!(dk, g.num_vertices() - g.num_components());
    let mut all = cycles;
    all.extend(cuts);
    dc + dk - gf2_rank(all, g.num_edges())
}

/// `(−2)^{c(G)} (−1)^{|E|} (−2)^{dim B}`: the value of `Ferm_2` on the
/// adjacency matrix of the line digraph of the medial graph of `g`.
pub fn ferm2_medial_closed_form(g: &PlaneGraph) -> Result<BigInt> {
    if g.num_edges() == 0 {
        return Err(Error::InvalidInput(
            "the medial graph of an edgeless graph is empty".into(),
        ));
    }
    let graph = g.graph();
    let minus_two = BigInt::from(-2);
    let exponent = graph.num_components() + bicycle_dimension(graph);
    let sign = if graph.num_edges().is_multiple_of(2) { 1 } else { -1 };
    Ok(minus_two.pow(exponent as u32) * sign)
}
