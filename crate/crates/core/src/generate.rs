//! Seeded instance generators for the verification harness and tests.
//!
//! Plane graphs are grown by two operations that preserve planarity of the
//! rotation system: attaching a pendant edge at a corner, and drawing a
//! chord (possibly a loop) between two corners of the same face.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Digraph, HalfEdge, Matrix, Multigraph, PlaneGraph};

/// Deterministic generator for one instance, derived from a run seed, a
/// family tag and an instance index.
pub fn instance_rng(seed: u64, family: u64, index: u64) -> ChaCha8Rng {
    let mut x = seed ^ family.wrapping_mul(0xD1B5_4A32_D192_ED03);
    x ^= index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    ChaCha8Rng::seed_from_u64(x)
}

/// A growing embedding: edges plus counterclockwise rotation lists.
#[derive(Clone, Debug)]
struct Embedding {
    edges: Vec<(usize, usize)>,
    rotations: Vec<Vec<HalfEdge>>,
}

impl Embedding {
    fn single_vertex() -> Self {
        Embedding {
            edges: Vec::new(),
            rotations: vec![Vec::new()],
        }
    }

    fn build(&self) -> PlaneGraph {
        let graph = Multigraph::new(self.rotations.len(), self.edges.clone()).expect("endpoints");
        PlaneGraph::new(graph, self.rotations.clone())
            .expect("construction keeps the embedding plane")
    }

    /// Puts `new` just after `after` (counterclockwise) at `vertex`, or as
    /// the only entry when the vertex has no edges yet.
    fn insert(&mut self, vertex: usize, after: Option<HalfEdge>, new: HalfEdge) {
        let rot = &mut self.rotations[vertex];
        match after {
            None => rot.insert(0, new),
            Some(h) => {
                let i = rot
                    .iter()
                    .position(|&x| x == h)
                    .expect("corner dart present");
                rot.insert(i + 1, new);
            }
        }
    }

    fn add_pendant(&mut self, vertex: usize, after: Option<HalfEdge>) {
        let e = self.edges.len();
        let w = self.rotations.len();
        self.edges.push((vertex, w));
        self.rotations.push(vec![HalfEdge::new(e, 1)]);
        self.insert(vertex, after, HalfEdge::new(e, 0));
    }

    /// A chord between the corners following darts `a` and `b`, which must
    /// lie on the same face walk. With `a == b`, `flip` chooses which end
    /// of the new loop comes first.
    fn add_chord(&mut self, g: &PlaneGraph, a: HalfEdge, b: HalfEdge, flip: bool) {
        let e = self.edges.len();
        let (va, vb) = (g.vertex_of(a), g.vertex_of(b));
        self.edges.push((va, vb));
        if a == b {
            let (first, second) = if flip {
                (HalfEdge::new(e, 1), HalfEdge::new(e, 0))
            } else {
                (HalfEdge::new(e, 0), HalfEdge::new(e, 1))
            };
            self.insert(va, Some(a), first);
            self.insert(va, Some(first), second);
        } else {
            self.insert(va, Some(a), HalfEdge::new(e, 0));
            self.insert(vb, Some(b), HalfEdge::new(e, 1));
        }
    }

    /// A loop at a vertex with no edges.
    fn add_bare_loop(&mut self, vertex: usize) {
        let e = self.edges.len();
        self.edges.push((vertex, vertex));
        self.rotations[vertex] = vec![HalfEdge::new(e, 0), HalfEdge::new(e, 1)];
    }
}

#[derive(Clone, Copy, Debug)]
enum Growth {
    Tree,
    BridgesAndLoops,
    Mixed,
}

fn grow(rng: &mut ChaCha8Rng, edges: usize, growth: Growth) -> PlaneGraph {
    let mut emb = Embedding::single_vertex();
    for _ in 0..edges {
        let g = emb.build();
        if g.num_edges() == 0 {
            if matches!(growth, Growth::Tree) || rng.random_bool(0.7) {
                emb.add_pendant(0, None);
            } else {
                emb.add_bare_loop(0);
            }
            continue;
        }
        let faces = g.faces();
        let darts: Vec<HalfEdge> = faces.iter().flatten().copied().collect();
        let pendant = match growth {
            Growth::Tree => true,
            Growth::BridgesAndLoops => rng.random_bool(0.6),
            Growth::Mixed => rng.random_bool(0.3),
        };
        if pendant {
            let h = darts[rng.random_range(0..darts.len())];
            emb.add_pendant(g.vertex_of(h), Some(h));
            continue;
        }
        let face = &faces[rng.random_range(0..faces.len())];
        let a = face[rng.random_range(0..face.len())];
        let b = match growth {
            Growth::BridgesAndLoops => a,
            _ => face[rng.random_range(0..face.len())],
        };
        emb.add_chord(&g, a, b, rng.random_bool(0.5));
    }
    emb.build()
}

/// Renumbers vertices and edges at random and flips edge orientations.
fn shuffle_labels(rng: &mut ChaCha8Rng, g: &PlaneGraph) -> PlaneGraph {
    let n = g.graph().num_vertices();
    let m = g.num_edges();
    let mut vperm: Vec<usize> = (0..n).collect();
    let mut eperm: Vec<usize> = (0..m).collect();
    vperm.shuffle(rng);
    eperm.shuffle(rng);
    let flips: Vec<bool> = (0..m).map(|_| rng.random_bool(0.5)).collect();
    let mut edges = vec![(0, 0); m];
    for (e, &(u, v)) in g.graph().edges().iter().enumerate() {
        let (u, v) = (vperm[u], vperm[v]);
        edges[eperm[e]] = if flips[e] { (v, u) } else { (u, v) };
    }
    let mut rotations = vec![Vec::new(); n];
    for (v, rot) in g.rotations().iter().enumerate() {
        rotations[vperm[v]] = rot
            .iter()
            .map(|h| {
                let end = if flips[h.edge] { 1 - h.end } else { h.end };
                HalfEdge::new(eperm[h.edge], end)
            })
            .collect();
    }
    let graph = Multigraph::new(n, edges).expect("relabelled endpoints");
    PlaneGraph::new(graph, rotations).expect("relabelling keeps the embedding")
}

fn connected_plane_graph(rng: &mut ChaCha8Rng, edges: usize) -> PlaneGraph {
    match rng.random_range(0..6) {
        0 => grow(rng, edges, Growth::Tree),
        1 => PlaneGraph::cycle(edges),
        2 => PlaneGraph::bundle(edges),
        3 => grow(rng, edges, Growth::BridgesAndLoops),
        _ => grow(rng, edges, Growth::Mixed),
    }
}

/// A plane graph with between 1 and `max_edges` edges and no isolated
/// vertices, deterministic in `seed`.
///
/// The family is drawn from trees, cycles, bundles of parallel edges,
/// graphs grown from bridges and loops, graphs grown by face subdivision,
/// and disjoint unions of these; labels are shuffled afterwards.
pub fn generate_plane_graph(seed: u64, max_edges: usize) -> PlaneGraph {
    assert!(max_edges >= 1, "max_edges must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = rng.random_range(1..=max_edges);
    let g = if edges >= 2 && rng.random_bool(0.15) {
        let left = rng.random_range(1..edges);
        let a = connected_plane_graph(&mut rng, left);
        let b = connected_plane_graph(&mut rng, edges - left);
        a.disjoint_union(&b)
    } else {
        connected_plane_graph(&mut rng, edges)
    };
    shuffle_labels(&mut rng, &g)
}

/// Every connected plane graph with between 1 and `max_edges` edges, one
/// per orientation-preserving isomorphism class.
///
/// Each connected plane map is reachable: it has either a pendant edge or
/// an edge on a cycle, and removing that edge leaves a smaller connected
/// plane map.
pub fn exhaustive_plane_graphs(max_edges: usize) -> Vec<PlaneGraph> {
    let mut level: Vec<Embedding> = vec![Embedding::single_vertex()];
    let mut out = Vec::new();
    for size in 1..=max_edges {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut next = Vec::new();
        for emb in &level {
            let g = emb.build();
            let mut children = Vec::new();
            if size == 1 {
                let mut a = emb.clone();
                a.add_pendant(0, None);
                let mut b = emb.clone();
                b.add_bare_loop(0);
                children.extend([a, b]);
            } else {
                for face in g.faces() {
                    for &h in &face {
                        let mut c = emb.clone();
                        c.add_pendant(g.vertex_of(h), Some(h));
                        children.push(c);
                    }
                    for &a in &face {
                        for &b in &face {
                            let mut c = emb.clone();
                            c.add_chord(&g, a, b, false);
                            children.push(c);
                            if a == b {
                                let mut c = emb.clone();
                                c.add_chord(&g, a, b, true);
                                children.push(c);
                            }
                        }
                    }
                }
            }
            for c in children {
                let built = c.build();
                if seen.insert(built.map_code()) {
                    out.push(built);
                    next.push(c);
                }
            }
        }
        level = next;
    }
    out
}

/// An Eulerian digraph made of random closed walks, with between 1 and
/// `max_arcs` arcs on at most 4 vertices.
pub fn generate_eulerian_digraph(seed: u64, max_arcs: usize) -> Digraph {
    assert!(max_arcs >= 1, "max_arcs must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=4usize.min(max_arcs));
    let target = rng.random_range(1..=max_arcs);
    let mut arcs = Vec::new();
    while arcs.len() < target {
        let len = rng.random_range(1..=target - arcs.len());
        let walk: Vec<usize> = (0..len).map(|_| rng.random_range(0..n)).collect();
        for i in 0..len {
            arcs.push((walk[i], walk[(i + 1) % len]));
        }
    }
    Digraph::new(n, arcs).expect("walk vertices are in range")
}

/// `G(n, p)`: each pair joined independently with probability `p`.
pub fn generate_simple_graph(rng: &mut impl Rng, n: usize, p: f64) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Multigraph::new(n, edges).expect("pairs are in range")
}

/// A multigraph on 1 to 5 vertices with exactly `edges` edges, loops and
/// parallel edges allowed.
pub fn generate_multigraph(rng: &mut impl Rng, edges: usize) -> Multigraph {
    let n = rng.random_range(1..=5usize);
    let list = (0..edges)
        .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
        .collect();
    Multigraph::new(n, list).expect("endpoints are in range")
}

/// An `n × n` matrix with entries drawn uniformly from `lo..=hi`.
pub fn random_matrix(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Matrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| BigInt::from(rng.random_range(lo..=hi)))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("square by construction")
}

/// Multigraph fixtures with loops, bridges, parallel edges and several
/// components, all with at most 8 edges.
pub fn multigraph_fixtures() -> Vec<Multigraph> {
    let mg = |n, e: &[(usize, usize)]| Multigraph::new(n, e.to_vec()).expect("fixture");
    let mut out = vec![
        Multigraph::empty(1),
        Multigraph::empty(3),
        mg(1, &[(0, 0)]),
        mg(1, &[(0, 0), (0, 0)]),
        mg(2, &[(0, 1)]),
        mg(2, &[(0, 1), (0, 1)]),
        mg(2, &[(0, 1), (0, 1), (0, 1)]),
        mg(2, &[(0, 1), (1, 1)]),
        mg(3, &[(0, 1), (1, 2), (2, 0), (2, 2)]),
        mg(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        mg(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]),
        mg(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (3, 4), (4, 4)]),
        mg(
            4,
            &[
                (0, 1),
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 2),
                (3, 0),
                (1, 1),
                (2, 0),
            ],
        ),
        mg(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        mg(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]),
        mg(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]),
    ];
    for n in 2..=8 {
        out.push(Multigraph::path(n));
    }
    for n in 1..=8 {
        out.push(Multigraph::cycle(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_request() {
        let g = generate_plane_graph(1, 1);
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn deterministic() {
        for seed in 0..20 {
            assert_eq!(generate_plane_graph(seed, 7), generate_plane_graph(seed, 7));
            assert_eq!(
                generate_eulerian_digraph(seed, 8),
                generate_eulerian_digraph(seed, 8)
            );
        }
    }

    #[test]
    fn many_plane_samples_are_valid() {
        for seed in 0..500 {
            let g = generate_plane_graph(seed, 7);
            assert!((1..=7).contains(&g.num_edges()));
            assert_eq!(g.graph().num_isolated(), 0);
            let v = g.graph().num_vertices() as i64;
            let e = g.num_edges() as i64;
            let f = g.num_faces() as i64;
            assert_eq!(v - e + f, 1 + g.graph().num_components() as i64);
            let total: usize = g.faces().iter().map(Vec::len).sum();
            assert_eq!(total, 2 * g.num_edges());
        }
    }

    #[test]
    fn eulerian_samples() {
        for seed in 0..500 {
            let d = generate_eulerian_digraph(seed, 8);
            assert!(d.is_eulerian());
            assert!((1..=8).contains(&d.num_arcs()));
        }
    }

    #[test]
    fn exhaustive_counts_match_sensed_maps() {
        let all = exhaustive_plane_graphs(3);
        let by_size: Vec<usize> = (1..=3)
            .map(|m| all.iter().filter(|g| g.num_edges() == m).count())
            .collect();
        // sensed planar maps: 2 with one edge (bridge, loop), 4 with two, 14 with three
        assert_eq!(by_size, [2, 4, 14]);
    }
}
