//! Combinatorial plane embeddings (rotation systems) and face traversal.
//!
//! Every edge `e = (u, v)` has two half-edges: `(e, 0)` sits at `u` and
//! `(e, 1)` sits at `v`. A half-edge is read as a dart leaving its vertex
//! along the edge. Each vertex lists its half-edges in counterclockwise
//! order; the list is cyclic.
//!
//! Face traversal leaves a vertex along a dart `h`, arrives at the far end
//! along the twin dart, and continues with the dart *preceding* the twin in
//! that vertex's counterclockwise order:
//!
//! ```text
//!            h1
//!            ^
//!            |    face
//!     h2 <-- w <-------- (arriving along h, twin(h) points east)
//!            |
//!            v
//!            h3
//! ```
//!
//! With rotation `[twin(h), h1, h2, h3]` at `w`, the walk continues along
//! `h3`: a left turn, so bounded faces are encircled counterclockwise with
//! the face on the walker's left, and the outer face clockwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Multigraph;

/// One end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfEdge {
    pub edge: usize,
    /// 0 for the first endpoint of the edge, 1 for the second.
    pub end: u8,
}

impl HalfEdge {
    pub fn new(edge: usize, end: u8) -> Self {
        HalfEdge { edge, end }
    }

    pub fn twin(self) -> HalfEdge {
        HalfEdge {
            edge: self.edge,
            end: 1 - self.end,
        }
    }

    fn id(self) -> usize {
        2 * self.edge + self.end as usize
    }

    fn from_id(id: usize) -> HalfEdge {
        HalfEdge {
            edge: id / 2,
            end: (id % 2) as u8,
        }
    }
}

/// A multigraph together with a genus-0 rotation system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    graph: Multigraph,
    rotations: Vec<Vec<HalfEdge>>,
    /// `(vertex, index in rotation)` per half-edge id.
    position: Vec<(usize, usize)>,
}

impl PlaneGraph {
    /// Validates the rotation system and the Euler relation. Each rotation
    /// list is stored rotated to start at its smallest half-edge, so equal
    /// embeddings compare equal.
    pub fn new(graph: Multigraph, mut rotations: Vec<Vec<HalfEdge>>) -> Result<Self> {
        let n = graph.num_vertices();
        if rotations.len() != n {
            return Err(Error::InvalidInput(format!(
                "{} rotation lists given for {n} vertices",
                rotations.len()
            )));
        }
        let m = graph.num_edges();
        let mut position = vec![(usize::MAX, 0); 2 * m];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, h) in rot.iter().enumerate() {
                if h.edge >= m || h.end > 1 {
                    return Err(Error::Rotation {
                        vertex: v,
                        message: format!("half-edge [{}, {}] does not exist", h.edge, h.end),
                    });
                }
                let (a, b) = graph.edges()[h.edge];
                let at = if h.end == 0 { a } else { b };
                if at != v {
                    return Err(Error::Rotation {
                        vertex: v,
                        message: format!(
                            "half-edge [{}, {}] belongs to vertex {at}",
                            h.edge, h.end
                        ),
                    });
                }
                if position[h.id()].0 != usize::MAX {
                    return Err(Error::Rotation {
                        vertex: v,
                        message: format!("half-edge [{}, {}] listed twice", h.edge, h.end),
                    });
                }
                position[h.id()] = (v, i);
            }
        }
        if let Some(id) = position.iter().position(|p| p.0 == usize::MAX) {
            let h = HalfEdge::from_id(id);
            let (a, b) = graph.edges()[h.edge];
            return Err(Error::Rotation {
                vertex: if h.end == 0 { a } else { b },
                message: format!("half-edge [{}, {}] missing from rotation", h.edge, h.end),
            });
        }

        for rot in rotations.iter_mut() {
            if let Some(start) = (0..rot.len()).min_by_key(|&i| rot[i]) {
                rot.rotate_left(start);
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for (i, h) in rot.iter().enumerate() {
                position[h.id()] = (v, i);
            }
        }

        let plane = PlaneGraph {
            graph,
            rotations,
            position,
        };
        plane.check_euler()?;
        Ok(plane)
    }

    /// Every nontrivial component must satisfy `V − E + W = 2` where `W`
    /// counts its face walks.
    fn check_euler(&self) -> Result<()> {
        let (count, label) = self.graph.components();
        let mut verts = vec![0i64; count];
        let mut edges = vec![0i64; count];
        let mut walks = vec![0i64; count];
        for v in 0..self.graph.num_vertices() {
            verts[label[v]] += 1;
        }
        for &(u, _) in self.graph.edges() {
            edges[label[u]] += 1;
        }
        for walk in self.faces() {
            walks[label[self.vertex_of(walk[0])]] += 1;
        }
        for c in 0..count {
            if edges[c] > 0 && verts[c] - edges[c] + walks[c] != 2 {
                let vertex = label.iter().position(|&l| l == c).unwrap_or(0);
                return Err(Error::Rotation {
                    vertex,
                    message: format!(
                        "component is not plane: V - E + F = {} - {} + {} != 2",
                        verts[c], edges[c], walks[c]
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotations(&self) -> &[Vec<HalfEdge>] {
        &self.rotations
    }

    pub fn into_parts(self) -> (Multigraph, Vec<Vec<HalfEdge>>) {
        (self.graph, self.rotations)
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        self.position[h.id()].0
    }

    /// Counterclockwise successor of `h` around its vertex.
    pub fn rotate_next(&self, h: HalfEdge) -> HalfEdge {
        let (v, i) = self.position[h.id()];
        let rot = &self.rotations[v];
        rot[(i + 1) % rot.len()]
    }

    /// Clockwise successor of `h` around its vertex.
    pub fn rotate_prev(&self, h: HalfEdge) -> HalfEdge {
        let (v, i) = self.position[h.id()];
        let rot = &self.rotations[v];
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// The dart following `h` on its face walk.
    pub fn face_successor(&self, h: HalfEdge) -> HalfEdge {
        self.rotate_prev(h.twin())
    }

    /// All face walks. Walks are listed in order of their smallest starting
    /// dart id; each half-edge occurs in exactly one walk, once.
    pub fn faces(&self) -> Vec<Vec<HalfEdge>> {
        let mut seen = vec![false; self.position.len()];
        let mut out = Vec::new();
        for id in 0..seen.len() {
            if seen[id] {
                continue;
            }
            let start = HalfEdge::from_id(id);
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                seen[h.id()] = true;
                walk.push(h);
                h = self.face_successor(h);
                if h == start {
                    break;
                }
            }
            out.push(walk);
        }
        out
    }

    /// Number of faces of the plane drawing, so that
    /// `V − E + F = 1 + c(G)`. Components of a disconnected graph share
    /// the unbounded face.
    pub fn num_faces(&self) -> usize {
        let walks = self.faces().len();
        let (count, _) = self.graph.components();
        let nontrivial = count - self.graph.num_isolated();
        walks + 1 - nontrivial
    }

    /// A labelling-independent code for a connected plane graph with at
    /// least one edge: two such graphs have equal codes exactly when an
    /// orientation-preserving isomorphism maps one onto the other.
    ///
    /// Darts are numbered in breadth-first order from a root, following the
    /// rotation successor and then the twin; the code lists both successors
    /// of every dart, and the smallest code over all roots is kept.
    pub fn map_code(&self) -> Vec<usize> {
        let darts = self.position.len();
        let mut best: Option<Vec<usize>> = None;
        for root in 0..darts {
            let mut number = vec![usize::MAX; darts];
            let mut order = Vec::with_capacity(darts);
            number[root] = 0;
            order.push(root);
            let mut head = 0;
            let mut code = Vec::with_capacity(2 * darts);
            while head < order.len() {
                let d = HalfEdge::from_id(order[head]);
                head += 1;
                for next in [self.rotate_next(d), d.twin()] {
                    let id = next.id();
                    if number[id] == usize::MAX {
                        number[id] = order.len();
                        order.push(id);
                    }
                    code.push(number[id]);
                }
                if best.as_ref().is_some_and(|b| b[..code.len()] < code[..]) {
                    break;
                }
            }
            if order.len() < darts {
                continue;
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    /// The mirror embedding: every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneGraph::new(self.graph.clone(), rotations).expect("mirror of a plane graph is plane")
    }

    /// Disjoint union; edges and vertices of `other` are renumbered after
    /// those of `self`.
    pub fn disjoint_union(&self, other: &PlaneGraph) -> PlaneGraph {
        let edge_shift = self.num_edges();
        let mut rotations = self.rotations.clone();
        rotations.extend(other.rotations.iter().map(|r| {
            r.iter()
                .map(|h| HalfEdge::new(h.edge + edge_shift, h.end))
                .collect()
        }));
        PlaneGraph::new(self.graph.disjoint_union(&other.graph), rotations)
            .expect("disjoint union of plane graphs is plane")
    }

    /// The cycle `C_n` (`n ≥ 1`; `n = 1` is a loop, `n = 2` a digon).
    pub fn cycle(n: usize) -> PlaneGraph {
        assert!(n >= 1);
        let graph = Multigraph::cycle(n);
        // vertex i carries the end of edge i-1 and the start of edge i
        let rotations = (0..n)
            .map(|i| vec![HalfEdge::new(i, 0), HalfEdge::new((i + n - 1) % n, 1)])
            .collect();
        PlaneGraph::new(graph, rotations).expect("cycle embedding")
    }

    /// A path with `m` edges.
    pub fn path(m: usize) -> PlaneGraph {
        let graph = Multigraph::path(m + 1);
        let rotations = (0..=m)
            .map(|i| {
                let mut r = Vec::new();
                if i > 0 {
                    r.push(HalfEdge::new(i - 1, 1));
                }
                if i < m {
                    r.push(HalfEdge::new(i, 0));
                }
                r
            })
            .collect();
        PlaneGraph::new(graph, rotations).expect("path embedding")
    }

    /// Two vertices joined by `m` parallel edges.
    pub fn bundle(m: usize) -> PlaneGraph {
        let graph = Multigraph::new(2, vec![(0, 1); m]).expect("bundle");
        let rotations = vec![
            (0..m).map(|e| HalfEdge::new(e, 0)).collect(),
            (0..m).rev().map(|e| HalfEdge::new(e, 1)).collect(),
        ];
        PlaneGraph::new(graph, rotations).expect("bundle embedding")
    }

    /// `K_4` drawn as a triangle with a central vertex.
    pub fn k4() -> PlaneGraph {
        // outer triangle 0,1,2 counterclockwise, centre 3
        let graph =
            Multigraph::new(4, vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]).expect("k4");
        let h = HalfEdge::new;
        let rotations = vec![
            vec![h(0, 0), h(3, 0), h(2, 1)],
            vec![h(1, 0), h(4, 0), h(0, 1)],
            vec![h(2, 0), h(5, 0), h(1, 1)],
            vec![h(3, 1), h(4, 1), h(5, 1)],
        ];
        PlaneGraph::new(graph, rotations).expect("k4 embedding")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(e: usize, end: u8) -> HalfEdge {
        HalfEdge::new(e, end)
    }

    fn walk_lengths(g: &PlaneGraph) -> Vec<usize> {
        let mut l: Vec<usize> = g.faces().iter().map(Vec::len).collect();
        l.sort();
        l
    }

    #[test]
    fn single_edge_has_one_walk() {
        let g = PlaneGraph::path(1);
        assert_eq!(g.faces(), vec![vec![h(0, 0), h(0, 1)]]);
        assert_eq!(g.num_faces(), 1);
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = PlaneGraph::cycle(3);
        assert_eq!(walk_lengths(&g), [3, 3]);
        assert_eq!(g.num_faces(), 2);
    }

    #[test]
    fn single_loop_has_two_faces() {
        let graph = Multigraph::new(1, vec![(0, 0)]).unwrap();
        let g = PlaneGraph::new(graph, vec![vec![h(0, 0), h(0, 1)]]).unwrap();
        assert_eq!(walk_lengths(&g), [1, 1]);
        assert_eq!(g.num_faces(), 2);
    }

    #[test]
    fn k4_faces_are_triangles() {
        let g = PlaneGraph::k4();
        assert_eq!(walk_lengths(&g), [3, 3, 3, 3]);
    }

    #[test]
    fn bounded_faces_are_counterclockwise() {
        // outer triangle 0, 1, 2 counterclockwise with centre 3: the bounded
        // face 0, 1, 3 is walked 0 -> 1 -> 3 -> 0
        let g = PlaneGraph::k4();
        assert!(g.faces().contains(&vec![h(0, 0), h(4, 0), h(3, 1)]));
        // and the unbounded face clockwise, 0 -> 2 -> 1 -> 0
        assert!(g.faces().contains(&vec![h(0, 1), h(2, 1), h(1, 1)]));
    }

    #[test]
    fn rejects_missing_and_duplicate_half_edges() {
        let graph = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let err = PlaneGraph::new(graph.clone(), vec![vec![h(0, 0)], vec![]]).unwrap_err();
        assert!(matches!(err, Error::Rotation { vertex: 1, .. }), "{err}");
        let err = PlaneGraph::new(graph.clone(), vec![vec![h(0, 0), h(0, 0)], vec![h(0, 1)]])
            .unwrap_err();
        assert!(matches!(err, Error::Rotation { vertex: 0, .. }), "{err}");
        let err = PlaneGraph::new(graph, vec![vec![h(0, 1)], vec![h(0, 0)]]).unwrap_err();
        assert!(matches!(err, Error::Rotation { vertex: 0, .. }), "{err}");
    }

    #[test]
    fn rejects_toroidal_rotation() {
        // one vertex, two loops interleaved: a torus embedding of the bouquet
        let graph = Multigraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let interleaved = vec![vec![h(0, 0), h(1, 0), h(0, 1), h(1, 1)]];
        assert!(PlaneGraph::new(graph.clone(), interleaved).is_err());
        let nested = vec![vec![h(0, 0), h(0, 1), h(1, 0), h(1, 1)]];
        assert!(PlaneGraph::new(graph, nested).is_ok());
    }

    #[test]
    fn euler_relation_on_disconnected() {
        let g = PlaneGraph::cycle(3).disjoint_union(&PlaneGraph::k4());
        let v = g.graph().num_vertices() as i64;
        let e = g.num_edges() as i64;
        let f = g.num_faces() as i64;
        assert_eq!(v - e + f, 1 + g.graph().num_components() as i64);
        let lone = PlaneGraph::new(Multigraph::empty(2), vec![vec![], vec![]]).unwrap();
        assert_eq!(lone.num_faces(), 1);
    }

    #[test]
    fn canonical_rotation_start() {
        let graph = Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        let a = PlaneGraph::new(
            graph.clone(),
            vec![
                vec![h(1, 0), h(2, 0), h(0, 0)],
                vec![h(2, 1), h(1, 1), h(0, 1)],
            ],
        )
        .unwrap();
        assert_eq!(a, PlaneGraph::bundle(3));
    }

    #[test]
    fn mirror_reverses_walks() {
        let g = PlaneGraph::k4();
        let m = g.mirror();
        assert_eq!(m.faces().len(), g.faces().len());
        assert_eq!(m.mirror(), g);
    }

    #[test]
    fn map_code_ignores_labels() {
        let a = PlaneGraph::k4();
        assert_ne!(a.map_code(), PlaneGraph::cycle(6).map_code());
        // relabel K4 by rotating the outer triangle's edge ids
        let graph =
            Multigraph::new(4, vec![(1, 2), (2, 0), (0, 1), (1, 3), (2, 3), (0, 3)]).unwrap();
        let rotations = vec![
            vec![h(2, 0), h(5, 0), h(1, 1)],
            vec![h(0, 0), h(3, 0), h(2, 1)],
            vec![h(1, 0), h(4, 0), h(0, 1)],
            vec![h(5, 1), h(3, 1), h(4, 1)],
        ];
        let relabelled = PlaneGraph::new(graph, rotations).unwrap();
        assert_eq!(relabelled.map_code(), a.map_code());
    }
}
