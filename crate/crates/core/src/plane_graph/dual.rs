//! Combinatorial dual of a plane embedding.

use super::embedding::PlaneEmbedding;

/// One vertex per primal face and one edge per primal edge. Dual edge `k`
/// runs from the face left of dart `2k` to the face right of it.
#[derive(Debug, Clone, PartialEq)]
pub struct DualGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    /// Dual face of each primal vertex, as the primal edges around it in
    /// counter-clockwise order.
    pub faces: Vec<Vec<usize>>,
}

pub fn dual_graph(emb: &PlaneEmbedding) -> DualGraph {
    let edges = (0..emb.edge_count())
        .map(|k| (emb.face_of(2 * k), emb.face_of(2 * k + 1)))
        .collect();
    let faces = (0..emb.vertex_count()).map(|v| emb.vertex_cycle(v)).collect();
    DualGraph {
        vertex_count: emb.face_count(),
        edges,
        faces,
    }
}

impl DualGraph {
    /// Faces adjacent to each face, with the primal edge separating them.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, k));
            if a != b {
                adj[b].push((a, k));
            }
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::framework::Framework;
    use crate::geometry::{Point2, Tolerance};
    use crate::plane_graph::build_embedding;
    use std::collections::BTreeSet;

    fn neighbor_sets(d: &DualGraph) -> Vec<BTreeSet<usize>> {
        d.adjacency()
            .iter()
            .map(|a| a.iter().map(|&(f, _)| f).collect())
            .collect()
    }

    #[test]
    fn k4_dual_is_k4() {
        let emb = build_embedding(&fixtures::k4(), &Tolerance::default()).unwrap();
        let d = dual_graph(&emb);
        assert_eq!(d.vertex_count, 4);
        for (f, s) in neighbor_sets(&d).iter().enumerate() {
            let expect: BTreeSet<usize> = (0..4).filter(|&g| g != f).collect();
            assert_eq!(s, &expect);
        }
    }

    #[test]
    fn triangle_dual_has_three_parallel_edges() {
        let fw = Framework::new(
            vec![Point2::new(0., 0.), Point2::new(1., 0.), Point2::new(0., 1.)],
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap();
        let emb = build_embedding(&fw, &Tolerance::default()).unwrap();
        let d = dual_graph(&emb);
        assert_eq!(d.vertex_count, 2);
        let pairs: BTreeSet<(usize, usize)> = d.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        assert_eq!(pairs.len(), 1);
        assert_eq!(d.edges.len(), 3);
    }

    #[test]
    fn wheel_dual_is_wheel() {
        let fw = Framework::new(
            vec![
                Point2::new(1., 0.),
                Point2::new(0., 1.),
                Point2::new(-1., 0.),
                Point2::new(0., -1.),
                Point2::new(0.1, 0.05),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)],
        )
        .unwrap();
        let emb = build_embedding(&fw, &Tolerance::default()).unwrap();
        let d = dual_graph(&emb);
        assert_eq!(d.vertex_count, 5);
        let sets = neighbor_sets(&d);
        let outer = emb.outer_face();
        assert_eq!(sets[outer].len(), 4);
        for (f, s) in sets.iter().enumerate() {
            if f != outer {
                assert_eq!(s.len(), 3);
            }
        }
    }

    #[test]
    fn dual_faces_are_vertex_cycles() {
        let emb = build_embedding(&fixtures::k4(), &Tolerance::default()).unwrap();
        let d = dual_graph(&emb);
        for (v, cycle) in d.faces.iter().enumerate() {
            // Consecutive edges around v share a primal face, i.e. a dual vertex.
            for i in 0..cycle.len() {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                let ea = [d.edges[a].0, d.edges[a].1];
                let eb = [d.edges[b].0, d.edges[b].1];
                assert!(ea.iter().any(|x| eb.contains(x)), "vertex {v}");
            }
        }
    }
}
