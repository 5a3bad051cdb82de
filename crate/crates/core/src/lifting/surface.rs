//! The standard Maxwell lifting: a piecewise-linear height function over the
//! faces of a stressed framework, flat on the outer face.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::geometry::{rotate90, Point2, Vector2};
use crate::plane_graph::PlaneEmbedding;
use crate::rigidity::{boundary_edges, SelfStress};

/// Order in which faces are visited when propagating planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeOrder {
    BreadthFirst,
    DepthFirst,
}

/// Face planes `z = a_f · (x, y) + b_f` and vertex heights.
#[derive(Debug, Clone)]
pub struct Lifting {
    pub gradients: Vec<Vector2>,
    pub offsets: Vec<f64>,
    pub heights: Vec<f64>,
    /// Whether the stress was negated so the boundary edges become valleys.
    pub flip_applied: bool,
    /// The stress actually lifted (after any flip).
    pub omega: Vec<f64>,
    pub closure_defect: f64,
    pub embedding: PlaneEmbedding,
}

impl Lifting {
    pub fn plane_at(&self, f: usize, p: Point2) -> f64 {
        self.gradients[f].dot(p.to_vector()) + self.offsets[f]
    }

    pub fn peak_height(&self) -> f64 {
        self.heights.iter().copied().fold(0.0, f64::max)
    }

    /// Natural scale of heights: `‖ω‖∞ · scale²`.
    pub fn height_scale(&self) -> f64 {
        let s = self.embedding.framework().scale();
        self.omega.iter().fold(0.0f64, |m, w| m.max(w.abs())) * s * s
    }

    /// Natural scale of gradients: `‖ω‖∞ · scale`.
    pub fn slope_scale(&self) -> f64 {
        self.omega.iter().fold(0.0f64, |m, w| m.max(w.abs())) * self.embedding.framework().scale()
    }

    /// Every edge is a valley exactly when its stress is negative.
    pub fn is_valley(&self, k: usize) -> bool {
        self.omega[k] < 0.0
    }
}

/// Standard lift of `stress` over `emb`, propagating breadth-first.
pub fn maxwell_lifting(emb: &PlaneEmbedding, stress: &SelfStress) -> Result<Lifting> {
    maxwell_lifting_with(emb, stress, TreeOrder::BreadthFirst)
}

/// Standard lift with an explicit propagation order.
///
/// Crossing support edge `p -> q` from the face on its left to the face on
/// its right adds `ω · rotate90(q - p)` to the gradient; offsets follow from
/// continuity at `p`. A stress whose boundary sum is positive is negated
/// first so boundary edges are valleys. Zero-stress edges become flat creases.
pub fn maxwell_lifting_with(emb: &PlaneEmbedding, stress: &SelfStress, order: TreeOrder) -> Result<Lifting> {
    let fw = emb.framework();
    if stress.omega.len() != fw.edge_count() {
        return Err(Error::StressLength {
            expected: fw.edge_count(),
            found: stress.omega.len(),
        });
    }
    let boundary_sum: f64 = boundary_edges(emb).iter().map(|&k| stress.omega[k]).sum();
    let flip_applied = boundary_sum > 0.0;
    let omega: Vec<f64> = if flip_applied {
        stress.omega.iter().map(|w| -w).collect()
    } else {
        stress.omega.clone()
    };

    let nf = emb.face_count();
    let mut planes: Vec<Option<(Vector2, f64)>> = vec![None; nf];
    let outer = emb.outer_face();
    planes[outer] = Some((Vector2::ZERO, 0.0));
    let mut frontier = VecDeque::from([outer]);
    loop {
        let next = match order {
            TreeOrder::BreadthFirst => frontier.pop_front(),
            TreeOrder::DepthFirst => frontier.pop_back(),
        };
        let Some(f) = next else { break };
        let (a, b) = planes[f].expect("visited");
        for &d in emb.face(f) {
            let g = emb.face_of(d ^ 1);
            if planes[g].is_some() {
                continue;
            }
            planes[g] = Some(cross_edge(fw, &omega, d, a, b));
            frontier.push_back(g);
        }
    }
    let planes: Vec<(Vector2, f64)> = planes.into_iter().map(|p| p.expect("faces are connected")).collect();

    let height_of = |f: usize, p: Point2| planes[f].0.dot(p.to_vector()) + planes[f].1;
    let mut closure_defect = 0.0f64;
    for k in 0..fw.edge_count() {
        let (l, r) = (emb.face_of(2 * k), emb.face_of(2 * k + 1));
        let (i, j) = fw.edges()[k];
        for v in [i, j] {
            let p = fw.position(v);
            closure_defect = closure_defect.max((height_of(l, p) - height_of(r, p)).abs());
        }
    }
    let lift_scale = fw.scale().powi(2) * stress.max_abs();
    let allowed = emb.tolerance().eps_stress * lift_scale.max(f64::MIN_POSITIVE);
    if closure_defect > allowed {
        return Err(Error::ClosureDefect {
            defect: closure_defect,
            tolerance: allowed,
        });
    }

    let heights = (0..fw.vertex_count())
        .map(|v| height_of(emb.face_of(emb.rotation(v)[0]), fw.position(v)))
        .collect();
    Ok(Lifting {
        gradients: planes.iter().map(|p| p.0).collect(),
        offsets: planes.iter().map(|p| p.1).collect(),
        heights,
        flip_applied,
        omega,
        closure_defect,
        embedding: emb.clone(),
    })
}

/// Plane on the far side of dart `d`, given the plane `(a, b)` on its left.
fn cross_edge(fw: &Framework, omega: &[f64], d: usize, a: Vector2, b: f64) -> (Vector2, f64) {
    let k = d / 2;
    let (i, j) = fw.edges()[k];
    let (p, q) = if d.is_multiple_of(2) { (i, j) } else { (j, i) };
    let (pp, pq) = (fw.position(p), fw.position(q));
    // For the backward dart the face on the left of the edge's forward
    // orientation is the far side, so the same rule applies with p and q
    // swapped.
    let a2 = a + omega[k] * rotate90(pq - pp);
    let b2 = b + (a - a2).dot(pp.to_vector());
    (a2, b2)
}

/// Largest gap between a face plane and the height of one of its vertices.
pub fn coplanarity_check(lift: &Lifting) -> f64 {
    let emb = &lift.embedding;
    let mut worst = 0.0f64;
    for f in 0..emb.face_count() {
        for v in emb.face_vertices(f) {
            worst = worst.max((lift.plane_at(f, emb.point(v)) - lift.heights[v]).abs());
        }
    }
    worst
}

/// One point per face at its gradient, joined across every edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradientDiagram {
    pub vertices: Vec<Point2>,
    pub edges: Vec<(usize, usize)>,
}

impl GradientDiagram {
    pub fn framework(&self) -> Result<Framework> {
        Framework::new(self.vertices.clone(), self.edges.clone())
    }
}

pub fn gradient_diagram(lift: &Lifting) -> GradientDiagram {
    let emb = &lift.embedding;
    GradientDiagram {
        vertices: lift.gradients.iter().map(|a| a.to_point()).collect(),
        edges: (0..emb.edge_count())
            .map(|k| (emb.face_of(2 * k), emb.face_of(2 * k + 1)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::Tolerance;
    use crate::plane_graph::build_embedding;
    use crate::rigidity::unique_stress;

    fn k4() -> (PlaneEmbedding, SelfStress) {
        let fw = fixtures::k4();
        let t = Tolerance::default();
        (build_embedding(&fw, &t).unwrap(), unique_stress(&fw, &t).unwrap())
    }

    #[test]
    fn k4_pyramid() {
        let (emb, s) = k4();
        let lift = maxwell_lifting(&emb, &s).unwrap();
        assert!(!lift.flip_applied);
        assert!((lift.heights[3] - 4.0 / 3.0).abs() < 1e-12);
        for v in 0..3 {
            assert!(lift.heights[v].abs() < 1e-12);
        }
        assert!(coplanarity_check(&lift) < 1e-12);
        // Face ABH: gradient normal to AB with magnitude |ω_AB| |AB| = 4/3.
        let abh = (0..4).find(|&f| {
            let mut vs = emb.face_vertices(f);
            vs.sort();
            vs == vec![0, 1, 3]
        });
        let a = lift.gradients[abh.unwrap()];
        assert!((a.dx).abs() < 1e-12 && (a.dy - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn negated_stress_is_flipped_back() {
        let (emb, s) = k4();
        let lift = maxwell_lifting(&emb, &s.negated()).unwrap();
        assert!(lift.flip_applied);
        assert!((lift.heights[3] - 4.0 / 3.0).abs() < 1e-12);
        for k in 0..3 {
            assert!(lift.is_valley(k));
        }
        for k in 3..6 {
            assert!(!lift.is_valley(k));
        }
    }

    #[test]
    fn zero_stress_is_flat() {
        let (emb, _) = k4();
        let zero = SelfStress::new(emb.framework(), vec![0.0; 6]).unwrap();
        let lift = maxwell_lifting(&emb, &zero).unwrap();
        assert!(lift.heights.iter().all(|&h| h == 0.0));
        assert_eq!(coplanarity_check(&lift), 0.0);
        assert!(gradient_diagram(&lift).vertices.iter().all(|p| *p == Point2::ORIGIN));
    }

    #[test]
    fn heights_scale_linearly() {
        let (emb, s) = k4();
        let base = maxwell_lifting(&emb, &s).unwrap();
        let scaled = maxwell_lifting(&emb, &s.scaled(2.5)).unwrap();
        for (h1, h2) in base.heights.iter().zip(&scaled.heights) {
            assert!((2.5 * h1 - h2).abs() < 1e-12);
        }
    }

    #[test]
    fn tree_order_does_not_matter() {
        let (emb, s) = k4();
        let a = maxwell_lifting_with(&emb, &s, TreeOrder::BreadthFirst).unwrap();
        let b = maxwell_lifting_with(&emb, &s, TreeOrder::DepthFirst).unwrap();
        for f in 0..emb.face_count() {
            assert!((a.gradients[f] - b.gradients[f]).norm() < 1e-12);
            assert!((a.offsets[f] - b.offsets[f]).abs() < 1e-12);
        }
    }

    #[test]
    fn injected_offset_fault_shows_in_residual() {
        let (emb, s) = k4();
        let mut lift = maxwell_lifting(&emb, &s).unwrap();
        let f = (0..4).find(|&f| f != emb.outer_face()).unwrap();
        lift.offsets[f] += 1e-3;
        assert!((coplanarity_check(&lift) - 1e-3).abs() < 1e-9);
    }

    #[test]
    fn gradient_diagram_matches_maxwell_reciprocal() {
        let (emb, s) = k4();
        let lift = maxwell_lifting(&emb, &s).unwrap();
        let g = gradient_diagram(&lift);
        let m = crate::reciprocal::maxwell_reciprocal(&emb, &s).unwrap();
        for f in 0..emb.face_count() {
            assert!((g.vertices[f] - m.vertices[m.face_map[f]]).norm() < 1e-12);
        }
    }
}
