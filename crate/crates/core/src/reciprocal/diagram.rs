//! Cremona and Maxwell reciprocal diagrams.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::geometry::{rotate90, Point2, Tolerance, Vector2};
use crate::plane_graph::{build_embedding, PlaneEmbedding};
use crate::rigidity::{restrict_to_support, SelfStress, Support};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Dual edges parallel to primal edges.
    Cremona,
    /// Dual edges perpendicular to primal edges.
    Maxwell,
}

/// A reciprocal drawn on the dual of the stress support.
///
/// Dual vertex `f` sits at the position of support face `f`. Dual edge `k`
/// belongs to support edge `k` and runs from the face left of the edge's
/// forward dart to the face on its right; in cremona mode its vector is
/// `ω_k (p_j - p_i)` for support edge `(i, j)`.
#[derive(Debug, Clone)]
pub struct ReciprocalDiagram {
    pub mode: Mode,
    pub vertices: Vec<Point2>,
    pub edges: Vec<(usize, usize)>,
    /// Input-framework edge of each dual edge.
    pub edge_map: Vec<usize>,
    /// Input-framework vertex of each dual face (one per support vertex).
    pub vertex_map: Vec<usize>,
    /// Dual vertex of every face of the input embedding; faces separated by
    /// zero-stress edges share one.
    pub face_map: Vec<usize>,
    /// Input-embedding faces whose dual vertices were fused, one pair per
    /// dropped edge.
    pub fused: Vec<(usize, usize)>,
    /// Dual vertex placed at the origin: the outer face.
    pub anchor: usize,
    /// Stress on the dual edges: `1 / ω`.
    pub dual_stress: Vec<f64>,
    pub closure_defect: f64,
    pub support: Support,
    pub support_embedding: PlaneEmbedding,
}

impl ReciprocalDiagram {
    /// The reciprocal as a framework; fails when two dual edges join the same
    /// pair of dual vertices.
    pub fn framework(&self) -> Result<Framework> {
        Framework::new(self.vertices.clone(), self.edges.clone())
    }

    pub fn edge_vector(&self, k: usize) -> Vector2 {
        let (a, b) = self.edges[k];
        self.vertices[b] - self.vertices[a]
    }

    /// The same diagram in the other mode.
    pub fn rotated(&self) -> ReciprocalDiagram {
        let mut out = self.clone();
        out.mode = match self.mode {
            Mode::Cremona => Mode::Maxwell,
            Mode::Maxwell => Mode::Cremona,
        };
        out.vertices = self
            .vertices
            .iter()
            .map(|p| {
                let v = match self.mode {
                    Mode::Cremona => rotate90(p.to_vector()),
                    Mode::Maxwell => -rotate90(p.to_vector()),
                };
                v.to_point()
            })
            .collect();
        out
    }

    pub fn scale(&self) -> f64 {
        self.vertices.iter().map(Point2::magnitude).fold(0.0, f64::max)
    }
}

/// Builds the cremona reciprocal of `stress` on its support.
///
/// The outer face sits at the origin and the others are reached by a
/// breadth-first walk over the dual graph. Every dual cycle must close up to
/// `eps_stress · scale · ‖ω‖∞`, which is exactly vertex equilibrium.
pub fn cremona_reciprocal(emb: &PlaneEmbedding, stress: &SelfStress) -> Result<ReciprocalDiagram> {
    let fw = emb.framework();
    let tol = emb.tolerance();
    let support = restrict_to_support(fw, stress, tol)?;
    if support.framework.edge_count() == 0 {
        return Err(Error::NoStress);
    }
    if let Some(v) = support.framework.cut_vertex() {
        return Err(Error::NotBiconnected(support.vertex_map[v]));
    }
    let sup_emb = if support.dropped.is_empty() {
        emb.clone()
    } else {
        build_embedding(&support.framework, tol)?
    };
    let omega = &support.stress.omega;
    let sfw = &support.framework;
    let nf = sup_emb.face_count();
    let edge_vec = |k: usize| {
        let (i, j) = sfw.edges()[k];
        omega[k] * (sfw.position(j) - sfw.position(i))
    };

    let mut pos: Vec<Option<Vector2>> = vec![None; nf];
    let anchor = sup_emb.outer_face();
    pos[anchor] = Some(Vector2::ZERO);
    let mut queue = VecDeque::from([anchor]);
    while let Some(f) = queue.pop_front() {
        let here = pos[f].expect("visited");
        for &d in sup_emb.face(f) {
            let other = sup_emb.face_of(d ^ 1);
            if pos[other].is_some() {
                continue;
            }
            // Face f is left of d; crossing to its right adds the dual vector
            // of the forward dart, or subtracts it for a backward one.
            let v = edge_vec(d / 2);
            pos[other] = Some(if d % 2 == 0 { here + v } else { here - v });
            queue.push_back(other);
        }
    }
    let pos: Vec<Vector2> = pos.into_iter().map(|p| p.expect("dual graph is connected")).collect();

    let edges: Vec<(usize, usize)> = (0..sfw.edge_count())
        .map(|k| (sup_emb.face_of(2 * k), sup_emb.face_of(2 * k + 1)))
        .collect();
    let closure_defect = edges
        .iter()
        .enumerate()
        .map(|(k, &(l, r))| (pos[r] - pos[l] - edge_vec(k)).norm())
        .fold(0.0, f64::max);
    let allowed = tol.eps_stress * fw.scale().max(f64::MIN_POSITIVE) * support.stress.max_abs();
    if closure_defect > allowed {
        return Err(Error::ClosureDefect {
            defect: closure_defect,
            tolerance: allowed,
        });
    }

    let (face_map, fused) = fuse_faces(emb, &support, &sup_emb);
    Ok(ReciprocalDiagram {
        mode: Mode::Cremona,
        vertices: pos.iter().map(|v| v.to_point()).collect(),
        edges,
        edge_map: support.edge_map.clone(),
        vertex_map: support.vertex_map.clone(),
        face_map,
        fused,
        anchor,
        dual_stress: omega.iter().map(|w| 1.0 / w).collect(),
        closure_defect,
        support,
        support_embedding: sup_emb,
    })
}

/// Cremona reciprocal turned a quarter turn counter-clockwise about the anchor.
pub fn maxwell_reciprocal(emb: &PlaneEmbedding, stress: &SelfStress) -> Result<ReciprocalDiagram> {
    Ok(cremona_reciprocal(emb, stress)?.rotated())
}

/// Maps each face of the full embedding to its support face, merging faces
/// across dropped edges.
fn fuse_faces(emb: &PlaneEmbedding, support: &Support, sup_emb: &PlaneEmbedding) -> (Vec<usize>, Vec<(usize, usize)>) {
    let nf = emb.face_count();
    let mut parent: Vec<usize> = (0..nf).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut fused = Vec::new();
    for &k in &support.dropped {
        let (a, b) = (emb.face_of(2 * k), emb.face_of(2 * k + 1));
        fused.push((a, b));
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut class_face = vec![usize::MAX; nf];
    for (sk, &k) in support.edge_map.iter().enumerate() {
        for dir in 0..2 {
            let f = find(&mut parent, emb.face_of(2 * k + dir));
            class_face[f] = sup_emb.face_of(2 * sk + dir);
        }
    }
    let face_map = (0..nf).map(|f| class_face[find(&mut parent, f)]).collect();
    (face_map, fused)
}

/// True iff corresponding edges are parallel within `eps_geom` radians and
/// the edges bounding each face of `emb1` meet at a common vertex of `fw2`.
pub fn is_reciprocal_pair(
    emb1: &PlaneEmbedding,
    fw2: &Framework,
    correspondence: &[usize],
    tol: &Tolerance,
) -> Result<bool> {
    let fw1 = emb1.framework();
    let m = fw1.edge_count();
    if correspondence.len() != m || fw2.edge_count() != m {
        return Err(Error::NotBijective);
    }
    let mut seen = vec![false; m];
    for &c in correspondence {
        if c >= m || seen[c] {
            return Err(Error::NotBijective);
        }
        seen[c] = true;
    }
    let parallel = fw1.edges().iter().zip(correspondence).all(|(&(a, b), &c)| {
        let (x, y) = fw2.edges()[c];
        let u = fw1.position(b) - fw1.position(a);
        let v = fw2.position(y) - fw2.position(x);
        let (nu, nv) = (u.norm(), v.norm());
        nu > 0.0 && nv > 0.0 && (u.cross(v) / (nu * nv)).abs() <= tol.eps_geom
    });
    let incident = emb1.faces().iter().all(|cycle| {
        let mut common: Option<Vec<usize>> = None;
        for &d in cycle {
            let (x, y) = fw2.edges()[correspondence[d / 2]];
            common = Some(match common {
                None => vec![x, y],
                Some(c) => c.into_iter().filter(|&v| v == x || v == y).collect(),
            });
        }
        common.is_some_and(|c| !c.is_empty())
    });
    Ok(parallel && incident)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rigidity::unique_stress;

    fn k4() -> (PlaneEmbedding, SelfStress) {
        let fw = fixtures::k4();
        let t = Tolerance::default();
        (build_embedding(&fw, &t).unwrap(), unique_stress(&fw, &t).unwrap())
    }

    #[test]
    fn k4_cremona_lengths_and_directions() {
        let (emb, s) = k4();
        let r = cremona_reciprocal(&emb, &s).unwrap();
        assert_eq!(r.vertices.len(), 4);
        assert_eq!(r.vertices[r.anchor], Point2::ORIGIN);
        let fw = emb.framework();
        for k in 0..6 {
            let (i, j) = fw.edges()[k];
            let u = fw.position(j) - fw.position(i);
            let v = r.edge_vector(k);
            assert!((u.cross(v) / (u.norm() * v.norm())).abs() < 1e-12);
            assert!((v.norm() - s.omega[k].abs() * u.norm()).abs() < 1e-12);
        }
        // AB has length 4 and stress -1/3.
        assert!((r.edge_vector(0).norm() - 4.0 / 3.0).abs() < 1e-12);
        assert!(r.closure_defect < 1e-12);
    }

    #[test]
    fn maxwell_is_perpendicular() {
        let (emb, s) = k4();
        let r = maxwell_reciprocal(&emb, &s).unwrap();
        let fw = emb.framework();
        for k in 0..6 {
            let (i, j) = fw.edges()[k];
            let u = fw.position(j) - fw.position(i);
            assert!(u.dot(r.edge_vector(k)).abs() < 1e-12);
        }
        let twice = r.rotated().rotated();
        assert_eq!(twice.mode, Mode::Maxwell);
    }

    #[test]
    fn double_rotation_is_point_reflection() {
        let (emb, s) = k4();
        let c = cremona_reciprocal(&emb, &s).unwrap();
        let m = maxwell_reciprocal(&emb, &s).unwrap();
        for (p, q) in c.vertices.iter().zip(&m.vertices) {
            let rr = rotate90(q.to_vector());
            assert!((rr + p.to_vector()).norm() < 1e-12);
        }
    }

    #[test]
    fn reciprocal_pair_checks() {
        let (emb, s) = k4();
        let r = cremona_reciprocal(&emb, &s).unwrap();
        let t = Tolerance::default();
        let id: Vec<usize> = (0..6).collect();
        let dual = r.framework().unwrap();
        assert!(is_reciprocal_pair(&emb, &dual, &id, &t).unwrap());
        let mut moved = r.vertices.clone();
        moved[1] = moved[1] + Vector2::new(0.1, 0.0);
        let moved = Framework::new(moved, r.edges.clone()).unwrap();
        assert!(!is_reciprocal_pair(&emb, &moved, &id, &t).unwrap());
        assert_eq!(
            is_reciprocal_pair(&emb, &dual, &[0, 0, 1, 2, 3, 4], &t),
            Err(Error::NotBijective)
        );
        // Symmetric: the reciprocal's embedding paired back with the original.
        let dual_emb = build_embedding(&dual, &t).unwrap();
        assert!(is_reciprocal_pair(&dual_emb, emb.framework(), &id, &t).unwrap());
    }

    #[test]
    fn non_equilibrium_is_rejected() {
        let (emb, s) = k4();
        let mut bad = s.clone();
        bad.omega[0] = -0.5;
        let bad = SelfStress::new(emb.framework(), bad.omega).unwrap();
        assert!(matches!(
            cremona_reciprocal(&emb, &bad),
            Err(Error::ClosureDefect { .. })
        ));
    }

    #[test]
    fn dual_stress_is_an_equilibrium() {
        let (emb, s) = k4();
        let r = cremona_reciprocal(&emb, &s).unwrap();
        let dual = r.framework().unwrap();
        let res = crate::rigidity::equilibrium_residual(&dual, &r.dual_stress);
        assert!(res < 1e-12, "{res}");
    }
}
