//! Self-stresses: the left null space of the rigidity matrix.

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::matrix::{numerical_rank, rigidity_matrix};
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::geometry::{Tolerance, Vector2};
use crate::plane_graph::{self, PlaneEmbedding};

/// Per-edge scalars with their worst vertex equilibrium violation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelfStress {
    pub omega: Vec<f64>,
    pub residual: f64,
}

impl SelfStress {
    pub fn new(fw: &Framework, omega: Vec<f64>) -> Result<Self> {
        if omega.len() != fw.edge_count() {
            return Err(Error::StressLength {
                expected: fw.edge_count(),
                found: omega.len(),
            });
        }
        if omega.iter().any(|w| !w.is_finite()) {
            return Err(Error::Validation("stress has a non-finite entry".into()));
        }
        let residual = equilibrium_residual(fw, &omega);
        Ok(Self { omega, residual })
    }

    pub fn max_abs(&self) -> f64 {
        self.omega.iter().fold(0.0, |m, w| m.max(w.abs()))
    }

    /// Whether edge `k` counts as stressed: `|ω_k| > eps_stress · ‖ω‖∞`.
    pub fn is_stressed(&self, k: usize, tol: &Tolerance) -> bool {
        let max = self.max_abs();
        max > 0.0 && self.omega[k].abs() > tol.eps_stress * max
    }

    pub fn support_mask(&self, tol: &Tolerance) -> Vec<bool> {
        (0..self.omega.len()).map(|k| self.is_stressed(k, tol)).collect()
    }

    pub fn is_nowhere_zero(&self, tol: &Tolerance) -> bool {
        self.support_mask(tol).iter().all(|&s| s)
    }

    pub fn is_zero(&self, tol: &Tolerance) -> bool {
        !self.support_mask(tol).iter().any(|&s| s)
    }

    /// `+1`, `-1`, or `0` below the zero threshold.
    pub fn signs(&self, tol: &Tolerance) -> Vec<i8> {
        (0..self.omega.len())
            .map(|k| {
                if !self.is_stressed(k, tol) {
                    0
                } else if self.omega[k] > 0.0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Edges whose magnitude is within a factor 100 of the zero threshold on
    /// either side; their classification is tolerance-sensitive.
    pub fn near_threshold(&self, tol: &Tolerance) -> Vec<usize> {
        let max = self.max_abs();
        let lo = tol.eps_stress * max / 100.0;
        let hi = tol.eps_stress * max * 100.0;
        (0..self.omega.len())
            .filter(|&k| {
                let w = self.omega[k].abs();
                w > lo && w < hi
            })
            .collect()
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            omega: self.omega.iter().map(|w| c * w).collect(),
            residual: self.residual * c.abs(),
        }
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1.0)
    }

    /// Whether the residual is within `eps_stress · scale · ‖ω‖∞`.
    pub fn is_equilibrium(&self, fw: &Framework, tol: &Tolerance) -> bool {
        self.residual <= tol.eps_stress * fw.scale().max(1.0) * self.max_abs().max(f64::MIN_POSITIVE)
    }
}

/// Largest norm of `Σ_j ω_ij (p_i - p_j)` over vertices.
pub fn equilibrium_residual(fw: &Framework, omega: &[f64]) -> f64 {
    let mut force = vec![Vector2::ZERO; fw.vertex_count()];
    for (k, &(i, j)) in fw.edges().iter().enumerate() {
        let d = fw.position(i) - fw.position(j);
        force[i] = force[i] + omega[k] * d;
        force[j] = force[j] - omega[k] * d;
    }
    force.iter().map(|f| f.norm()).fold(0.0, f64::max)
}

/// Basis of the self-stress space: mutually orthogonal vectors, each scaled to
/// unit max-norm and signed so that the outer boundary carries negative total
/// stress. When no plane embedding exists the largest entry is made negative
/// instead.
pub fn self_stress_space(fw: &Framework, tol: &Tolerance) -> Vec<SelfStress> {
    let e = fw.edge_count();
    if e == 0 {
        return Vec::new();
    }
    let r = rigidity_matrix(fw);
    // Null space of R^T from the right factor of R^T padded with zero rows to
    // E x E. The left factor is unreliable for exactly zero singular values.
    let mut padded = DMatrix::zeros(e.max(r.ncols()), e);
    padded.view_mut((0, 0), (r.ncols(), e)).copy_from(&r.transpose());
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let sv = &svd.singular_values;
    let max = sv.max();
    let boundary = plane_graph::build_embedding(fw, tol)
        .ok()
        .map(|emb| boundary_edges(&emb));

    (0..sv.len())
        .filter(|&i| max == 0.0 || sv[i] <= tol.eps_rank * max)
        .map(|i| {
            let mut omega: Vec<f64> = v_t.row(i).iter().copied().collect();
            let scale = omega.iter().fold(0.0f64, |m, w| m.max(w.abs()));
            for w in &mut omega {
                *w /= scale;
            }
            orient(&mut omega, boundary.as_deref(), tol);
            SelfStress::new(fw, omega).expect("length matches")
        })
        .collect()
}

fn orient(omega: &mut [f64], boundary: Option<&[usize]>, tol: &Tolerance) {
    let total: f64 = boundary.map(|b| b.iter().map(|&k| omega[k]).sum()).unwrap_or(0.0);
    let flip = if total.abs() > tol.eps_stress {
        total > 0.0
    } else {
        let big = omega
            .iter()
            .copied()
            .fold(0.0f64, |m, w| if w.abs() > m.abs() { w } else { m });
        big > 0.0
    };
    if flip {
        for w in omega.iter_mut() {
            *w = -*w;
        }
    }
}

/// Edges on the outer face boundary, without repetition.
pub fn boundary_edges(emb: &PlaneEmbedding) -> Vec<usize> {
    let mut ks: Vec<usize> = emb.face(emb.outer_face()).iter().map(|&d| d / 2).collect();
    ks.sort_unstable();
    ks.dedup();
    ks
}

pub fn stress_dimension(fw: &Framework, tol: &Tolerance) -> usize {
    fw.edge_count() - numerical_rank(&rigidity_matrix(fw), tol.eps_rank)
}

/// The stress of a framework whose stress space is one-dimensional.
pub fn unique_stress(fw: &Framework, tol: &Tolerance) -> Result<SelfStress> {
    let mut basis = self_stress_space(fw, tol);
    match basis.len() {
        0 => Err(Error::NoStress),
        1 => Ok(basis.remove(0)),
        d => Err(Error::AmbiguousStress(d)),
    }
}

/// Random combination of basis stresses with coefficients uniform in
/// `[-1, 1]`, rescaled to unit max-norm. Makes no completeness claim.
pub fn random_combination<R: Rng>(fw: &Framework, basis: &[SelfStress], rng: &mut R) -> Result<SelfStress> {
    if basis.is_empty() {
        return Err(Error::NoStress);
    }
    let mut omega = vec![0.0; fw.edge_count()];
    for b in basis {
        let c: f64 = rng.random_range(-1.0..=1.0);
        for (w, bw) in omega.iter_mut().zip(&b.omega) {
            *w += c * bw;
        }
    }
    let max = omega.iter().fold(0.0f64, |m, w| m.max(w.abs()));
    if max > 0.0 {
        for w in &mut omega {
            *w /= max;
        }
    }
    SelfStress::new(fw, omega)
}

/// True iff the stress-space dimension is at most the number of non-pointed
/// vertices, with equality for pseudo-triangulations.
pub fn stress_dimension_bound_check(fw: &Framework, emb: &PlaneEmbedding, tol: &Tolerance) -> bool {
    let dim = stress_dimension(fw, tol);
    let x = plane_graph::non_pointed_count(emb);
    dim <= x && (!plane_graph::is_pseudo_triangulation(emb) || dim == x)
}

/// The stressed subframework.
#[derive(Debug, Clone, PartialEq)]
pub struct Support {
    pub framework: Framework,
    /// Original index of each support vertex.
    pub vertex_map: Vec<usize>,
    /// Original index of each support edge.
    pub edge_map: Vec<usize>,
    /// Stress restricted to the support edges.
    pub stress: SelfStress,
    /// Original edges below the zero threshold.
    pub dropped: Vec<usize>,
}

impl Support {
    pub fn spans_all_vertices(&self, n: usize) -> bool {
        self.vertex_map.len() == n
    }
}

pub fn restrict_to_support(fw: &Framework, stress: &SelfStress, tol: &Tolerance) -> Result<Support> {
    if stress.omega.len() != fw.edge_count() {
        return Err(Error::StressLength {
            expected: fw.edge_count(),
            found: stress.omega.len(),
        });
    }
    let mask = stress.support_mask(tol);
    let dropped = (0..mask.len()).filter(|&k| !mask[k]).collect();
    let (framework, vertex_map, edge_map) = fw.restrict(&mask);
    let omega = edge_map.iter().map(|&k| stress.omega[k]).collect();
    let stress = SelfStress::new(&framework, omega)?;
    Ok(Support {
        framework,
        vertex_map,
        edge_map,
        stress,
        dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::Point2;
    use proptest::prelude::*;

    #[test]
    fn triangle_has_no_stress() {
        let tri = Framework::new(
            vec![Point2::new(0., 0.), Point2::new(1., 0.), Point2::new(0., 1.)],
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap();
        assert!(self_stress_space(&tri, &Tolerance::default()).is_empty());
        assert_eq!(unique_stress(&tri, &Tolerance::default()), Err(Error::NoStress));
    }

    #[test]
    fn k4_stress_matches_hand_solution() {
        let fw = fixtures::k4();
        let s = unique_stress(&fw, &Tolerance::default()).unwrap();
        // Edges AB, BC, CA, HA, HB, HC.
        let expect = [-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 1.0, 1.0, 1.0];
        for (w, e) in s.omega.iter().zip(expect) {
            assert!((w - e).abs() < 1e-12, "{w} vs {e}");
        }
        assert!(s.residual < 1e-12);
    }

    #[test]
    fn k4_hand_stress_is_in_equilibrium() {
        // Independent check: H = barycenter of ABC, so spokes balance with
        // equal weights; at A the spoke force (2,1) cancels against the rim.
        let fw = fixtures::k4();
        let omega = vec![-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 1.0, 1.0, 1.0];
        assert!(equilibrium_residual(&fw, &omega) < 1e-15);
    }

    #[test]
    fn dimension_bound_on_k4_subgraphs() {
        let fw = fixtures::k4();
        let t = Tolerance::default();
        for mask in 1u32..64 {
            let keep: Vec<bool> = (0..6).map(|k| mask >> k & 1 == 1).collect();
            let (sub, _, _) = fw.restrict(&keep);
            if let Ok(emb) = plane_graph::build_embedding(&sub, &t) {
                assert!(stress_dimension_bound_check(&sub, &emb, &t), "mask {mask:b}");
            }
        }
    }

    #[test]
    fn wide_matrix_null_space_is_complete() {
        // K5 minus nothing on 5 points: 10 edges, rank 7, so 3 stresses.
        let pts = [(0., 0.), (3., 0.1), (2., 2.), (-0.5, 2.5), (1., 1.)];
        let edges: Vec<_> = (0..5).flat_map(|a| ((a + 1)..5).map(move |b| (a, b))).collect();
        let fw = Framework::new(pts.iter().map(|&(x, y)| Point2::new(x, y)).collect(), edges).unwrap();
        let basis = self_stress_space(&fw, &Tolerance::default());
        assert_eq!(basis.len(), 3);
        for s in &basis {
            assert!(s.residual < 1e-12);
            assert!((s.max_abs() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn support_restriction_drops_zero_edges() {
        let fw = fixtures::k4();
        let mut s = unique_stress(&fw, &Tolerance::default()).unwrap();
        s.omega[0] = 0.0;
        let sup = restrict_to_support(&fw, &s, &Tolerance::default()).unwrap();
        assert_eq!(sup.dropped, vec![0]);
        assert_eq!(sup.framework.edge_count(), 5);
    }

    #[test]
    fn exactly_singular_directions_are_equilibria() {
        let c = [
            1.3853939023543294,
            2.959285145978548,
            -0.698914559916045,
            0.5442080430739392,
            -3.6302555152121263,
            -2.594520872762007,
            -4.343573693989238,
            -4.08350847827339,
            -0.24763980163020882,
            1.520148223657907,
        ];
        let pts: Vec<Point2> = c.chunks(2).map(|c| Point2::new(c[0], c[1])).collect();
        let edges: Vec<_> = (0..5).flat_map(|a| ((a + 1)..5).map(move |b| (a, b))).collect();
        let fw = Framework::new(pts, edges).unwrap();
        for s in self_stress_space(&fw, &Tolerance::default()) {
            assert!(s.residual < 1e-12, "residual {:e}", s.residual);
        }
    }

    proptest! {
        #[test]
        fn basis_vectors_are_equilibria(coords in prop::collection::vec(-5.0f64..5.0, 10)) {
            let pts: Vec<Point2> = coords.chunks(2).map(|c| Point2::new(c[0], c[1])).collect();
            let edges: Vec<_> = (0..5).flat_map(|a| ((a + 1)..5).map(move |b| (a, b))).collect();
            let fw = Framework::new(pts, edges).unwrap();
            let t = Tolerance::default();
            let basis = self_stress_space(&fw, &t);
            prop_assert_eq!(basis.len(), stress_dimension(&fw, &t));
            for s in &basis {
                prop_assert!(s.is_equilibrium(&fw, &t));
            }
        }
    }
}
