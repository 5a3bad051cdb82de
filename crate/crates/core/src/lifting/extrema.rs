//! Local extrema of a lifted surface and pointedness of lifted vertices.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use super::surface::Lifting;
use crate::error::Result;
use crate::geometry::Vector2;
use crate::plane_graph::AngleKind;
use crate::rigidity::is_good_self_stress;
use crate::rigidity::SelfStress;

/// A connected set of vertices and horizontal faces at one height.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub vertices: Vec<usize>,
    pub faces: Vec<usize>,
    pub height: f64,
}

impl Extremum {
    pub fn is_single_vertex(&self, v: usize) -> bool {
        self.vertices == [v] && self.faces.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremumReport {
    pub maxima: Vec<Extremum>,
    pub minima: Vec<Extremum>,
    /// Every face is horizontal; extrema are not meaningful.
    pub flat: bool,
    pub distinguished_vertex: Option<usize>,
    pub unique_max_at_distinguished: bool,
    /// The only local minimum is the outer face together with its boundary.
    pub unique_min_is_outer_face: bool,
}

/// Supremum of the slope `a · u` over unit directions `u` in the wedge of
/// the angle at out-dart `d`.
fn wedge_sup(lift: &Lifting, d: usize, a: Vector2) -> f64 {
    let emb = &lift.embedding;
    let rec = emb.angle(d);
    let unit = |d: usize| {
        let v = emb.point(emb.head(d)) - emb.point(emb.tail(d));
        v * (1.0 / v.norm())
    };
    let u1 = unit(d);
    let u2 = unit(emb.rot_next(d));
    let mut best = a.dot(u1).max(a.dot(u2));
    let n = a.norm();
    if n > 0.0 {
        let mut phi = u1.cross(a).atan2(u1.dot(a));
        if phi < 0.0 {
            phi += std::f64::consts::TAU;
        }
        if phi < rec.measure {
            best = best.max(n);
        }
    }
    best
}

/// Whether some direction out of `v` climbs (`sign = 1`) or descends
/// (`sign = -1`) at slope above `eps`.
fn has_direction(lift: &Lifting, v: usize, sign: f64, eps: f64) -> bool {
    let emb = &lift.embedding;
    emb.rotation(v)
        .iter()
        .any(|&d| wedge_sup(lift, d, sign * lift.gradients[emb.face_of(d)]) > eps)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let nx = self.0[x];
            self.0[x] = r;
            x = nx;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Finds local maxima and minima, treating horizontal faces and edges at
/// equal height as plateaus.
pub fn extremum_report(lift: &Lifting) -> Result<ExtremumReport> {
    let emb = &lift.embedding;
    let fw = emb.framework();
    let tol = emb.tolerance();
    let (n, nf) = (fw.vertex_count(), emb.face_count());
    let eps_slope = tol.eps_stress * lift.slope_scale();
    let eps_h = tol.eps_stress * lift.height_scale();
    let horizontal: Vec<bool> = lift.gradients.iter().map(|a| a.norm() <= eps_slope).collect();
    let flat = horizontal.iter().all(|&h| h);

    let stress = SelfStress::new(fw, lift.omega.clone())?;
    let distinguished_vertex = is_good_self_stress(emb, &stress)?.distinguished_vertex;
    if flat {
        return Ok(ExtremumReport {
            maxima: Vec::new(),
            minima: Vec::new(),
            flat,
            distinguished_vertex,
            unique_max_at_distinguished: false,
            unique_min_is_outer_face: false,
        });
    }

    let mut dsu = Dsu((0..n + nf).collect());
    for (f, &h) in horizontal.iter().enumerate() {
        if h {
            for v in emb.face_vertices(f) {
                dsu.union(v, n + f);
            }
        }
    }
    for &(u, w) in fw.edges() {
        if (lift.heights[u] - lift.heights[w]).abs() <= eps_h {
            dsu.union(u, w);
        }
    }
    let up: Vec<bool> = (0..n).map(|v| has_direction(lift, v, 1.0, eps_slope)).collect();
    let down: Vec<bool> = (0..n).map(|v| has_direction(lift, v, -1.0, eps_slope)).collect();

    let mut groups: std::collections::BTreeMap<usize, Extremum> = Default::default();
    let mut blocked_max = vec![false; n + nf];
    let mut blocked_min = vec![false; n + nf];
    for node in 0..n + nf {
        if node >= n && !horizontal[node - n] {
            continue;
        }
        let r = dsu.find(node);
        let entry = groups.entry(r).or_insert_with(|| Extremum {
            vertices: Vec::new(),
            faces: Vec::new(),
            height: 0.0,
        });
        if node < n {
            entry.vertices.push(node);
            entry.height = lift.heights[node];
            blocked_max[r] |= up[node];
            blocked_min[r] |= down[node];
        } else {
            entry.faces.push(node - n);
        }
    }
    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    for (r, g) in groups {
        if !blocked_max[r] {
            maxima.push(g.clone());
        }
        if !blocked_min[r] {
            minima.push(g);
        }
    }

    let unique_max_at_distinguished = match (distinguished_vertex, maxima.as_slice()) {
        (Some(h), [m]) => m.is_single_vertex(h),
        _ => false,
    };
    let outer = emb.outer_face();
    let mut boundary = emb.face_vertices(outer);
    boundary.sort_unstable();
    boundary.dedup();
    let unique_min_is_outer_face = match minima.as_slice() {
        [m] => m.faces == [outer] && m.vertices == boundary,
        _ => false,
    };
    Ok(ExtremumReport {
        maxima,
        minima,
        flat,
        distinguished_vertex,
        unique_max_at_distinguished,
        unique_min_is_outer_face,
    })
}

/// Vertices whose lifted neighborhood lies strictly on one side of some
/// plane through the lifted vertex.
pub fn pointedness_at_peak(lift: &Lifting) -> Vec<usize> {
    (0..lift.embedding.vertex_count())
        .filter(|&v| lifted_vertex_is_pointed(lift, v))
        .collect()
}

/// Requires every angle at `v` to be convex, then solves the small linear
/// program `max t` subject to `g · ê_k - δ_k ≥ t` over the incident edges,
/// where `ê_k` is the unit edge direction and `δ_k` the slope along it. The
/// optimum sits where three constraints are tight, so all triples are tried.
pub fn lifted_vertex_is_pointed(lift: &Lifting, v: usize) -> bool {
    let emb = &lift.embedding;
    let rot = emb.rotation(v);
    if rot.len() < 3 || rot.iter().any(|&d| emb.angle(d).kind != AngleKind::Convex) {
        return false;
    }
    let eps = emb.tolerance().eps_stress * lift.slope_scale();
    let rows: Vec<(Vector2, f64)> = rot
        .iter()
        .map(|&d| {
            let w = emb.head(d);
            let e = emb.point(w) - emb.point(v);
            let len = e.norm();
            (e * (1.0 / len), (lift.heights[w] - lift.heights[v]) / len)
        })
        .collect();
    [1.0, -1.0].iter().any(|&s| {
        let signed: Vec<(Vector2, f64)> = rows.iter().map(|&(u, dl)| (u, s * dl)).collect();
        best_margin(&signed).is_some_and(|t| t > eps)
    })
}

fn best_margin(rows: &[(Vector2, f64)]) -> Option<f64> {
    let k = rows.len();
    let mut best: Option<f64> = None;
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let idx = [i, j, l];
                let m = Matrix3::from_fn(|r, c| {
                    let (u, _) = rows[idx[r]];
                    [u.dx, u.dy, -1.0][c]
                });
                let rhs = Vector3::from_fn(|r, _| rows[idx[r]].1);
                let Some(sol) = m.lu().solve(&rhs) else { continue };
                let (g, t) = (Vector2::new(sol[0], sol[1]), sol[2]);
                if !t.is_finite() {
                    continue;
                }
                let feasible = rows.iter().all(|&(u, dl)| g.dot(u) - dl >= t - 1e-12 * (1.0 + t.abs()));
                if feasible && best.is_none_or(|b| t > b) {
                    best = Some(t);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::Tolerance;
    use crate::lifting::maxwell_lifting;
    use crate::plane_graph::build_embedding;
    use crate::rigidity::unique_stress;

    fn k4_lift() -> Lifting {
        let fw = fixtures::k4();
        let t = Tolerance::default();
        let emb = build_embedding(&fw, &t).unwrap();
        maxwell_lifting(&emb, &unique_stress(&fw, &t).unwrap()).unwrap()
    }

    #[test]
    fn k4_extrema() {
        let lift = k4_lift();
        let r = extremum_report(&lift).unwrap();
        assert_eq!(r.distinguished_vertex, Some(3));
        assert!(r.unique_max_at_distinguished, "{:?}", r.maxima);
        assert!(r.unique_min_is_outer_face, "{:?}", r.minima);
        assert_eq!(pointedness_at_peak(&lift), vec![3]);
    }

    #[test]
    fn flat_lift_is_flagged() {
        let fw = fixtures::k4();
        let t = Tolerance::default();
        let emb = build_embedding(&fw, &t).unwrap();
        let zero = SelfStress::new(&fw, vec![0.0; 6]).unwrap();
        let lift = maxwell_lifting(&emb, &zero).unwrap();
        assert!(extremum_report(&lift).unwrap().flat);
        assert!(pointedness_at_peak(&lift).is_empty());
    }

    #[test]
    fn margin_of_symmetric_star() {
        // Three unit directions at 120 degrees, all descending with slope 1:
        // the horizontal plane clears them by exactly 1.
        let rows: Vec<(Vector2, f64)> = (0..3)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 3.0;
                (Vector2::new(a.cos(), a.sin()), -1.0)
            })
            .collect();
        assert!((best_margin(&rows).unwrap() - 1.0).abs() < 1e-12);
    }
}
