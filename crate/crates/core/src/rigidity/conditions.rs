//! Face conditions, vertex conditions and bad quadrangles: the sign and
//! geometry tests that decide whether a stress has a non-crossing reciprocal.

use serde::{Deserialize, Serialize};

use super::angles::{classify_angles, AngleClassification};
use super::stress::{boundary_edges, restrict_to_support, SelfStress};
use crate::error::{Error, Result};
use crate::geometry::{polygon_is_simple, Point2, Vector2};
use crate::plane_graph::{
    build_embedding, classify_faces, classify_vertices, counting_check, FaceClass, PlaneEmbedding,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FaceCase {
    /// Strictly convex outer boundary without sign changes.
    Outer,
    /// Pseudo-triangle, two changes, both at corners.
    TriangleTwo,
    /// Pseudo-triangle, four changes, three at corners.
    TriangleFour,
    /// Pseudo-quadrangle, four changes, all at corners.
    Quadrangle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceDiagnosis {
    pub face: usize,
    pub class: FaceClass,
    pub sign_changes: usize,
    pub changes_at_corners: usize,
    pub vertex_proper: usize,
    pub case: Option<FaceCase>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceConditions {
    pub ok: bool,
    /// The vertex-proper formulation, evaluated independently.
    pub ok_by_proper_count: bool,
    pub faces: Vec<FaceDiagnosis>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexCase {
    /// Non-pointed with no sign changes.
    Distinguished,
    /// Pointed, two changes, none at the big angle.
    PointedTwo,
    /// Pointed, four changes, one at the big angle.
    PointedFour,
    /// Non-pointed with four changes.
    NonPointedFour,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexDiagnosis {
    pub vertex: usize,
    pub pointed: bool,
    pub sign_changes: usize,
    pub change_at_big_angle: bool,
    pub face_proper: usize,
    pub case: Option<VertexCase>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexConditions {
    pub ok: bool,
    pub distinguished: Option<usize>,
    pub vertices: Vec<VertexDiagnosis>,
}

fn face_case(class: FaceClass, changes: usize, at_corners: usize) -> Option<FaceCase> {
    match (class, changes, at_corners) {
        (FaceClass::OuterConvex { strict: true }, 0, _) => Some(FaceCase::Outer),
        (FaceClass::PseudoTriangle, 2, 2) => Some(FaceCase::TriangleTwo),
        (FaceClass::PseudoTriangle, 4, 3) => Some(FaceCase::TriangleFour),
        (FaceClass::PseudoQuadrangle, 4, 4) => Some(FaceCase::Quadrangle),
        _ => None,
    }
}

pub fn face_conditions_from(emb: &PlaneEmbedding, ac: &AngleClassification) -> FaceConditions {
    let faces: Vec<FaceDiagnosis> = classify_faces(emb)
        .into_iter()
        .map(|info| {
            let f = info.id;
            FaceDiagnosis {
                face: f,
                class: info.class,
                sign_changes: ac.face_changes[f],
                changes_at_corners: ac.face_changes_at_corners[f],
                vertex_proper: ac.vertex_proper_in_face[f],
                case: face_case(info.class, ac.face_changes[f], ac.face_changes_at_corners[f]),
            }
        })
        .collect();
    let ok = faces.iter().all(|d| d.case.is_some());
    let ok_by_proper_count = faces.iter().all(|d| match d.class {
        FaceClass::OuterConvex { strict: true } | FaceClass::PseudoQuadrangle => d.vertex_proper == 0,
        FaceClass::PseudoTriangle => d.vertex_proper == 1,
        _ => false,
    });
    FaceConditions {
        ok,
        ok_by_proper_count,
        faces,
    }
}

pub fn vertex_conditions_from(emb: &PlaneEmbedding, ac: &AngleClassification) -> VertexConditions {
    let vertices: Vec<VertexDiagnosis> = classify_vertices(emb)
        .into_iter()
        .map(|info| {
            let v = info.id;
            let changes = ac.vertex_changes[v];
            let big = ac.change_at_big_angle[v];
            let case = match (info.pointed, changes, big) {
                (false, 0, _) => Some(VertexCase::Distinguished),
                (true, 2, false) => Some(VertexCase::PointedTwo),
                (true, 4, true) => Some(VertexCase::PointedFour),
                (false, 4, _) => Some(VertexCase::NonPointedFour),
                _ => None,
            };
            VertexDiagnosis {
                vertex: v,
                pointed: info.pointed,
                sign_changes: changes,
                change_at_big_angle: big,
                face_proper: ac.face_proper_at_vertex[v],
                case,
            }
        })
        .collect();
    let distinguished: Vec<usize> = vertices
        .iter()
        .filter(|d| d.case == Some(VertexCase::Distinguished))
        .map(|d| d.vertex)
        .collect();
    let ok = distinguished.len() == 1 && vertices.iter().all(|d| d.case.is_some());
    VertexConditions {
        ok,
        distinguished: if distinguished.len() == 1 {
            Some(distinguished[0])
        } else {
            None
        },
        vertices,
    }
}

/// Face conditions for a stress that is nonzero on every edge of `emb`.
pub fn check_face_conditions(emb: &PlaneEmbedding, omega: &[f64]) -> Result<FaceConditions> {
    Ok(face_conditions_from(emb, &classify_angles(emb, omega)?))
}

/// Vertex conditions for a stress that is nonzero on every edge of `emb`.
pub fn check_vertex_conditions(emb: &PlaneEmbedding, omega: &[f64]) -> Result<VertexConditions> {
    Ok(vertex_conditions_from(emb, &classify_angles(emb, omega)?))
}

/// Head-to-tail polygon of the forces `ω_e (p_u - p_v)` on the edges around
/// `v`, in counter-clockwise order.
pub fn force_polygon(emb: &PlaneEmbedding, omega: &[f64], v: usize) -> Vec<Point2> {
    let p = emb.point(v);
    let mut acc = Vector2::ZERO;
    let mut poly = Vec::new();
    for &d in emb.rotation(v) {
        poly.push(acc.to_point());
        acc = acc + omega[d / 2] * (emb.point(emb.head(d)) - p);
    }
    poly
}

/// Non-pointed vertices with four sign changes whose force polygon is not
/// simple.
pub fn bad_quadrangles_from(emb: &PlaneEmbedding, omega: &[f64], vc: &VertexConditions) -> Vec<usize> {
    vc.vertices
        .iter()
        .filter(|d| d.case == Some(VertexCase::NonPointedFour))
        .map(|d| d.vertex)
        .filter(|&v| !polygon_is_simple(&force_polygon(emb, omega, v), emb.tolerance()))
        .collect()
}

pub fn check_bad_quadrangles(emb: &PlaneEmbedding, omega: &[f64]) -> Result<Vec<usize>> {
    let vc = check_vertex_conditions(emb, omega)?;
    Ok(bad_quadrangles_from(emb, omega, &vc))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub nowhere_zero: bool,
    /// Edges below the zero threshold (indices into the input framework).
    pub zero_edges: Vec<usize>,
    /// Edges whose classification as zero is tolerance-sensitive.
    pub near_threshold: Vec<usize>,
    /// Conditions evaluated on the support; absent when the support has no
    /// plane embedding.
    pub face_conditions: Option<FaceConditions>,
    pub vertex_conditions: Option<VertexConditions>,
    /// Distinguished vertex, as an index into the input framework.
    pub distinguished_vertex: Option<usize>,
    /// Input-framework indices of vertices with a self-intersecting force polygon.
    pub bad_quadrangle_vertices: Vec<usize>,
    /// Edges at the distinguished vertex carry the sign opposite to the
    /// outer boundary.
    pub opposite_signs: Option<bool>,
    pub good: bool,
}

/// Decides whether `stress` is good: nonzero on every edge, satisfying the
/// vertex conditions, and free of bad quadrangles.
pub fn is_good_self_stress(emb: &PlaneEmbedding, stress: &SelfStress) -> Result<ConditionReport> {
    let fw = emb.framework();
    let tol = emb.tolerance();
    if stress.omega.len() != fw.edge_count() {
        return Err(Error::StressLength {
            expected: fw.edge_count(),
            found: stress.omega.len(),
        });
    }
    let mask = stress.support_mask(tol);
    let zero_edges: Vec<usize> = (0..mask.len()).filter(|&k| !mask[k]).collect();
    let mut report = ConditionReport {
        nowhere_zero: zero_edges.is_empty(),
        zero_edges,
        near_threshold: stress.near_threshold(tol),
        face_conditions: None,
        vertex_conditions: None,
        distinguished_vertex: None,
        bad_quadrangle_vertices: Vec::new(),
        opposite_signs: None,
        good: false,
    };
    if stress.is_zero(tol) {
        return Ok(report);
    }

    let support = restrict_to_support(fw, stress, tol)?;
    let sup_emb = if report.nowhere_zero {
        emb.clone()
    } else {
        match build_embedding(&support.framework, tol) {
            Ok(e) => e,
            Err(_) => return Ok(report),
        }
    };
    let omega = &support.stress.omega;
    let ac = classify_angles(&sup_emb, omega)?;
    let fc = face_conditions_from(&sup_emb, &ac);
    let vc = vertex_conditions_from(&sup_emb, &ac);
    let bad = bad_quadrangles_from(&sup_emb, omega, &vc);

    if let Some(h) = vc.distinguished {
        let boundary = boundary_edges(&sup_emb);
        let boundary_sign = omega[boundary[0]].signum();
        let opposite = sup_emb
            .rotation(h)
            .iter()
            .all(|&d| omega[d / 2].signum() == -boundary_sign);
        report.opposite_signs = Some(opposite);
        report.distinguished_vertex = Some(support.vertex_map[h]);
    }
    report.bad_quadrangle_vertices = bad.iter().map(|&v| support.vertex_map[v]).collect();
    report.good = report.nowhere_zero && vc.ok && bad.is_empty();
    report.face_conditions = Some(fc);
    report.vertex_conditions = Some(vc);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProperCountReport {
    pub t: usize,
    pub x: usize,
    pub y: usize,
    pub vertex_proper: usize,
    pub face_proper: usize,
    /// Face conditions; exactly `t` vertex-proper; at most `t` vertex-proper;
    /// exactly `3y + 4x - 4` face-proper; at least `3y + 4x - 4` face-proper.
    pub statements: [bool; 5],
    pub consistent: bool,
}

/// Evaluates the five equivalent statements relating face conditions to
/// proper-angle counts, on a pseudo-quadrangulation with a nowhere-zero
/// stress. A zero stress passes vacuously with `None`.
pub fn proper_angle_count_check(emb: &PlaneEmbedding, omega: &[f64]) -> Result<Option<ProperCountReport>> {
    if omega.iter().all(|&w| w == 0.0) {
        return Ok(None);
    }
    let counts = counting_check(emb);
    if !counts.applicable {
        return Err(Error::Precondition("framework is not a pseudo-quadrangulation".into()));
    }
    let ac = classify_angles(emb, omega)?;
    Ok(Some(proper_counts(emb, &ac)))
}

pub fn proper_counts(emb: &PlaneEmbedding, ac: &AngleClassification) -> ProperCountReport {
    let counts = counting_check(emb);
    let fc = face_conditions_from(emb, ac);
    let vp = ac.vertex_proper_total();
    let fp = ac.face_proper_total();
    let target = 3 * counts.y as i64 + 4 * counts.x as i64 - 4;
    let statements = [
        fc.ok,
        vp == counts.t,
        vp <= counts.t,
        fp as i64 == target,
        fp as i64 >= target,
    ];
    ProperCountReport {
        t: counts.t,
        x: counts.x,
        y: counts.y,
        vertex_proper: vp,
        face_proper: fp,
        statements,
        consistent: statements.iter().all(|&s| s == statements[0]),
    }
}
