//! Laman-circuit pseudo-triangulations whose stress may vanish on some edges,
//! and the reverse construction that completes a reciprocal to a circuit.

use serde::{Deserialize, Serialize};

use super::diagram::{cremona_reciprocal, ReciprocalDiagram};
use super::report::{diagram_noncrossing_report, NoncrossingReport};
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::plane_graph::{
    build_embedding, classify_faces, counting_check, is_pseudo_quadrangulation, is_pseudo_triangulation,
    pseudo_quad_diagonal, Counts, FaceClass, PlaneEmbedding,
};
use crate::rigidity::{is_good_self_stress, stress_dimension, unique_stress, SelfStress};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SingularCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct SingularReport {
    pub stress: SelfStress,
    /// Input edges where the stress vanishes.
    pub dropped_edges: Vec<usize>,
    pub spans_all_vertices: bool,
    pub support_counts: Counts,
    pub reciprocal: ReciprocalDiagram,
    pub reciprocal_report: NoncrossingReport,
    pub reciprocal_counts: Option<Counts>,
    pub checks: Vec<SingularCheck>,
}

impl SingularReport {
    pub fn k(&self) -> usize {
        self.dropped_edges.len()
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Analyzes a Laman-circuit pseudo-triangulation: its one-dimensional stress,
/// the support, and the reciprocal, checking the predicted counts.
pub fn singular_circuit_report(emb: &PlaneEmbedding) -> Result<SingularReport> {
    let fw = emb.framework();
    let tol = emb.tolerance();
    let dim = stress_dimension(fw, tol);
    if dim != 1 {
        return Err(Error::AmbiguousStress(dim));
    }
    let stress = unique_stress(fw, tol)?;
    let reciprocal = cremona_reciprocal(emb, &stress)?;
    let sup_emb = &reciprocal.support_embedding;
    let support_counts = counting_check(sup_emb);
    let n = sup_emb.vertex_count() as i64;
    let e_s = sup_emb.edge_count() as i64;
    let dropped_edges = reciprocal.support.dropped.clone();
    let k = dropped_edges.len();
    let spans_all_vertices = reciprocal.support.spans_all_vertices(fw.vertex_count());

    let mut checks = Vec::new();
    let mut check = |name: &str, ok: bool| {
        checks.push(SingularCheck {
            name: name.to_string(),
            ok,
        })
    };
    check(
        "support is a pseudo-quadrangulation with one non-pointed vertex",
        support_counts.applicable && support_counts.x == 1,
    );
    check(
        "support has 2n - 2 - e_s pseudo-quadrangles",
        support_counts.q as i64 == 2 * n - 2 - e_s,
    );

    let reciprocal_report = diagram_noncrossing_report(&reciprocal);
    check("reciprocal is non-crossing", reciprocal_report.noncrossing);
    let reciprocal_counts = if reciprocal_report.noncrossing {
        let dual = reciprocal.framework().and_then(|d| build_embedding(&d, tol));
        match dual {
            Ok(dual) => {
                let dc = counting_check(&dual);
                check("reciprocal is a pseudo-triangulation", is_pseudo_triangulation(&dual));
                check("reciprocal has n - 1 pseudo-triangles", dc.t as i64 == n - 1);
                check(
                    "reciprocal has q + 1 non-pointed vertices",
                    dc.x == support_counts.q + 1,
                );
                Some(dc)
            }
            Err(_) => {
                check("reciprocal has a plane embedding", false);
                None
            }
        }
    } else {
        None
    };

    if spans_all_vertices {
        check(
            "n - 1 - 2k pseudo-triangles survive",
            support_counts.t as i64 == n - 1 - 2 * k as i64,
        );
        check("k pseudo-quadrangles", support_counts.q == k);
        let full_faces = classify_faces(emb);
        let sup_faces = classify_faces(sup_emb);
        let unions_ok = reciprocal.fused.iter().all(|&(a, b)| {
            a != b
                && full_faces[a].class == FaceClass::PseudoTriangle
                && full_faces[b].class == FaceClass::PseudoTriangle
                && sup_faces[reciprocal.face_map[a]].class == FaceClass::PseudoQuadrangle
        });
        check("each pseudo-quadrangle joins two pseudo-triangles", unions_ok);
        let outer: Vec<usize> = emb.face(emb.outer_face()).iter().map(|&d| d / 2).collect();
        check(
            "boundary cycle lies in the support",
            outer.iter().all(|k| !dropped_edges.contains(k)),
        );
    }

    Ok(SingularReport {
        stress,
        dropped_edges,
        spans_all_vertices,
        support_counts,
        reciprocal,
        reciprocal_report,
        reciprocal_counts,
        checks,
    })
}

#[derive(Debug, Clone)]
pub struct CompletedCircuit {
    /// The reciprocal with every pseudo-quadrangle split by a diagonal.
    pub framework: Framework,
    /// Indices of the added diagonals in `framework`.
    pub added_edges: Vec<usize>,
    pub reciprocal: ReciprocalDiagram,
}

/// Draws the reciprocal of a good stress and splits each of its
/// pseudo-quadrangles, producing an almost-pointed pseudo-triangulation
/// whose only stress lives on the original reciprocal edges.
pub fn complete_to_laman_circuit(emb: &PlaneEmbedding, stress: &SelfStress) -> Result<CompletedCircuit> {
    let tol = emb.tolerance();
    let report = is_good_self_stress(emb, stress)?;
    if !report.good {
        return Err(Error::Precondition("stress is not good".into()));
    }
    let reciprocal = cremona_reciprocal(emb, stress)?;
    let mut fw = reciprocal.framework()?;
    let base = fw.edge_count();
    let mut current = build_embedding(&fw, tol)?;
    if !is_pseudo_quadrangulation(&current) {
        return Err(Error::Precondition("reciprocal is not a pseudo-quadrangulation".into()));
    }
    while let Some(f) = classify_faces(&current)
        .iter()
        .find(|f| f.class == FaceClass::PseudoQuadrangle)
        .map(|f| f.id)
    {
        let (u, v) = pseudo_quad_diagonal(&current, f)?;
        fw = fw.with_edge(u, v)?;
        current = build_embedding(&fw, tol)?;
    }
    Ok(CompletedCircuit {
        added_edges: (base..fw.edge_count()).collect(),
        framework: fw,
        reciprocal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::Tolerance;
    use crate::plane_graph::is_laman_circuit;

    #[test]
    fn generic_k4_has_no_dropped_edges() {
        let t = Tolerance::default();
        let emb = build_embedding(&fixtures::k4(), &t).unwrap();
        let r = singular_circuit_report(&emb).unwrap();
        assert_eq!(r.k(), 0);
        assert!(r.ok(), "{:?}", r.checks);
    }

    #[test]
    fn k4_completion_is_unchanged() {
        let t = Tolerance::default();
        let fw = fixtures::k4();
        let emb = build_embedding(&fw, &t).unwrap();
        let s = unique_stress(&fw, &t).unwrap();
        let c = complete_to_laman_circuit(&emb, &s).unwrap();
        assert!(c.added_edges.is_empty());
        assert!(is_laman_circuit(c.framework.edges(), c.framework.vertex_count()));
    }
}
