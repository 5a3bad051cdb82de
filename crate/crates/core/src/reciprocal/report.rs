//! Geometric checks on a constructed reciprocal.

use serde::{Deserialize, Serialize};

use super::diagram::{cremona_reciprocal, ReciprocalDiagram};
use crate::error::Result;
use crate::framework::first_crossing;
use crate::plane_graph::{
    build_embedding, counting_check, is_laman_circuit, is_pseudo_triangulation, Counts, PlaneEmbedding,
};
use crate::rigidity::SelfStress;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Reversed,
    Preserved,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoncrossingReport {
    pub noncrossing: bool,
    /// How primal face cycles appear as reciprocal vertex rotations; only
    /// computed for non-crossing reciprocals.
    pub orientation: Option<Orientation>,
    /// Whether the reciprocal's own embedding is the dual of the primal one.
    pub dual_embedding_consistent: Option<bool>,
    /// First violation found, when crossing.
    pub defect: Option<String>,
}

/// Builds the cremona reciprocal and reports crossing, duality and orientation.
pub fn reciprocal_noncrossing_report(emb: &PlaneEmbedding, stress: &SelfStress) -> Result<NoncrossingReport> {
    let recip = cremona_reciprocal(emb, stress)?;
    Ok(diagram_noncrossing_report(&recip))
}

pub fn diagram_noncrossing_report(recip: &ReciprocalDiagram) -> NoncrossingReport {
    let tol = recip.support_embedding.tolerance();
    let crossing = match first_crossing(&recip.vertices, &recip.edges, tol) {
        Ok(c) => c.map(|e| e.to_string()),
        Err(e) => Some(e.to_string()),
    };
    if let Some(defect) = crossing {
        return NoncrossingReport {
            noncrossing: false,
            orientation: None,
            dual_embedding_consistent: None,
            defect: Some(defect),
        };
    }
    let dual_emb = recip.framework().and_then(|fw| build_embedding(&fw, tol));
    let Ok(dual_emb) = dual_emb else {
        return NoncrossingReport {
            noncrossing: true,
            orientation: None,
            dual_embedding_consistent: Some(false),
            defect: dual_emb.err().map(|e| e.to_string()),
        };
    };
    NoncrossingReport {
        noncrossing: true,
        orientation: Some(orientation(&recip.support_embedding, &dual_emb)),
        dual_embedding_consistent: Some(dual_consistent(&recip.support_embedding, &dual_emb)),
        defect: None,
    }
}

/// Compares each primal face cycle (in face-on-left order) with the
/// counter-clockwise rotation at the matching reciprocal vertex. Reciprocal
/// vertex `f` and edge `k` correspond to primal face `f` and edge `k`.
fn orientation(primal: &PlaneEmbedding, dual: &PlaneEmbedding) -> Orientation {
    let (mut reversed, mut preserved, mut other) = (0, 0, 0);
    for f in 0..primal.face_count() {
        let cycle: Vec<usize> = primal.face(f).iter().map(|&d| d / 2).collect();
        if cycle.len() < 3 {
            continue;
        }
        let rot = dual.vertex_cycle(f);
        if cyclic_eq(&rot, &cycle) {
            preserved += 1;
        } else if cyclic_eq(&rot, &cycle.iter().rev().copied().collect::<Vec<_>>()) {
            reversed += 1;
        } else {
            other += 1;
        }
    }
    match (reversed, preserved, other) {
        (r, 0, 0) if r > 0 => Orientation::Reversed,
        (0, p, 0) if p > 0 => Orientation::Preserved,
        _ => Orientation::Inconsistent,
    }
}

fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

/// Every reciprocal face has the edge set of exactly one primal vertex.
fn dual_consistent(primal: &PlaneEmbedding, dual: &PlaneEmbedding) -> bool {
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    let mut stars: Vec<Vec<usize>> = (0..primal.vertex_count())
        .map(|v| sorted(primal.vertex_cycle(v)))
        .collect();
    let mut faces: Vec<Vec<usize>> = dual
        .faces()
        .iter()
        .map(|c| sorted(c.iter().map(|&d| d / 2).collect()))
        .collect();
    stars.sort();
    faces.sort();
    stars == faces
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub primal: Counts,
    pub reciprocal: Counts,
    /// Geometric circuit: `t, q, y, x` agree between the two sides.
    pub geometric_circuit: Option<bool>,
    /// Pseudo-triangulation with `x` non-pointed vertices: the reciprocal has
    /// one non-pointed vertex, `x - 1` pseudo-quadrangles and `n - x`
    /// pseudo-triangles.
    pub pseudo_triangulation: Option<bool>,
    /// Almost-pointed with `q` pseudo-quadrangles: the reciprocal is a
    /// pseudo-triangulation with `q + 1` non-pointed vertices.
    pub almost_pointed: Option<bool>,
    pub ok: bool,
}

/// Checks the count relations between a stressed framework's support and its
/// non-crossing reciprocal. `None` entries do not apply to this input.
pub fn count_corollaries_check(recip: &ReciprocalDiagram) -> Result<CorollaryReport> {
    let primal = &recip.support_embedding;
    let dual_fw = recip.framework()?;
    let dual = build_embedding(&dual_fw, primal.tolerance())?;
    let pc = counting_check(primal);
    let dc = counting_check(&dual);
    let fw = primal.framework();
    let n = fw.vertex_count();

    let geometric_circuit = (recip.support.dropped.is_empty() && is_laman_circuit(fw.edges(), n))
        .then(|| (pc.t, pc.q, pc.y, pc.x) == (dc.t, dc.q, dc.y, dc.x));
    let pseudo_triangulation =
        is_pseudo_triangulation(primal).then(|| dc.x == 1 && dc.q + 1 == pc.x && dc.t + pc.x == n);
    let almost_pointed = (pc.x == 1 && pc.applicable).then(|| is_pseudo_triangulation(&dual) && dc.x == pc.q + 1);
    let ok = [geometric_circuit, pseudo_triangulation, almost_pointed]
        .iter()
        .all(|c| c.unwrap_or(true));
    Ok(CorollaryReport {
        primal: pc,
        reciprocal: dc,
        geometric_circuit,
        pseudo_triangulation,
        almost_pointed,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::Tolerance;
    use crate::rigidity::unique_stress;

    #[test]
    fn k4_report() {
        let fw = fixtures::k4();
        let t = Tolerance::default();
        let emb = build_embedding(&fw, &t).unwrap();
        let s = unique_stress(&fw, &t).unwrap();
        let r = reciprocal_noncrossing_report(&emb, &s).unwrap();
        assert_eq!(
            r,
            NoncrossingReport {
                noncrossing: true,
                orientation: Some(Orientation::Reversed),
                dual_embedding_consistent: Some(true),
                defect: None,
            }
        );
        let recip = cremona_reciprocal(&emb, &s).unwrap();
        let c = count_corollaries_check(&recip).unwrap();
        assert!(c.ok);
        assert_eq!(c.geometric_circuit, Some(true));
        assert_eq!(c.pseudo_triangulation, Some(true));
        assert_eq!((c.reciprocal.x, c.reciprocal.q, c.reciprocal.t), (1, 0, 3));
    }

    #[test]
    fn cyclic_comparison() {
        assert!(cyclic_eq(&[1, 2, 3], &[3, 1, 2]));
        assert!(!cyclic_eq(&[1, 2, 3], &[3, 2, 1]));
    }
}
