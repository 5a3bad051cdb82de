//! Sign changes of a stress around vertices and faces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Tolerance;
use crate::plane_graph::PlaneEmbedding;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Properness {
    /// Corner with a sign change, or non-corner without one.
    FaceProper,
    /// Corner without a sign change, or non-corner with one.
    VertexProper,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleClassification {
    /// Edge signs (`+1` or `-1`).
    pub signs: Vec<i8>,
    /// Per angle record (indexed by outgoing dart): whether the two edges differ in sign.
    pub change: Vec<bool>,
    pub proper: Vec<Properness>,
    pub vertex_changes: Vec<usize>,
    /// Whether the reflex angle of a pointed vertex carries a sign change.
    pub change_at_big_angle: Vec<bool>,
    pub face_changes: Vec<usize>,
    pub face_changes_at_corners: Vec<usize>,
    pub vertex_proper_in_face: Vec<usize>,
    pub face_proper_at_vertex: Vec<usize>,
}

impl AngleClassification {
    pub fn vertex_proper_total(&self) -> usize {
        self.proper.iter().filter(|&&p| p == Properness::VertexProper).count()
    }

    pub fn face_proper_total(&self) -> usize {
        self.proper.len() - self.vertex_proper_total()
    }
}

/// Edge signs for a stress that must be nonzero on every edge.
pub fn strict_signs(omega: &[f64], edge_count: usize, tol: &Tolerance) -> Result<Vec<i8>> {
    if omega.len() != edge_count {
        return Err(Error::StressLength {
            expected: edge_count,
            found: omega.len(),
        });
    }
    let max = omega.iter().fold(0.0f64, |m, w| m.max(w.abs()));
    omega
        .iter()
        .enumerate()
        .map(|(k, &w)| {
            if max == 0.0 || w.abs() <= tol.eps_stress * max {
                Err(Error::ZeroStress(k))
            } else {
                Ok(if w > 0.0 { 1 } else { -1 })
            }
        })
        .collect()
}

/// Classifies every angle of the embedding against the stress signs.
pub fn classify_angles(emb: &PlaneEmbedding, omega: &[f64]) -> Result<AngleClassification> {
    let signs = strict_signs(omega, emb.edge_count(), emb.tolerance())?;
    classify_sign_pattern(emb, &signs)
}

/// Same as [`classify_angles`] for a bare sign pattern, which need not come
/// from an equilibrium.
pub fn classify_sign_pattern(emb: &PlaneEmbedding, signs: &[i8]) -> Result<AngleClassification> {
    if signs.len() != emb.edge_count() {
        return Err(Error::StressLength {
            expected: emb.edge_count(),
            found: signs.len(),
        });
    }
    if let Some(k) = signs.iter().position(|&s| s == 0) {
        return Err(Error::ZeroStress(k));
    }
    let n = emb.vertex_count();
    let nf = emb.face_count();
    let mut out = AngleClassification {
        signs: signs.to_vec(),
        change: Vec::with_capacity(emb.angles().len()),
        proper: Vec::with_capacity(emb.angles().len()),
        vertex_changes: vec![0; n],
        change_at_big_angle: vec![false; n],
        face_changes: vec![0; nf],
        face_changes_at_corners: vec![0; nf],
        vertex_proper_in_face: vec![0; nf],
        face_proper_at_vertex: vec![0; n],
    };
    for a in emb.angles() {
        let e1 = a.out_dart / 2;
        let e2 = a.in_dart / 2;
        let change = signs[e1] != signs[e2];
        let corner = a.kind.is_corner();
        let proper = if corner == change {
            Properness::FaceProper
        } else {
            Properness::VertexProper
        };
        if change {
            out.vertex_changes[a.vertex] += 1;
            out.face_changes[a.face] += 1;
            if corner {
                out.face_changes_at_corners[a.face] += 1;
            } else {
                out.change_at_big_angle[a.vertex] = true;
            }
        }
        match proper {
            Properness::FaceProper => out.face_proper_at_vertex[a.vertex] += 1,
            Properness::VertexProper => out.vertex_proper_in_face[a.face] += 1,
        }
        out.change.push(change);
        out.proper.push(proper);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::plane_graph::build_embedding;

    const K4_STRESS: [f64; 6] = [-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 1.0, 1.0, 1.0];

    #[test]
    fn k4_sign_changes() {
        let emb = build_embedding(&fixtures::k4(), &Tolerance::default()).unwrap();
        let c = classify_angles(&emb, &K4_STRESS).unwrap();
        // A, B, C: two changes each, none at the reflex angle.
        for v in 0..3 {
            assert_eq!(c.vertex_changes[v], 2);
            assert!(!c.change_at_big_angle[v]);
        }
        assert_eq!(c.vertex_changes[3], 0);
        for f in 0..emb.face_count() {
            if f == emb.outer_face() {
                assert_eq!(c.face_changes[f], 0);
            } else {
                assert_eq!((c.face_changes[f], c.face_changes_at_corners[f]), (2, 2));
            }
        }
        assert_eq!(c.vertex_proper_total(), 3);
        assert_eq!(c.face_proper_total(), 9);
    }

    #[test]
    fn zero_entry_is_rejected() {
        let emb = build_embedding(&fixtures::k4(), &Tolerance::default()).unwrap();
        let mut s = K4_STRESS;
        s[2] = 0.0;
        assert_eq!(classify_angles(&emb, &s).unwrap_err(), Error::ZeroStress(2));
    }

    #[test]
    fn change_counts_are_even() {
        let emb = build_embedding(&fixtures::k4(), &Tolerance::default()).unwrap();
        for mask in 0u32..64 {
            let signs: Vec<i8> = (0..6).map(|k| if mask >> k & 1 == 1 { 1 } else { -1 }).collect();
            let c = classify_sign_pattern(&emb, &signs).unwrap();
            assert!(c.vertex_changes.iter().all(|n| n % 2 == 0));
            assert!(c.face_changes.iter().all(|n| n % 2 == 0));
        }
    }
}
