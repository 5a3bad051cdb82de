//! Face and vertex classification: corners, pointedness, pseudo-polygons and
//! the pseudo-quadrangulation counting identity.

use serde::{Deserialize, Serialize};

use super::embedding::{AngleKind, PlaneEmbedding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FaceClass {
    /// Outer face whose complement is a convex polygon; `strict` when it has
    /// no flat boundary angle.
    OuterConvex {
        strict: bool,
    },
    OuterNonConvex,
    PseudoTriangle,
    PseudoQuadrangle,
    /// Simple interior face with any other number of corners.
    PseudoPolygon(usize),
    /// Interior face whose boundary revisits a vertex.
    NonSimple(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceInfo {
    pub id: usize,
    pub outer: bool,
    /// Boundary vertices in traversal order.
    pub vertices: Vec<usize>,
    /// Corner flag for each boundary occurrence, aligned with `vertices`.
    pub corners: Vec<bool>,
    pub k: usize,
    pub simple: bool,
    pub class: FaceClass,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexInfo {
    pub id: usize,
    pub degree: usize,
    pub pointed: bool,
    /// Outgoing dart that opens the reflex ("big") angle, for pointed vertices.
    pub reflex_angle: Option<usize>,
    pub has_flat: bool,
}

pub fn classify_faces(emb: &PlaneEmbedding) -> Vec<FaceInfo> {
    (0..emb.face_count()).map(|f| classify_face(emb, f)).collect()
}

pub fn classify_face(emb: &PlaneEmbedding, f: usize) -> FaceInfo {
    let outer = f == emb.outer_face();
    let vertices = emb.face_vertices(f);
    let kinds: Vec<AngleKind> = emb.face(f).iter().map(|&d| emb.angle(d).kind).collect();
    let corners: Vec<bool> = kinds.iter().map(|k| k.is_corner()).collect();
    let k = corners.iter().filter(|&&c| c).count();
    let mut sorted = vertices.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let simple = sorted.len() == vertices.len() && vertices.len() >= 3;
    let class = if outer {
        if simple && k == kinds.iter().filter(|&&a| a == AngleKind::Flat).count() {
            FaceClass::OuterConvex { strict: k == 0 }
        } else {
            FaceClass::OuterNonConvex
        }
    } else if !simple {
        FaceClass::NonSimple(k)
    } else {
        match k {
            3 => FaceClass::PseudoTriangle,
            4 => FaceClass::PseudoQuadrangle,
            _ => FaceClass::PseudoPolygon(k),
        }
    };
    FaceInfo {
        id: f,
        outer,
        vertices,
        corners,
        k,
        simple,
        class,
    }
}

pub fn classify_vertices(emb: &PlaneEmbedding) -> Vec<VertexInfo> {
    (0..emb.vertex_count())
        .map(|v| {
            let rot = emb.rotation(v);
            let reflex_angle = rot.iter().copied().find(|&d| emb.angle(d).kind == AngleKind::Reflex);
            VertexInfo {
                id: v,
                degree: rot.len(),
                pointed: reflex_angle.is_some(),
                reflex_angle,
                has_flat: rot.iter().any(|&d| emb.angle(d).kind == AngleKind::Flat),
            }
        })
        .collect()
}

pub fn non_pointed_count(emb: &PlaneEmbedding) -> usize {
    classify_vertices(emb).iter().filter(|v| !v.pointed).count()
}

/// Outer boundary convex and every interior face a pseudo-triangle or
/// pseudo-quadrangle.
pub fn is_pseudo_quadrangulation(emb: &PlaneEmbedding) -> bool {
    classify_faces(emb).iter().all(|f| {
        matches!(
            f.class,
            FaceClass::OuterConvex { .. } | FaceClass::PseudoTriangle | FaceClass::PseudoQuadrangle
        )
    })
}

pub fn is_pseudo_triangulation(emb: &PlaneEmbedding) -> bool {
    classify_faces(emb)
        .iter()
        .all(|f| matches!(f.class, FaceClass::OuterConvex { .. } | FaceClass::PseudoTriangle))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub e: usize,
    pub t: usize,
    pub q: usize,
    /// Non-pointed vertices.
    pub x: usize,
    /// Pointed vertices.
    pub y: usize,
    /// Whether the framework is a pseudo-quadrangulation, i.e. whether the
    /// identity is expected to hold.
    pub applicable: bool,
    pub holds: bool,
}

/// Face and vertex counts with the identity `2e = t + 3y + 4x - 4`.
pub fn counting_check(emb: &PlaneEmbedding) -> Counts {
    let faces = classify_faces(emb);
    let verts = classify_vertices(emb);
    let t = faces.iter().filter(|f| f.class == FaceClass::PseudoTriangle).count();
    let q = faces.iter().filter(|f| f.class == FaceClass::PseudoQuadrangle).count();
    let x = verts.iter().filter(|v| !v.pointed).count();
    let y = verts.len() - x;
    let e = emb.edge_count();
    let holds = 2 * e as i64 == t as i64 + 3 * y as i64 + 4 * x as i64 - 4;
    Counts {
        e,
        t,
        q,
        x,
        y,
        applicable: is_pseudo_quadrangulation(emb),
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::framework::Framework;
    use crate::geometry::{Point2, Tolerance};
    use crate::plane_graph::build_embedding;

    fn emb(pts: &[(f64, f64)], edges: &[(usize, usize)]) -> PlaneEmbedding {
        let fw = Framework::new(pts.iter().map(|&(x, y)| Point2::new(x, y)).collect(), edges.to_vec()).unwrap();
        build_embedding(&fw, &Tolerance::default()).unwrap()
    }

    #[test]
    fn k4_classification() {
        let e = build_embedding(&fixtures::k4(), &Tolerance::default()).unwrap();
        let faces = classify_faces(&e);
        let pts = faces.iter().filter(|f| f.class == FaceClass::PseudoTriangle).count();
        assert_eq!(pts, 3);
        assert_eq!(faces[e.outer_face()].class, FaceClass::OuterConvex { strict: true });
        let verts = classify_vertices(&e);
        let pointed: Vec<bool> = verts.iter().map(|v| v.pointed).collect();
        assert_eq!(pointed, vec![true, true, true, false]);
        let c = counting_check(&e);
        assert_eq!((c.e, c.t, c.q, c.x, c.y), (6, 3, 0, 1, 3));
        assert!(c.applicable && c.holds);
    }

    #[test]
    fn square_with_diagonal_counts() {
        // Every vertex of a convex polygon is pointed, diagonal or not.
        let e = emb(
            &[(0., 0.), (1., 0.), (1., 1.), (0., 1.)],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        );
        let c = counting_check(&e);
        assert_eq!((c.e, c.t, c.q, c.x, c.y), (5, 2, 0, 0, 4));
        assert!(c.holds);
    }

    #[test]
    fn flat_vertex_is_a_corner() {
        // Triangle (0,0),(4,0),(2,3) whose base is split at (2,0); the split
        // vertex carries an edge up to (2,1), which hangs into the face.
        let e = emb(
            &[(0., 0.), (4., 0.), (2., 3.), (2., 0.), (2., 1.)],
            &[(0, 3), (3, 1), (1, 2), (2, 0), (3, 4), (4, 0), (4, 1), (4, 2)],
        );
        let faces = classify_faces(&e);
        let outer = &faces[e.outer_face()];
        assert_eq!(outer.class, FaceClass::OuterConvex { strict: false });
        let i = outer.vertices.iter().position(|&v| v == 3).unwrap();
        assert!(outer.corners[i]);
    }

    #[test]
    fn pseudo_triangle_with_reflex_chain() {
        // Corners 0, 1, 2; chain 1 -> 3 -> 2 bends inward.
        let e = emb(
            &[(0., 0.), (4., 0.), (0., 4.), (1.5, 1.5)],
            &[(0, 1), (1, 3), (3, 2), (2, 0)],
        );
        let faces = classify_faces(&e);
        let inner = faces.iter().find(|f| !f.outer).unwrap();
        assert_eq!(inner.class, FaceClass::PseudoTriangle);
        assert_eq!(inner.k, 3);
        assert_eq!(faces[e.outer_face()].class, FaceClass::OuterNonConvex);
    }
}
