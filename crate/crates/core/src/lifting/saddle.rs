//! How a tilted plane through each lifted vertex cuts its neighborhood.

use serde::{Deserialize, Serialize};

use super::extrema::extremum_report;
use super::surface::Lifting;
use crate::error::{Error, Result};
use crate::geometry::{point_in_polygon, rotate90, Point2, Vector2};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SaddleReport {
    pub direction: Vector2,
    /// Number of sign changes of surface minus plane around each vertex.
    pub pieces: Vec<usize>,
    /// Vertex whose face in the gradient diagram contains the direction;
    /// `None` when it lies in the outer face.
    pub containing_vertex: Option<usize>,
    pub peak: Option<usize>,
    pub expected: Vec<usize>,
    pub ok: bool,
}

/// Cuts the lift at every vertex with the plane of gradient `g` and counts
/// the pieces of the neighborhood. The faces of the gradient diagram are
/// the polygons of face gradients around each vertex; the one containing `g`
/// determines the expected counts: four pieces there, none at the peak and
/// two elsewhere, or two everywhere when `g` is outside all of them.
pub fn saddle_analysis(lift: &Lifting, g: Vector2) -> Result<SaddleReport> {
    let emb = &lift.embedding;
    let n = emb.vertex_count();
    let eps = emb.tolerance().eps_stress * lift.slope_scale();
    let mut pieces = Vec::with_capacity(n);
    for v in 0..n {
        pieces.push(pieces_at(lift, v, g, eps)?);
    }

    let peak = extremum_report(lift)?.distinguished_vertex;
    let containing_vertex = (0..n).filter(|&v| Some(v) != peak).find(|&v| {
        let poly: Vec<Point2> = emb
            .rotation(v)
            .iter()
            .map(|&d| lift.gradients[emb.face_of(d)].to_point())
            .collect();
        point_in_polygon(g.to_point(), &poly)
    });
    let expected: Vec<usize> = (0..n)
        .map(|v| match containing_vertex {
            Some(c) if v == c => 4,
            Some(_) if Some(v) == peak => 0,
            _ => 2,
        })
        .collect();
    Ok(SaddleReport {
        direction: g,
        ok: pieces == expected,
        pieces,
        containing_vertex,
        peak,
        expected,
    })
}

/// Zeros of `(a_f - g) · u` as `u` sweeps each wedge; the function is
/// continuous across edges and a sinusoid inside a wedge, so zeros in wedge
/// interiors are exactly the sign changes.
fn pieces_at(lift: &Lifting, v: usize, g: Vector2, eps: f64) -> Result<usize> {
    let emb = &lift.embedding;
    let unit = |d: usize| {
        let e = emb.point(emb.head(d)) - emb.point(emb.tail(d));
        e * (1.0 / e.norm())
    };
    let mut count = 0;
    for &d in emb.rotation(v) {
        let f = emb.face_of(d);
        let c = lift.gradients[f] - g;
        let u1 = unit(d);
        if c.norm() <= eps {
            return Err(Error::NonGenericDirection(format!(
                "face {f} is parallel to the cutting plane"
            )));
        }
        if c.dot(u1).abs() <= eps {
            return Err(Error::NonGenericDirection(format!(
                "edge {} is parallel to its reciprocal",
                d / 2
            )));
        }
        let measure = emb.angle(d).measure;
        for z in [rotate90(c), -rotate90(c)] {
            let mut phi = u1.cross(z).atan2(u1.dot(z));
            if phi < 0.0 {
                phi += std::f64::consts::TAU;
            }
            if phi > 0.0 && phi < measure {
                count += 1;
            }
        }
    }
    Ok(count)
}
