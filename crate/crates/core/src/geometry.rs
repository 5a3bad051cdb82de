//! Planar points, vectors and the tolerance-aware predicates everything else
//! is built on.
//!
//! Predicates are relative: an area is treated as zero when it is small
//! compared to the squared coordinate magnitude of the points involved, so
//! rescaling an input does not change any classification.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector2 {
    pub dx: f64,
    pub dy: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Largest absolute coordinate.
    pub fn magnitude(&self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn to_vector(self) -> Vector2 {
        Vector2::new(self.x, self.y)
    }

    pub fn distance(&self, other: Point2) -> f64 {
        (other - *self).norm()
    }

    pub fn lerp(self, other: Point2, t: f64) -> Point2 {
        Point2::new(self.x + t * (other.x - self.x), self.y + t * (other.y - self.y))
    }
}

impl Vector2 {
    pub const ZERO: Vector2 = Vector2 { dx: 0.0, dy: 0.0 };

    pub const fn new(dx: f64, dy: f64) -> Self {
        Self { dx, dy }
    }

    pub fn dot(self, other: Vector2) -> f64 {
        self.dx * other.dx + self.dy * other.dy
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Vector2) -> f64 {
        self.dx * other.dy - self.dy * other.dx
    }

    pub fn norm(self) -> f64 {
        self.dx.hypot(self.dy)
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0.0 && self.dy == 0.0
    }

    /// Direction angle in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        let a = self.dy.atan2(self.dx);
        if a < 0.0 {
            a + 2.0 * PI
        } else {
            a
        }
    }

    pub fn to_point(self) -> Point2 {
        Point2::new(self.dx, self.dy)
    }
}

impl Sub for Point2 {
    type Output = Vector2;
    fn sub(self, rhs: Point2) -> Vector2 {
        Vector2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vector2> for Point2 {
    type Output = Point2;
    fn add(self, rhs: Vector2) -> Point2 {
        Point2::new(self.x + rhs.dx, self.y + rhs.dy)
    }
}

impl Sub<Vector2> for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Vector2) -> Point2 {
        Point2::new(self.x - rhs.dx, self.y - rhs.dy)
    }
}

impl Add for Vector2 {
    type Output = Vector2;
    fn add(self, rhs: Vector2) -> Vector2 {
        Vector2::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl Sub for Vector2 {
    type Output = Vector2;
    fn sub(self, rhs: Vector2) -> Vector2 {
        Vector2::new(self.dx - rhs.dx, self.dy - rhs.dy)
    }
}

impl Neg for Vector2 {
    type Output = Vector2;
    fn neg(self) -> Vector2 {
        Vector2::new(-self.dx, -self.dy)
    }
}

impl Mul<f64> for Vector2 {
    type Output = Vector2;
    fn mul(self, s: f64) -> Vector2 {
        Vector2::new(self.dx * s, self.dy * s)
    }
}

impl Mul<Vector2> for f64 {
    type Output = Vector2;
    fn mul(self, v: Vector2) -> Vector2 {
        v * self
    }
}

/// Numerical thresholds shared by all modules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Relative threshold for orientation and incidence predicates.
    pub eps_geom: f64,
    /// Relative singular-value cutoff for rank decisions.
    pub eps_rank: f64,
    /// Relative threshold below which a normalized stress entry counts as zero.
    pub eps_stress: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_geom: 1e-9,
            eps_rank: 1e-9,
            eps_stress: 1e-8,
        }
    }
}

impl Tolerance {
    pub fn new(eps_geom: f64, eps_rank: f64, eps_stress: f64) -> Result<Self> {
        for (name, v) in [
            ("eps_geom", eps_geom),
            ("eps_rank", eps_rank),
            ("eps_stress", eps_stress),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Validation(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self {
            eps_geom,
            eps_rank,
            eps_stress,
        })
    }
}

/// Result of an orientation test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Turn {
    pub fn sign(self) -> i8 {
        match self {
            Turn::Clockwise => -1,
            Turn::Collinear => 0,
            Turn::CounterClockwise => 1,
        }
    }
}

/// Sign of twice the signed area of `pqr`.
///
/// Collinear when `|area| <= eps_geom * scale²`, with `scale` the largest
/// coordinate magnitude among the three points.
pub fn orientation(p: Point2, q: Point2, r: Point2, tol: &Tolerance) -> Turn {
    let area2 = (q - p).cross(r - p);
    let scale = p.magnitude().max(q.magnitude()).max(r.magnitude());
    if area2.abs() <= tol.eps_geom * scale * scale {
        Turn::Collinear
    } else if area2 > 0.0 {
        Turn::CounterClockwise
    } else {
        Turn::Clockwise
    }
}

/// Position of `p` relative to the closed segment `[a, b]`, assuming the three
/// points are collinear: parameter strictly between the endpoints.
fn strictly_between(a: Point2, b: Point2, p: Point2, tol: &Tolerance) -> bool {
    let d = b - a;
    let len2 = d.dot(d);
    let t = (p - a).dot(d) / len2;
    let slack = tol.eps_geom;
    t > slack && t < 1.0 - slack
}

fn within_closed(a: Point2, b: Point2, p: Point2, tol: &Tolerance) -> bool {
    let d = b - a;
    let len2 = d.dot(d);
    let t = (p - a).dot(d) / len2;
    t >= -tol.eps_geom && t <= 1.0 + tol.eps_geom
}

/// Whether `p` lies in the relative interior of segment `[a, b]`.
pub fn point_in_segment_interior(p: Point2, a: Point2, b: Point2, tol: &Tolerance) -> bool {
    orientation(a, b, p, tol) == Turn::Collinear && strictly_between(a, b, p, tol)
}

fn same_point(p: Point2, q: Point2, tol: &Tolerance) -> bool {
    let scale = p.magnitude().max(q.magnitude()).max(1.0);
    (p - q).norm() <= tol.eps_geom * scale
}

/// True iff the closed segments share a point other than a common endpoint.
///
/// Touching at a shared endpoint is allowed; collinear overlap of positive
/// length is a crossing.
pub fn segments_properly_intersect(a1: Point2, a2: Point2, b1: Point2, b2: Point2, tol: &Tolerance) -> Result<bool> {
    if same_point(a1, a2, tol) || same_point(b1, b2, tol) {
        return Err(Error::DegenerateSegment);
    }
    let o1 = orientation(a1, a2, b1, tol);
    let o2 = orientation(a1, a2, b2, tol);
    let o3 = orientation(b1, b2, a1, tol);
    let o4 = orientation(b1, b2, a2, tol);

    if o1 == Turn::Collinear && o2 == Turn::Collinear {
        // Collinear: crossing iff the overlap has positive length.
        let d = a2 - a1;
        let len2 = d.dot(d);
        let t1 = (b1 - a1).dot(d) / len2;
        let t2 = (b2 - a1).dot(d) / len2;
        let (lo, hi) = if t1 < t2 { (t1, t2) } else { (t2, t1) };
        let overlap = hi.min(1.0) - lo.max(0.0);
        return Ok(overlap > tol.eps_geom);
    }

    let shared = [(a1, b1), (a1, b2), (a2, b1), (a2, b2)]
        .iter()
        .any(|&(p, q)| same_point(p, q, tol));

    if o1 != Turn::Collinear && o2 != Turn::Collinear && o3 != Turn::Collinear && o4 != Turn::Collinear {
        return Ok(o1 != o2 && o3 != o4);
    }
    // One endpoint touches the other segment.
    let touches = |o: Turn, p: Point2, s1: Point2, s2: Point2| o == Turn::Collinear && within_closed(s1, s2, p, tol);
    let touching =
        touches(o1, b1, a1, a2) || touches(o2, b2, a1, a2) || touches(o3, a1, b1, b2) || touches(o4, a2, b1, b2);
    if !touching {
        return Ok(false);
    }
    if shared {
        // Endpoint contact only counts when it is the shared endpoint.
        let interior = (o1 == Turn::Collinear && strictly_between(a1, a2, b1, tol))
            || (o2 == Turn::Collinear && strictly_between(a1, a2, b2, tol))
            || (o3 == Turn::Collinear && strictly_between(b1, b2, a1, tol))
            || (o4 == Turn::Collinear && strictly_between(b1, b2, a2, tol));
        return Ok(interior);
    }
    Ok(true)
}

/// Counter-clockwise rotation angle in `[0, 2π)` taking direction `u` to `v`.
pub fn ccw_angle(u: Vector2, v: Vector2) -> Result<f64> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let a = u.cross(v).atan2(u.dot(v));
    Ok(if a < 0.0 { a + 2.0 * PI } else { a })
}

/// Counter-clockwise quarter turn.
pub fn rotate90(v: Vector2) -> Vector2 {
    Vector2::new(-v.dy, v.dx)
}

/// Shoelace signed area (positive for counter-clockwise polygons).
pub fn signed_area(poly: &[Point2]) -> f64 {
    let n = poly.len();
    let mut s = 0.0;
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    0.5 * s
}

/// Even-odd point-in-polygon test.
pub fn point_in_polygon(p: Point2, poly: &[Point2]) -> bool {
    let n = poly.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (poly[i], poly[j]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if p.x < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Whether a closed polygon has no self-intersections (adjacent edges may
/// only share their common vertex, and must not fold back onto each other).
pub fn polygon_is_simple(poly: &[Point2], tol: &Tolerance) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        let (a1, a2) = (poly[i], poly[(i + 1) % n]);
        if same_point(a1, a2, tol) {
            return false;
        }
        for j in (i + 1)..n {
            let (b1, b2) = (poly[j], poly[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Shared vertex; reject only a fold-back overlap.
                if n == 3 {
                    continue;
                }
                let (shared, other_a, other_b) = if j == i + 1 { (a2, a1, b2) } else { (a1, a2, b1) };
                if orientation(other_a, shared, other_b, tol) == Turn::Collinear
                    && (other_a - shared).dot(other_b - shared) > 0.0
                {
                    return false;
                }
                continue;
            }
            match segments_properly_intersect(a1, a2, b1, b2, tol) {
                Ok(true) | Err(_) => return false,
                Ok(false) => {}
            }
            // Non-adjacent edges must not even touch at endpoints.
            for p in [b1, b2] {
                if same_point(p, a1, tol) || same_point(p, a2, tol) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        let t = Tolerance::default();
        assert_eq!(orientation(p(0., 0.), p(1., 0.), p(0., 1.), &t), Turn::CounterClockwise);
        assert_eq!(orientation(p(0., 0.), p(1., 0.), p(2., 0.), &t), Turn::Collinear);
        assert_eq!(orientation(p(0., 0.), p(0., 1.), p(1., 0.), &t), Turn::Clockwise);
    }

    #[test]
    fn orientation_is_scale_invariant() {
        let t = Tolerance::default();
        for s in [1e-6, 1.0, 1e6] {
            assert_eq!(
                orientation(p(0., 0.), p(s, 0.), p(2. * s, 1e-12 * s), &t),
                Turn::Collinear
            );
            assert_eq!(
                orientation(p(0., 0.), p(s, 0.), p(2. * s, 1e-3 * s), &t),
                Turn::CounterClockwise
            );
        }
    }

    #[test]
    fn intersection_examples() {
        let t = Tolerance::default();
        assert!(segments_properly_intersect(p(0., 0.), p(2., 2.), p(0., 2.), p(2., 0.), &t).unwrap());
        assert!(!segments_properly_intersect(p(0., 0.), p(1., 0.), p(1., 0.), p(2., 1.), &t).unwrap());
        assert!(segments_properly_intersect(p(0., 0.), p(2., 0.), p(1., 0.), p(3., 0.), &t).unwrap());
    }

    #[test]
    fn intersection_touching_cases() {
        let t = Tolerance::default();
        // T-junction: endpoint of one segment in the interior of the other.
        assert!(segments_properly_intersect(p(0., 0.), p(2., 0.), p(1., 0.), p(1., 1.), &t).unwrap());
        // Collinear, sharing only an endpoint.
        assert!(!segments_properly_intersect(p(0., 0.), p(1., 0.), p(1., 0.), p(2., 0.), &t).unwrap());
        // Collinear and disjoint.
        assert!(!segments_properly_intersect(p(0., 0.), p(1., 0.), p(2., 0.), p(3., 0.), &t).unwrap());
        // Shared endpoint but folded back onto each other.
        assert!(segments_properly_intersect(p(0., 0.), p(2., 0.), p(0., 0.), p(1., 0.), &t).unwrap());
        // Parallel disjoint.
        assert!(!segments_properly_intersect(p(0., 0.), p(1., 0.), p(0., 1.), p(1., 1.), &t).unwrap());
    }

    #[test]
    fn degenerate_segment_is_an_error() {
        let t = Tolerance::default();
        assert_eq!(
            segments_properly_intersect(p(1., 1.), p(1., 1.), p(0., 0.), p(2., 0.), &t),
            Err(Error::DegenerateSegment)
        );
    }

    #[test]
    fn ccw_angle_examples() {
        let e = 1e-15;
        assert!((ccw_angle(Vector2::new(1., 0.), Vector2::new(0., 1.)).unwrap() - PI / 2.).abs() < e);
        assert_eq!(ccw_angle(Vector2::new(1., 0.), Vector2::new(1., 0.)).unwrap(), 0.0);
        assert!((ccw_angle(Vector2::new(1., 0.), Vector2::new(-1., 0.)).unwrap() - PI).abs() < e);
        assert_eq!(ccw_angle(Vector2::ZERO, Vector2::new(1., 0.)), Err(Error::ZeroVector));
    }

    #[test]
    fn rotate90_examples() {
        assert_eq!(rotate90(Vector2::new(1., 0.)), Vector2::new(0., 1.));
        assert_eq!(rotate90(Vector2::new(0., 0.)), Vector2::new(0., 0.));
        assert_eq!(rotate90(Vector2::new(3., -2.)), Vector2::new(2., 3.));
    }

    #[test]
    fn simple_polygons() {
        let t = Tolerance::default();
        let square = [p(0., 0.), p(1., 0.), p(1., 1.), p(0., 1.)];
        assert!(polygon_is_simple(&square, &t));
        let bowtie = [p(0., 0.), p(1., 1.), p(1., 0.), p(0., 1.)];
        assert!(!polygon_is_simple(&bowtie, &t));
        assert!((signed_area(&square) - 1.0).abs() < 1e-15);
        assert!(point_in_polygon(p(0.5, 0.5), &square));
        assert!(!point_in_polygon(p(1.5, 0.5), &square));
    }

    fn coord() -> impl Strategy<Value = f64> {
        -100.0..100.0f64
    }

    fn point() -> impl Strategy<Value = Point2> {
        (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
    }

    proptest! {
        #[test]
        fn orientation_antisymmetric(a in point(), b in point(), c in point()) {
            let t = Tolerance::default();
            let o = orientation(a, b, c, &t);
            if o != Turn::Collinear {
                prop_assert_eq!(orientation(b, a, c, &t).sign(), -o.sign());
                prop_assert_eq!(orientation(a, c, b, &t).sign(), -o.sign());
                prop_assert_eq!(orientation(c, b, a, &t).sign(), -o.sign());
            }
        }

        #[test]
        fn rotate90_four_times_is_identity(dx in coord(), dy in coord()) {
            let v = Vector2::new(dx, dy);
            let r = rotate90(rotate90(rotate90(rotate90(v))));
            prop_assert_eq!(r, v);
            let n0 = v.norm();
            let n1 = rotate90(v).norm();
            prop_assert!((n0 - n1).abs() <= 4.0 * f64::EPSILON * n0.max(f64::MIN_POSITIVE));
        }

        #[test]
        fn ccw_angles_sum_to_full_turn(a in point(), b in point()) {
            let (u, v) = (a.to_vector(), b.to_vector());
            prop_assume!(u.norm() > 1e-6 && v.norm() > 1e-6);
            let s = ccw_angle(u, v).unwrap() + ccw_angle(v, u).unwrap();
            let eps = 1e-9;
            prop_assert!(s.abs() < eps || (s - 2.0 * PI).abs() < eps);
        }

        #[test]
        fn intersection_symmetric(a1 in point(), a2 in point(), b1 in point(), b2 in point()) {
            let t = Tolerance::default();
            prop_assume!((a1 - a2).norm() > 1e-6 && (b1 - b2).norm() > 1e-6);
            let x = segments_properly_intersect(a1, a2, b1, b2, &t).unwrap();
            let y = segments_properly_intersect(b1, b2, a1, a2, &t).unwrap();
            let z = segments_properly_intersect(a2, a1, b2, b1, &t).unwrap();
            prop_assert_eq!(x, y);
            prop_assert_eq!(x, z);
        }
    }
}
