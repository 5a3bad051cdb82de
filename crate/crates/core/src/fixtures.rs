//! Deterministic example frameworks and seeded instance generators.
//!
//! Every random generator samples coordinates, checks the classification it
//! advertises, and retries within a fixed budget. Exhausting the budget is an
//! error, never a silent fallback.

use std::f64::consts::{PI, TAU};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::framework::{first_crossing, Framework};
use crate::geometry::{orientation, Point2, Tolerance, Turn, Vector2};
use crate::plane_graph::{
    build_embedding, is_laman_circuit, is_pseudo_triangulation, non_pointed_count, PlaneEmbedding,
};
use crate::rigidity::{is_good_self_stress, self_stress_space, stress_dimension, SelfStress};

/// Attempts allowed per generated instance.
pub const DEFAULT_BUDGET: usize = 2000;

/// Smallest angle, in radians, tolerated at a vertex of a generated instance,
/// and the smallest distance of any angle from a straight angle.
const MIN_ANGLE: f64 = 0.03;

/// Smallest `|ω_k| / ‖ω‖∞` accepted as a generic nonzero stress.
const MIN_STRESS_RATIO: f64 = 1e-4;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `A(0,0) B(4,0) C(2,3)` with interior vertex `H(2,1)` joined to all three.
/// Edges in order: `AB, BC, CA, HA, HB, HC`.
pub fn k4() -> Framework {
    Framework::new(
        vec![
            Point2::new(0., 0.),
            Point2::new(4., 0.),
            Point2::new(2., 3.),
            Point2::new(2., 1.),
        ],
        vec![(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)],
    )
    .expect("valid fixture")
}

/// Triangle `A(0,3) B(-3,-2) C(3,-2)` around the inner triangle
/// `D(0,1) E(1,0.3) F(-1,0.3)`, joined by `AD, BF, CE` and the extra edge
/// `CF`. The three joining lines meet at `(0, 1.45)`, so the unique stress
/// vanishes on `CF` (edge 9). `shift` moves `E` horizontally to break the
/// concurrence.
pub fn singular_concurrent(shift: f64) -> Framework {
    Framework::new(
        vec![
            Point2::new(0.0, 3.0),
            Point2::new(-3.0, -2.0),
            Point2::new(3.0, -2.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0 + shift, 0.3),
            Point2::new(-1.0, 0.3),
        ],
        vec![
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 5),
            (2, 4),
            (2, 5),
        ],
    )
    .expect("valid fixture")
}

/// Index of the edge `CF` in [`singular_concurrent`].
pub const SINGULAR_EDGE: usize = 9;

/// Smallest angle at any vertex and the closest approach of any angle to a
/// straight one.
fn angles_are_generic(emb: &PlaneEmbedding) -> bool {
    emb.angles()
        .iter()
        .all(|a| a.measure >= MIN_ANGLE && (a.measure - PI).abs() >= MIN_ANGLE)
}

fn embed(fw: &Framework, tol: &Tolerance) -> Option<PlaneEmbedding> {
    match first_crossing(fw.vertices(), fw.edges(), tol) {
        Ok(None) => build_embedding(fw, tol).ok(),
        _ => None,
    }
}

fn stress_is_generic(stress: &SelfStress) -> bool {
    let m = stress.max_abs();
    m > 0.0 && stress.omega.iter().all(|w| w.abs() >= MIN_STRESS_RATIO * m)
}

/// Non-crossing Laman-circuit pseudo-triangulation with one non-pointed
/// vertex and a nowhere-small unique stress.
pub fn is_generic_circuit_pt(fw: &Framework, tol: &Tolerance) -> bool {
    let Some(emb) = embed(fw, tol) else { return false };
    if !angles_are_generic(&emb)
        || !is_pseudo_triangulation(&emb)
        || non_pointed_count(&emb) != 1
        || !is_laman_circuit(fw.edges(), fw.vertex_count())
    {
        return false;
    }
    let basis = self_stress_space(fw, tol);
    basis.len() == 1 && stress_is_generic(&basis[0])
}

fn with_rotation<R: Rng>(points: Vec<Point2>, rng: &mut R) -> Vec<Point2> {
    let phi = rng.random_range(0.0..TAU);
    let (s, c) = phi.sin_cos();
    points
        .into_iter()
        .map(|p| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y))
        .collect()
}

/// Convex polygon with `k` vertices in counter-clockwise order: jittered
/// points on a circle under a random axis scaling.
fn convex_polygon<R: Rng>(k: usize, rng: &mut R) -> Vec<Point2> {
    let (ax, ay) = (rng.random_range(0.8..1.25), rng.random_range(0.8..1.25));
    let phase = rng.random_range(0.0..TAU);
    let pts = (0..k)
        .map(|i| {
            let t = phase + (i as f64 + rng.random_range(-0.3..0.3)) * TAU / k as f64;
            Point2::new(ax * t.cos(), ay * t.sin())
        })
        .collect();
    with_rotation(pts, rng)
}

fn interior_point<R: Rng>(poly: &[Point2], rng: &mut R) -> Point2 {
    let w: Vec<f64> = poly.iter().map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = w.iter().sum();
    let (x, y) = poly
        .iter()
        .zip(&w)
        .fold((0.0, 0.0), |(x, y), (p, wi)| (x + wi * p.x, y + wi * p.y));
    Point2::new(x / total, y / total)
}

fn retry<T>(budget: usize, mut attempt: impl FnMut() -> Option<T>) -> Result<T> {
    (0..budget)
        .find_map(|_| attempt())
        .ok_or(Error::SearchExhausted(budget))
}

/// Wheel with `rim` spokes: a convex rim and a hub at a random interior point.
/// The hub is vertex `rim`.
pub fn wheel(rim: usize, seed: u64) -> Result<Framework> {
    if rim < 3 {
        return Err(Error::Precondition("a wheel needs at least 3 rim vertices".into()));
    }
    let mut rng = rng(seed);
    let tol = Tolerance::default();
    retry(DEFAULT_BUDGET, || {
        let mut pts = convex_polygon(rim, &mut rng);
        pts.push(interior_point(&pts, &mut rng));
        let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        edges.extend((0..rim).map(|i| (rim, i)));
        let fw = Framework::new(pts, edges).ok()?;
        is_generic_circuit_pt(&fw, &tol).then_some(fw)
    })
}

/// Triangulated polygon whose dual is a path, plus the edge joining its two
/// ears, drawn as a pseudo-triangulation with one non-pointed vertex.
///
/// The added edge `ab` (edge 0) is the bottom of a convex hull whose upper
/// chain carries the hull vertices. Inside, a second chain from `a` to `b`
/// rises convexly to a single peak and falls convexly back, so the face it
/// bounds with `ab` has corners only at `a`, `b` and the peak. A zigzag of
/// diagonals between the two chains triangulates the rest.
pub fn triangulated_polygon_circuit(n: usize, seed: u64) -> Result<Framework> {
    if n < 4 {
        return Err(Error::Precondition("need at least 4 vertices".into()));
    }
    let mut rng = rng(seed);
    let tol = Tolerance::default();
    retry(DEFAULT_BUDGET, || {
        let r = rng.random_range(1..=(n - 3).min(4));
        let pm = n - 2 - r;
        let sy = rng.random_range(0.8..1.3);
        let arc = |x: f64| sy * (1.0 - x * x).max(0.0).sqrt();

        let mut thetas: Vec<f64> = (0..pm).map(|_| rng.random_range(0.12..PI - 0.12)).collect();
        thetas.sort_by(|a, b| b.total_cmp(a));
        let upper: Vec<Point2> = thetas.iter().map(|t| Point2::new(t.cos(), sy * t.sin())).collect();

        let mut xs: Vec<f64> = (0..r).map(|_| rng.random_range(-0.8..0.8)).collect();
        xs.sort_by(f64::total_cmp);
        let peak = rng.random_range(0..r);
        let xc = xs[peak];
        let h = rng.random_range(0.25..0.6) * arc(xc);
        let lower: Vec<Point2> = xs
            .iter()
            .map(|&x| {
                let t = if x <= xc {
                    (x + 1.0) / (xc + 1.0)
                } else {
                    (1.0 - x) / (1.0 - xc)
                };
                Point2::new(x, h * (0.3 * t + 0.7 * t * t))
            })
            .collect();

        let mut pts = vec![Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0)];
        pts.extend(&lower);
        pts.extend(&upper);
        let q = |i: usize| match i {
            0 => 0,
            i if i == r + 1 => 1,
            i => 1 + i,
        };
        let p = |j: usize| match j {
            0 => 0,
            j if j == pm + 1 => 1,
            j => 1 + r + j,
        };
        let mut edges = vec![(0, 1)];
        edges.extend((0..=r).map(|i| (q(i), q(i + 1))));
        edges.extend((0..=pm).map(|j| (p(j), p(j + 1))));
        let mut moves: Vec<bool> = std::iter::repeat_n(true, r - 1)
            .chain(std::iter::repeat_n(false, pm - 1))
            .collect();
        moves.shuffle(&mut rng);
        let (mut i, mut j) = (1, 1);
        edges.push((q(i), p(j)));
        for advance_lower in moves {
            if advance_lower {
                i += 1;
            } else {
                j += 1;
            }
            edges.push((q(i), p(j)));
        }
        let fw = Framework::new(with_rotation(pts, &mut rng), edges).ok()?;
        is_generic_circuit_pt(&fw, &tol).then_some(fw)
    })
}

/// Convex quadrangle `ABCD` split by the diagonal `AC`, with a degree-3 hub
/// inside each triangle. Both hubs are non-pointed, which no good stress
/// allows. Hubs are vertices 4 (in `ABC`) and 5 (in `ACD`).
pub fn figure_eight(seed: u64) -> Result<Framework> {
    let mut rng = rng(seed);
    let tol = Tolerance::default();
    retry(DEFAULT_BUDGET, || {
        let mut pts = convex_polygon(4, &mut rng);
        let p = interior_point(&pts[0..3], &mut rng);
        let q = interior_point(&[pts[0], pts[2], pts[3]], &mut rng);
        pts.extend([p, q]);
        let edges = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (4, 0),
            (4, 1),
            (4, 2),
            (5, 0),
            (5, 2),
            (5, 3),
        ];
        let fw = Framework::new(pts, edges).ok()?;
        let emb = embed(&fw, &tol)?;
        let ok = angles_are_generic(&emb)
            && is_pseudo_triangulation(&emb)
            && non_pointed_count(&emb) == 2
            && stress_dimension(&fw, &tol) == 2;
        ok.then_some(fw)
    })
}

/// Pointed pseudo-triangulation on `n` vertices grown from a triangle by
/// repeatedly adding a vertex outside the hull joined to its two tangent
/// points.
pub fn pointed_pt(n: usize, seed: u64) -> Result<Framework> {
    if n < 3 {
        return Err(Error::Precondition("need at least 3 vertices".into()));
    }
    let mut rng = rng(seed);
    let tol = Tolerance::default();
    retry(DEFAULT_BUDGET, || {
        let mut pts = convex_polygon(3, &mut rng);
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        let mut hull: Vec<usize> = vec![0, 1, 2];
        while pts.len() < n {
            let c = interior_point(&hull.iter().map(|&i| pts[i]).collect::<Vec<_>>(), &mut rng);
            let radius = hull.iter().map(|&i| pts[i].distance(c)).fold(0.0, f64::max);
            let phi = rng.random_range(0.0..TAU);
            let dist = radius * rng.random_range(1.1..1.6);
            let new = c + Vector2::new(dist * phi.cos(), dist * phi.sin());
            let h = hull.len();
            let visible: Vec<bool> = (0..h)
                .map(|k| orientation(pts[hull[k]], pts[hull[(k + 1) % h]], new, &tol) == Turn::Clockwise)
                .collect();
            // Visible edges form one cyclic run; find its first edge.
            let start = (0..h).find(|&k| visible[k] && !visible[(k + h - 1) % h])?;
            let run = (0..h).take_while(|&s| visible[(start + s) % h]).count();
            let t1 = hull[start];
            let t2 = hull[(start + run) % h];
            let id = pts.len();
            pts.push(new);
            edges.push((t1, id));
            edges.push((t2, id));
            let mut next = Vec::with_capacity(h + 1);
            for s in 0..h - run + 1 {
                next.push(hull[(start + run + s) % h]);
            }
            next.push(id);
            hull = next;
        }
        let fw = Framework::new(pts, edges).ok()?;
        let emb = embed(&fw, &tol)?;
        let ok = angles_are_generic(&emb) && is_pseudo_triangulation(&emb) && non_pointed_count(&emb) == 0;
        ok.then_some(fw)
    })
}

/// A wheel with one or two ears: extra degree-2 vertices just outside rim
/// edges. It keeps a single non-pointed vertex (the hub) and a single stress,
/// which vanishes on the ears, so the graph is no Laman circuit.
pub fn almost_pointed_non_circuit(seed: u64) -> Result<Framework> {
    let mut rng = rng(seed);
    let tol = Tolerance::default();
    retry(DEFAULT_BUDGET, || {
        let rim = rng.random_range(3..=7);
        let mut pts = convex_polygon(rim, &mut rng);
        pts.push(interior_point(&pts, &mut rng));
        let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        edges.extend((0..rim).map(|i| (rim, i)));
        let ears = rng.random_range(1..=2.min(rim / 2));
        let mut sides: Vec<usize> = (0..rim).collect();
        sides.shuffle(&mut rng);
        for &s in sides.iter().take(ears) {
            let (u, w) = (pts[s], pts[(s + 1) % rim]);
            let along = w - u;
            let outward = Vector2::new(along.dy, -along.dx);
            let ear = u + along * rng.random_range(0.3..0.7) + outward * rng.random_range(0.08..0.3);
            let id = pts.len();
            pts.push(ear);
            edges.push((s, id));
            edges.push(((s + 1) % rim, id));
        }
        let fw = Framework::new(pts, edges).ok()?;
        let emb = embed(&fw, &tol)?;
        let ok = angles_are_generic(&emb)
            && non_pointed_count(&emb) == 1
            && stress_dimension(&fw, &tol) == 1
            && !is_laman_circuit(fw.edges(), fw.vertex_count());
        ok.then_some(fw)
    })
}

/// Triangulation of a convex polygon with two interior points, randomized by
/// edge flips. Returns triangles as vertex triples.
fn random_triangulation<R: Rng>(hull: usize, rng: &mut R, tol: &Tolerance) -> Option<(Vec<Point2>, Vec<[usize; 3]>)> {
    let mut pts = convex_polygon(hull, rng);
    let mut tris: Vec<[usize; 3]> = (1..hull - 1).map(|i| [0, i, i + 1]).collect();
    for _ in 0..2 {
        let p = interior_point(&pts[..hull], rng);
        let id = pts.len();
        let t = tris.iter().position(|t| {
            (0..3).all(|k| orientation(pts[t[k]], pts[t[(k + 1) % 3]], p, tol) == Turn::CounterClockwise)
        })?;
        let [a, b, c] = tris.swap_remove(t);
        pts.push(p);
        tris.extend([[a, b, id], [b, c, id], [c, a, id]]);
    }
    for _ in 0..30 {
        let t1 = rng.random_range(0..tris.len());
        let k = rng.random_range(0..3);
        let (u, v) = (tris[t1][k], tris[t1][(k + 1) % 3]);
        let Some(t2) = tris
            .iter()
            .position(|t| (0..3).any(|j| t[j] == v && t[(j + 1) % 3] == u))
        else {
            continue;
        };
        let a = tris[t1][(k + 2) % 3];
        let b = tris[t2].iter().copied().find(|&x| x != u && x != v)?;
        // Flip uv to ab when the quadrangle a-u-b-v is strictly convex.
        let convex = orientation(pts[a], pts[u], pts[b], tol) == Turn::CounterClockwise
            && orientation(pts[b], pts[v], pts[a], tol) == Turn::CounterClockwise;
        if convex {
            tris[t1] = [a, u, b];
            tris[t2] = [b, v, a];
        }
    }
    Some((pts, tris))
}

/// Searches for a framework with a stress that meets the vertex conditions
/// but has a self-intersecting force polygon around some vertex.
///
/// Candidates are flipped triangulations of convex polygons with two interior
/// points, so the stress space is two-dimensional; a grid of directions in
/// that space is scanned for a witness.
pub fn bad_quadrangle_witness(seed: u64, budget: usize) -> Result<(Framework, SelfStress)> {
    let mut rng = rng(seed);
    let tol = Tolerance::default();
    retry(budget, || {
        let hull = rng.random_range(4..=6);
        let (pts, tris) = random_triangulation(hull, &mut rng, &tol)?;
        let mut edges: Vec<(usize, usize)> = tris
            .iter()
            .flat_map(|t| (0..3).map(move |k| (t[k].min(t[(k + 1) % 3]), t[k].max(t[(k + 1) % 3]))))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let fw = Framework::new(pts, edges).ok()?;
        let emb = embed(&fw, &tol)?;
        if !angles_are_generic(&emb) {
            return None;
        }
        let basis = self_stress_space(&fw, &tol);
        if basis.len() != 2 {
            return None;
        }
        let steps = 360;
        (0..steps).find_map(|s| {
            let t = PI * (s as f64 + 0.5) / steps as f64;
            let omega: Vec<f64> = basis[0]
                .omega
                .iter()
                .zip(&basis[1].omega)
                .map(|(a, b)| t.cos() * a + t.sin() * b)
                .collect();
            let stress = SelfStress::new(&fw, omega).ok()?;
            if !stress_is_generic(&stress) {
                return None;
            }
            let report = is_good_self_stress(&emb, &stress).ok()?;
            let vc_ok = report.vertex_conditions.as_ref().is_some_and(|vc| vc.ok);
            (vc_ok && !report.bad_quadrangle_vertices.is_empty()).then(|| (fw.clone(), stress))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::classify_vertices;
    use crate::rigidity::unique_stress;

    #[test]
    fn k4_is_a_generic_circuit() {
        assert!(is_generic_circuit_pt(&k4(), &Tolerance::default()));
    }

    #[test]
    fn wheels_are_circuit_pseudo_triangulations() {
        for seed in 0..5 {
            for rim in [3, 4, 7, 11] {
                let fw = wheel(rim, seed).unwrap();
                assert_eq!(fw.vertex_count(), rim + 1);
                let emb = build_embedding(&fw, &Tolerance::default()).unwrap();
                assert!(!classify_vertices(&emb)[rim].pointed);
            }
        }
    }

    #[test]
    fn triangulated_polygons_are_circuit_pseudo_triangulations() {
        for seed in 0..5 {
            for n in 4..=12 {
                let fw = triangulated_polygon_circuit(n, seed).unwrap();
                assert_eq!((fw.vertex_count(), fw.edge_count()), (n, 2 * n - 2));
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(wheel(5, 9).unwrap(), wheel(5, 9).unwrap());
        assert_eq!(
            triangulated_polygon_circuit(8, 3).unwrap(),
            triangulated_polygon_circuit(8, 3).unwrap()
        );
    }

    #[test]
    fn concurrent_fixture_drops_one_edge() {
        let tol = Tolerance::default();
        let s = unique_stress(&singular_concurrent(0.0), &tol).unwrap();
        let m = s.max_abs();
        for (k, w) in s.omega.iter().enumerate() {
            if k == SINGULAR_EDGE {
                assert!(w.abs() < 1e-8 * m);
            } else {
                assert!(w.abs() > 1e-3 * m);
            }
        }
        let p = unique_stress(&singular_concurrent(1e-3), &tol).unwrap();
        assert!(p.omega[SINGULAR_EDGE].abs() > 1e-6 * p.max_abs());
    }

    #[test]
    fn figure_eight_has_two_non_pointed_hubs() {
        let fw = figure_eight(1).unwrap();
        let emb = build_embedding(&fw, &Tolerance::default()).unwrap();
        let v = classify_vertices(&emb);
        assert!(!v[4].pointed && !v[5].pointed);
        assert_eq!(fw.degree(4), 3);
        assert_eq!(fw.degree(5), 3);
    }

    #[test]
    fn pointed_pt_is_pointed_and_independent() {
        for seed in 0..5 {
            let fw = pointed_pt(9, seed).unwrap();
            assert_eq!(fw.edge_count(), 2 * 9 - 3);
            assert_eq!(stress_dimension(&fw, &Tolerance::default()), 0);
        }
    }

    #[test]
    fn almost_pointed_non_circuits() {
        for seed in 0..5 {
            let fw = almost_pointed_non_circuit(seed).unwrap();
            let emb = build_embedding(&fw, &Tolerance::default()).unwrap();
            assert_eq!(non_pointed_count(&emb), 1);
        }
    }
}
