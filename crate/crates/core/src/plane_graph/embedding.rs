//! Rotation systems and face tracing for non-crossing frameworks.
//!
//! Every edge `k` gives two darts: `2k` runs from `edges[k].0` to
//! `edges[k].1`, `2k + 1` runs the other way. Faces are traced with their
//! interior on the left, so bounded faces come out counter-clockwise and the
//! outer face clockwise.

use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::geometry::{orientation, Point2, Tolerance, Turn};

pub type Dart = usize;

/// Measure class of the angle between two rotation-consecutive edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum AngleKind {
    Convex,
    Flat,
    Reflex,
}

impl AngleKind {
    /// Flat angles count as convex (corners).
    pub fn is_corner(self) -> bool {
        !matches!(self, AngleKind::Reflex)
    }
}

/// The wedge at `vertex` swept counter-clockwise from `out_dart` to the next
/// outgoing dart in the rotation. It lies in `face`, and `in_dart` is the
/// dart that precedes `out_dart` on that face's boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleRecord {
    pub vertex: usize,
    pub face: usize,
    pub in_dart: Dart,
    pub out_dart: Dart,
    pub measure: f64,
    pub kind: AngleKind,
}

/// Combinatorial embedding induced by vertex coordinates.
#[derive(Debug, Clone)]
pub struct PlaneEmbedding {
    fw: Framework,
    tol: Tolerance,
    rotation: Vec<Vec<Dart>>,
    rot_pos: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    dart_face: Vec<usize>,
    outer_face: usize,
    angles: Vec<AngleRecord>,
}

pub fn build_embedding(fw: &Framework, tol: &Tolerance) -> Result<PlaneEmbedding> {
    PlaneEmbedding::new(fw, tol)
}

impl PlaneEmbedding {
    pub fn new(fw: &Framework, tol: &Tolerance) -> Result<Self> {
        if fw.edge_count() == 0 {
            return Err(Error::Validation("framework has no edges".into()));
        }
        if !fw.is_connected() {
            return Err(Error::Disconnected);
        }
        if let Some(err) = fw.first_crossing(tol)? {
            return Err(err);
        }
        let n = fw.vertex_count();
        let darts = 2 * fw.edge_count();

        let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); n];
        for d in 0..darts {
            rotation[tail_of(fw, d)].push(d);
        }
        let mut rot_pos = vec![0; darts];
        for (v, rot) in rotation.iter_mut().enumerate() {
            let p = fw.position(v);
            rot.sort_by(|&a, &b| {
                let da = (fw.position(head_of(fw, a)) - p).angle();
                let db = (fw.position(head_of(fw, b)) - p).angle();
                da.total_cmp(&db)
            });
            for (i, &d) in rot.iter().enumerate() {
                rot_pos[d] = i;
            }
        }

        let mut emb = Self {
            fw: fw.clone(),
            tol: *tol,
            rotation,
            rot_pos,
            faces: Vec::new(),
            dart_face: vec![usize::MAX; darts],
            outer_face: 0,
            angles: Vec::new(),
        };

        for start in 0..darts {
            if emb.dart_face[start] != usize::MAX {
                continue;
            }
            let f = emb.faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                emb.dart_face[d] = f;
                cycle.push(d);
                d = emb.next_in_face(d);
                if d == start {
                    break;
                }
            }
            emb.faces.push(cycle);
        }

        let euler = n as i64 - fw.edge_count() as i64 + emb.faces.len() as i64;
        if euler != 2 {
            return Err(Error::Validation(format!(
                "face tracing gave v - e + f = {euler}; input is not a valid plane drawing"
            )));
        }

        emb.outer_face = (0..emb.faces.len())
            .min_by(|&a, &b| emb.face_area(a).total_cmp(&emb.face_area(b)))
            .expect("at least one face");

        emb.angles = (0..darts).map(|d| emb.make_angle(d)).collect::<Result<Vec<_>>>()?;
        for v in 0..n {
            let flats = emb.rotation[v]
                .iter()
                .filter(|&&d| emb.angles[d].kind == AngleKind::Flat)
                .count();
            if flats >= 2 {
                return Err(Error::DoubleFlat(v));
            }
        }
        Ok(emb)
    }

    fn make_angle(&self, out: Dart) -> Result<AngleRecord> {
        let v = self.tail(out);
        let next = self.rot_next(out);
        let w = self.head(out);
        let u = self.head(next);
        let (pv, pw, pu) = (self.point(v), self.point(w), self.point(u));
        let (measure, kind) = if out == next {
            (2.0 * std::f64::consts::PI, AngleKind::Reflex)
        } else {
            let measure = crate::geometry::ccw_angle(pw - pv, pu - pv)?;
            let kind = match orientation(pv, pw, pu, &self.tol) {
                Turn::CounterClockwise => AngleKind::Convex,
                Turn::Clockwise => AngleKind::Reflex,
                Turn::Collinear if (pw - pv).dot(pu - pv) < 0.0 => AngleKind::Flat,
                Turn::Collinear => return Err(Error::ZeroAngle(v)),
            };
            (measure, kind)
        };
        Ok(AngleRecord {
            vertex: v,
            face: self.dart_face[out],
            in_dart: next ^ 1,
            out_dart: out,
            measure,
            kind,
        })
    }

    pub fn framework(&self) -> &Framework {
        &self.fw
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn vertex_count(&self) -> usize {
        self.fw.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.fw.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn point(&self, v: usize) -> Point2 {
        self.fw.position(v)
    }

    pub fn tail(&self, d: Dart) -> usize {
        tail_of(&self.fw, d)
    }

    pub fn head(&self, d: Dart) -> usize {
        head_of(&self.fw, d)
    }

    pub fn edge_of(d: Dart) -> usize {
        d / 2
    }

    pub fn twin(d: Dart) -> Dart {
        d ^ 1
    }

    /// Outgoing darts of `v`, counter-clockwise by direction.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    /// Next outgoing dart counter-clockwise around the tail of `d`.
    pub fn rot_next(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.rot_pos[d] + 1) % rot.len()]
    }

    /// Next outgoing dart clockwise around the tail of `d`.
    pub fn rot_prev(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.rot_pos[d] + rot.len() - 1) % rot.len()]
    }

    /// Successor of `d` on the boundary of the face to its left.
    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.rot_prev(d ^ 1)
    }

    pub fn prev_in_face(&self, d: Dart) -> Dart {
        self.rot_next(d) ^ 1
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    /// Face to the left of dart `d`.
    pub fn face_of(&self, d: Dart) -> usize {
        self.dart_face[d]
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    /// Boundary vertices of face `f` in traversal order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.tail(d)).collect()
    }

    pub fn face_polygon(&self, f: usize) -> Vec<Point2> {
        self.faces[f].iter().map(|&d| self.point(self.tail(d))).collect()
    }

    pub fn face_area(&self, f: usize) -> f64 {
        crate::geometry::signed_area(&self.face_polygon(f))
    }

    /// All angle records, indexed by their outgoing dart.
    pub fn angles(&self) -> &[AngleRecord] {
        &self.angles
    }

    pub fn angle(&self, out: Dart) -> &AngleRecord {
        &self.angles[out]
    }

    /// Edges around `v` in counter-clockwise order.
    pub fn vertex_cycle(&self, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&d| d / 2).collect()
    }
}

fn tail_of(fw: &Framework, d: Dart) -> usize {
    let (a, b) = fw.edges()[d / 2];
    if d.is_multiple_of(2) {
        a
    } else {
        b
    }
}

fn head_of(fw: &Framework, d: Dart) -> usize {
    tail_of(fw, d ^ 1)
}
