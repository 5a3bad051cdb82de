//! Geodesics inside simple polygons and the diagonal that splits a
//! pseudo-quadrangle into two pseudo-triangles.

use std::collections::{HashMap, VecDeque};

use super::classify::{classify_face, classify_faces, non_pointed_count, FaceClass};
use super::embedding::PlaneEmbedding;
use crate::error::{Error, Result};
use crate::geometry::{orientation, Point2, Tolerance, Turn};

/// Ear-clipping triangulation of a counter-clockwise simple polygon.
/// Triangles are index triples into `poly`, each counter-clockwise.
pub fn triangulate(poly: &[Point2], tol: &Tolerance) -> Result<Vec<[usize; 3]>> {
    let mut idx: Vec<usize> = (0..poly.len()).collect();
    let mut tris = Vec::with_capacity(poly.len().saturating_sub(2));
    while idx.len() > 3 {
        let m = idx.len();
        let ear = (0..m).find(|&i| {
            let (a, b, c) = (idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]);
            if orientation(poly[a], poly[b], poly[c], tol) != Turn::CounterClockwise {
                return false;
            }
            idx.iter().all(|&p| {
                p == a
                    || p == b
                    || p == c
                    || orientation(poly[a], poly[b], poly[p], tol) == Turn::Clockwise
                    || orientation(poly[b], poly[c], poly[p], tol) == Turn::Clockwise
                    || orientation(poly[c], poly[a], poly[p], tol) == Turn::Clockwise
            })
        });
        let Some(i) = ear else {
            return Err(Error::Precondition(
                "polygon has no ear; it is not simple and counter-clockwise".into(),
            ));
        };
        tris.push([idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]]);
        idx.remove(i);
    }
    if idx.len() == 3 {
        tris.push([idx[0], idx[1], idx[2]]);
    }
    Ok(tris)
}

/// Shortest path between polygon vertices `start` and `end` inside a
/// counter-clockwise simple polygon, as a list of polygon vertex indices.
pub fn geodesic(poly: &[Point2], start: usize, end: usize, tol: &Tolerance) -> Result<Vec<usize>> {
    if start == end {
        return Ok(vec![start]);
    }
    let tris = triangulate(poly, tol)?;
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (t, tri) in tris.iter().enumerate() {
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(t);
        }
    }
    let mut adj = vec![Vec::new(); tris.len()];
    for ts in by_edge.values() {
        if let [s, t] = ts[..] {
            adj[s].push(t);
            adj[t].push(s);
        }
    }

    // Multi-source BFS from the triangles at `start` to the nearest one at `end`.
    let mut parent = vec![usize::MAX; tris.len()];
    let mut queue = VecDeque::new();
    for (t, tri) in tris.iter().enumerate() {
        if tri.contains(&start) {
            parent[t] = t;
            queue.push_back(t);
        }
    }
    let mut last = None;
    while let Some(t) = queue.pop_front() {
        if tris[t].contains(&end) {
            last = Some(t);
            break;
        }
        for &s in &adj[t] {
            if parent[s] == usize::MAX {
                parent[s] = t;
                queue.push_back(s);
            }
        }
    }
    let mut t = last.ok_or_else(|| Error::Precondition("triangulation is disconnected".into()))?;
    let mut chain = vec![t];
    while parent[t] != t {
        t = parent[t];
        chain.push(t);
    }
    chain.reverse();

    // Portals as (left, right) seen when walking from `start` toward `end`.
    let mut portals = vec![(start, start)];
    for w in chain.windows(2) {
        let (cur, nxt) = (tris[w[0]], tris[w[1]]);
        let k = (0..3)
            .find(|&k| nxt.contains(&cur[k]) && nxt.contains(&cur[(k + 1) % 3]))
            .expect("adjacent triangles share an edge");
        portals.push((cur[(k + 1) % 3], cur[k]));
    }
    portals.push((end, end));
    Ok(string_pull(poly, &portals))
}

fn string_pull(poly: &[Point2], portals: &[(usize, usize)]) -> Vec<usize> {
    let cross = |a: usize, b: usize, c: usize| (poly[b] - poly[a]).cross(poly[c] - poly[a]);
    let start = portals[0].0;
    let mut path = vec![start];
    let (mut apex, mut left, mut right) = (start, start, start);
    let (mut left_i, mut right_i) = (0, 0);
    let mut i = 1;
    while i < portals.len() {
        let (pl, pr) = portals[i];

        if right == apex || cross(apex, right, pr) >= 0.0 {
            if right == apex || left == apex || cross(apex, left, pr) < 0.0 {
                right = pr;
                right_i = i;
            } else {
                path.push(left);
                apex = left;
                right = apex;
                right_i = left_i;
                i = left_i + 1;
                continue;
            }
        }

        if left == apex || cross(apex, left, pl) <= 0.0 {
            if left == apex || right == apex || cross(apex, right, pl) > 0.0 {
                left = pl;
                left_i = i;
            } else {
                path.push(right);
                apex = right;
                left = apex;
                left_i = right_i;
                i = right_i + 1;
                continue;
            }
        }
        i += 1;
    }
    if path.last() != Some(&portals[portals.len() - 1].0) {
        path.push(portals[portals.len() - 1].0);
    }
    path
}

/// An interior segment between two boundary vertices of pseudo-quadrangle
/// `face` that splits it into two pseudo-triangles without creating a new
/// non-pointed vertex. Candidates are the non-boundary links of the
/// geodesics between opposite corners; the lexicographically smallest valid
/// vertex pair is returned.
pub fn pseudo_quad_diagonal(emb: &PlaneEmbedding, face: usize) -> Result<(usize, usize)> {
    let info = classify_face(emb, face);
    if info.class != FaceClass::PseudoQuadrangle {
        return Err(Error::NotPseudoQuadrangle { face });
    }
    let tol = emb.tolerance();
    let poly = emb.face_polygon(face);
    let n = poly.len();
    let corners: Vec<usize> = (0..n).filter(|&i| info.corners[i]).collect();
    let mut candidates = Vec::new();
    for (s, t) in [(corners[0], corners[2]), (corners[1], corners[3])] {
        let path = geodesic(&poly, s, t, tol)?;
        for w in path.windows(2) {
            let (a, b) = (w[0], w[1]);
            if (a + 1) % n == b || (b + 1) % n == a {
                continue;
            }
            let (u, v) = (info.vertices[a], info.vertices[b]);
            candidates.push((u.min(v), u.max(v)));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    let before = non_pointed_count(emb);
    candidates
        .into_iter()
        .find(|&(u, v)| splits_cleanly(emb, u, v, before))
        .ok_or(Error::NoDiagonal { face })
}

fn splits_cleanly(emb: &PlaneEmbedding, u: usize, v: usize, non_pointed: usize) -> bool {
    let Ok(fw) = emb.framework().with_edge(u, v) else {
        return false;
    };
    let Ok(split) = PlaneEmbedding::new(&fw, emb.tolerance()) else {
        return false;
    };
    let k = fw.edge_count() - 1;
    let faces = classify_faces(&split);
    non_pointed_count(&split) == non_pointed
        && [split.face_of(2 * k), split.face_of(2 * k + 1)]
            .iter()
            .all(|&f| faces[f].class == FaceClass::PseudoTriangle)
}
