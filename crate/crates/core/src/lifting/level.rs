//! Horizontal cross-sections of a lifted surface.

use serde::{Deserialize, Serialize};

use super::surface::Lifting;
use crate::error::{Error, Result};
use crate::geometry::{point_in_polygon, polygon_is_simple, rotate90, Point2};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelCurve {
    /// Height actually used, after nudging off vertex heights.
    pub z: f64,
    /// Longest traced component.
    pub points: Vec<Point2>,
    /// Every component closes up.
    pub closed: bool,
    /// A single closed component without self-intersections.
    pub simple: bool,
    pub components: Vec<Vec<Point2>>,
}

/// Cross-section of the lift at height `z`, strictly between zero and the peak.
pub fn level_curve(lift: &Lifting, z: f64) -> Result<LevelCurve> {
    let emb = &lift.embedding;
    let fw = emb.framework();
    let peak = lift.peak_height();
    if !(z > 0.0 && z < peak) {
        return Err(Error::HeightOutOfRange { z, peak });
    }
    let step = 1e-12 * lift.height_scale();
    let mut z = z;
    for _ in 0..16 {
        if lift.heights.iter().all(|h| (h - z).abs() >= step) {
            break;
        }
        z += step;
    }

    let m = fw.edge_count();
    let crossing: Vec<Option<Point2>> = fw
        .edges()
        .iter()
        .map(|&(i, j)| {
            let (hi, hj) = (lift.heights[i], lift.heights[j]);
            ((hi - z) * (hj - z) < 0.0).then(|| fw.position(i).lerp(fw.position(j), (z - hi) / (hj - hi)))
        })
        .collect();

    let mut links: Vec<Vec<usize>> = vec![Vec::new(); m];
    for f in 0..emb.face_count() {
        let a = lift.gradients[f];
        let mut ks: Vec<usize> = emb
            .face(f)
            .iter()
            .map(|&d| d / 2)
            .filter(|&k| crossing[k].is_some())
            .collect();
        ks.sort_unstable();
        // An edge seen twice in one face is a bridge and does not bound it.
        let mut hits: Vec<usize> = ks
            .iter()
            .enumerate()
            .filter(|&(i, k)| (i == 0 || ks[i - 1] != *k) && ks.get(i + 1) != Some(k))
            .map(|(_, &k)| k)
            .collect();
        if hits.is_empty() {
            continue;
        }
        if hits.len() % 2 == 1 {
            return Err(Error::NonGenericDirection(format!(
                "level {z} meets face {f} an odd number of times"
            )));
        }
        let along = rotate90(a);
        hits.sort_by(|&k1, &k2| {
            let t1 = along.dot(crossing[k1].unwrap().to_vector());
            let t2 = along.dot(crossing[k2].unwrap().to_vector());
            t1.total_cmp(&t2)
        });
        for pair in hits.chunks(2) {
            links[pair[0]].push(pair[1]);
            links[pair[1]].push(pair[0]);
        }
    }

    let mut seen = vec![false; m];
    let mut components = Vec::new();
    let mut closed = true;
    // Open chains first, starting from their ends, then the remaining cycles.
    let starts: Vec<usize> = (0..m)
        .filter(|&k| crossing[k].is_some() && links[k].len() < 2)
        .chain((0..m).filter(|&k| crossing[k].is_some()))
        .collect();
    for s in starts {
        if seen[s] {
            continue;
        }
        let mut chain = vec![s];
        seen[s] = true;
        let mut cur = s;
        while let Some(&nx) = links[cur].iter().find(|&&k| !seen[k]) {
            seen[nx] = true;
            chain.push(nx);
            cur = nx;
        }
        let cyclic = links[s].len() == 2 && links[cur].contains(&s) && chain.len() > 2;
        closed &= cyclic;
        components.push(chain.iter().map(|&k| crossing[k].unwrap()).collect::<Vec<_>>());
    }

    let points = components.iter().max_by_key(|c| c.len()).cloned().unwrap_or_default();
    let simple = closed && components.len() == 1 && polygon_is_simple(&points, emb.tolerance());
    Ok(LevelCurve {
        z,
        points,
        closed,
        simple,
        components,
    })
}

/// Whether each simple curve lies inside the previous one for increasing heights.
pub fn level_curves_nested(curves: &[LevelCurve]) -> bool {
    curves.windows(2).all(|w| {
        w[0].z < w[1].z && w[0].simple && w[1].simple && w[1].points.iter().all(|&p| point_in_polygon(p, &w[0].points))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::Tolerance;
    use crate::lifting::maxwell_lifting;
    use crate::plane_graph::build_embedding;
    use crate::rigidity::unique_stress;

    fn k4_lift() -> Lifting {
        let fw = fixtures::k4();
        let t = Tolerance::default();
        let emb = build_embedding(&fw, &t).unwrap();
        maxwell_lifting(&emb, &unique_stress(&fw, &t).unwrap()).unwrap()
    }

    #[test]
    fn k4_half_height_is_spoke_midpoints() {
        let lift = k4_lift();
        let c = level_curve(&lift, 2.0 / 3.0).unwrap();
        assert!(c.closed && c.simple);
        assert_eq!(c.points.len(), 3);
        let h = Point2::new(2.0, 1.0);
        let mut expected: Vec<Point2> = [Point2::new(0.0, 0.0), Point2::new(4.0, 0.0), Point2::new(2.0, 3.0)]
            .iter()
            .map(|&p| p.lerp(h, 0.5))
            .collect();
        for p in &c.points {
            let i = expected.iter().position(|q| q.distance(*p) < 1e-9).expect("midpoint");
            expected.remove(i);
        }
    }

    #[test]
    fn k4_levels_are_nested() {
        let lift = k4_lift();
        let curves: Vec<LevelCurve> = [0.2, 0.6, 1.0, 1.3]
            .iter()
            .map(|&z| level_curve(&lift, z).unwrap())
            .collect();
        assert!(level_curves_nested(&curves));
    }

    #[test]
    fn out_of_range_heights_fail() {
        let lift = k4_lift();
        for z in [0.0, -1.0, 4.0 / 3.0, 2.0] {
            assert!(matches!(level_curve(&lift, z), Err(Error::HeightOutOfRange { .. })));
        }
    }
}
