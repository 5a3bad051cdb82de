//! Bar-and-joint frameworks in the plane.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{point_in_segment_interior, segments_properly_intersect, Point2, Tolerance};

/// A graph with one plane position per vertex.
///
/// Edges are unordered pairs, stored in the orientation they were given; that
/// orientation fixes the direction convention for per-edge vectors elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct Framework {
    vertices: Vec<Point2>,
    edges: Vec<(usize, usize)>,
}

impl Framework {
    /// Builds a framework, checking structural invariants: finite coordinates,
    /// valid endpoints, no self-loops and no duplicate edges.
    pub fn new(vertices: Vec<Point2>, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, p) in vertices.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::Validation(format!("vertex {i} has a non-finite coordinate")));
            }
        }
        let n = vertices.len();
        let mut seen = HashSet::new();
        for (k, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::Validation(format!(
                    "edge {k} = [{a}, {b}] references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::Validation(format!("edge {k} = [{a}, {b}] is a self-loop")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Validation(format!("edge {k} = [{a}, {b}] is a duplicate")));
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Like [`Framework::new`] and additionally rejects vertices that coincide
    /// within `eps_geom`.
    pub fn with_tolerance(vertices: Vec<Point2>, edges: Vec<(usize, usize)>, tol: &Tolerance) -> Result<Self> {
        let fw = Self::new(vertices, edges)?;
        fw.check_distinct_vertices(tol)?;
        Ok(fw)
    }

    pub fn check_distinct_vertices(&self, tol: &Tolerance) -> Result<()> {
        let scale = self.scale().max(f64::MIN_POSITIVE);
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                if self.vertices[i].distance(self.vertices[j]) <= tol.eps_geom * scale {
                    return Err(Error::Validation(format!("vertices {i} and {j} coincide")));
                }
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn position(&self, v: usize) -> Point2 {
        self.vertices[v]
    }

    /// Largest absolute coordinate; the natural length scale for relative
    /// tolerances.
    pub fn scale(&self) -> f64 {
        self.vertices.iter().map(Point2::magnitude).fold(0.0, f64::max)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Neighbor lists, in edge order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// A cut vertex, if any (graph assumed connected).
    pub fn cut_vertex(&self) -> Option<usize> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        // Iterative DFS with explicit child counters.
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut root_children = 0;
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let (w, k) = adj[v][*next];
                    *next += 1;
                    if k == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, k, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if u != root && low[v] >= disc[u] {
                            return Some(u);
                        }
                    }
                }
            }
            if root_children > 1 {
                return Some(root);
            }
        }
        None
    }

    /// First violation of non-crossingness, if any.
    pub fn first_crossing(&self, tol: &Tolerance) -> Result<Option<Error>> {
        first_crossing(&self.vertices, &self.edges, tol)
    }

    /// True iff no two edges properly intersect and no vertex lies in the
    /// relative interior of a non-incident edge.
    pub fn is_non_crossing(&self, tol: &Tolerance) -> bool {
        matches!(self.first_crossing(tol), Ok(None))
    }

    /// Subframework on the chosen edges, dropping vertices that become
    /// isolated. Returns the framework with the old index of every new vertex
    /// and of every new edge.
    pub fn restrict(&self, keep_edge: &[bool]) -> (Framework, Vec<usize>, Vec<usize>) {
        let n = self.vertices.len();
        let mut used = vec![false; n];
        let mut edge_map = Vec::new();
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if keep_edge[k] {
                used[a] = true;
                used[b] = true;
                edge_map.push(k);
            }
        }
        let mut new_index = vec![usize::MAX; n];
        let mut vertex_map = Vec::new();
        for v in 0..n {
            if used[v] {
                new_index[v] = vertex_map.len();
                vertex_map.push(v);
            }
        }
        let vertices = vertex_map.iter().map(|&v| self.vertices[v]).collect();
        let edges = edge_map
            .iter()
            .map(|&k| {
                let (a, b) = self.edges[k];
                (new_index[a], new_index[b])
            })
            .collect();
        (Framework { vertices, edges }, vertex_map, edge_map)
    }

    /// Same graph with new positions.
    pub fn with_positions(&self, vertices: Vec<Point2>) -> Result<Framework> {
        if vertices.len() != self.vertices.len() {
            return Err(Error::Validation("position count mismatch".into()));
        }
        Framework::new(vertices, self.edges.clone())
    }

    pub fn with_edge(&self, a: usize, b: usize) -> Result<Framework> {
        let mut edges = self.edges.clone();
        edges.push((a, b));
        Framework::new(self.vertices.clone(), edges)
    }
}

/// Non-crossing test on raw positions and edges, used for drawings that may
/// carry parallel edges (for example a reciprocal under construction).
pub fn first_crossing(points: &[Point2], edges: &[(usize, usize)], tol: &Tolerance) -> Result<Option<Error>> {
    let scale = points
        .iter()
        .map(Point2::magnitude)
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].distance(points[j]) <= tol.eps_geom * scale {
                return Ok(Some(Error::Validation(format!("vertices {i} and {j} coincide"))));
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if segments_properly_intersect(points[a], points[b], points[c], points[d], tol)? {
                return Ok(Some(Error::Crossing(i, j)));
            }
        }
        for (v, &p) in points.iter().enumerate() {
            if v != a && v != b && point_in_segment_interior(p, points[a], points[b], tol) {
                return Ok(Some(Error::VertexOnEdge { vertex: v, edge: i }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(f64, f64)]) -> Vec<Point2> {
        c.iter().map(|&(x, y)| Point2::new(x, y)).collect()
    }

    #[test]
    fn rejects_bad_edges() {
        let v = pts(&[(0., 0.), (1., 0.)]);
        assert!(matches!(
            Framework::new(v.clone(), vec![(0, 0)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            Framework::new(v.clone(), vec![(0, 2)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            Framework::new(v, vec![(0, 1), (1, 0)]),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn rejects_coincident_vertices() {
        let v = pts(&[(0., 0.), (0., 0.), (1., 0.)]);
        let t = Tolerance::default();
        assert!(Framework::with_tolerance(v, vec![(0, 2)], &t).is_err());
    }

    #[test]
    fn non_crossing_examples() {
        let t = Tolerance::default();
        let tri = Framework::new(pts(&[(0., 0.), (1., 0.), (0., 1.)]), vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(tri.is_non_crossing(&t));
        let bow = Framework::new(
            pts(&[(0., 0.), (1., 0.), (0., 1.), (1., 1.)]),
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap();
        assert!(!bow.is_non_crossing(&t));
        // Vertex resting on a non-incident edge.
        let t_junction = Framework::new(pts(&[(0., 0.), (2., 0.), (1., 0.), (1., 1.)]), vec![(0, 1), (2, 3)]).unwrap();
        assert!(!t_junction.is_non_crossing(&t));
    }

    #[test]
    fn cut_vertices() {
        let bowtie = Framework::new(
            pts(&[(0., 0.), (1., 0.), (0.5, 1.), (1.5, 1.), (2., 0.)]),
            vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)],
        )
        .unwrap();
        assert_eq!(bowtie.cut_vertex(), Some(2));
        let tri = Framework::new(pts(&[(0., 0.), (1., 0.), (0., 1.)]), vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri.cut_vertex(), None);
    }

    #[test]
    fn restrict_drops_isolated_vertices() {
        let fw = Framework::new(
            pts(&[(0., 0.), (1., 0.), (0., 1.), (5., 5.)]),
            vec![(0, 1), (1, 2), (2, 3)],
        )
        .unwrap();
        let (sub, vmap, emap) = fw.restrict(&[true, true, false]);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(vmap, vec![0, 1, 2]);
        assert_eq!(emap, vec![0, 1]);
    }
}
