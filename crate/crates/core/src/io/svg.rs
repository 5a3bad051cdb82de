//! SVG 1.1 renderings of frameworks, reciprocal pairs and lifted level curves.
//!
//! Stress signs use two stroke weights: positive edges thick, negative edges
//! thin, unstressed edges dashed. Pointed vertices are drawn hollow and
//! non-pointed vertices filled.

use std::fmt::Write;

use crate::framework::Framework;
use crate::geometry::{Point2, Tolerance};
use crate::lifting::{LevelCurve, Lifting};
use crate::plane_graph::{build_embedding, classify_vertices};
use crate::reciprocal::ReciprocalDiagram;

const PANEL: f64 = 420.0;
const MARGIN: f64 = 24.0;

/// Maps a bounding box into a square panel with the y axis pointing up.
struct Panel {
    x0: f64,
    min: Point2,
    scale: f64,
    height: f64,
}

impl Panel {
    fn new(points: &[Point2], x0: f64) -> Self {
        let (mut lo, mut hi) = (Point2::new(f64::MAX, f64::MAX), Point2::new(f64::MIN, f64::MIN));
        for p in points {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        if points.is_empty() {
            (lo, hi) = (Point2::ORIGIN, Point2::new(1.0, 1.0));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-12);
        let scale = (PANEL - 2.0 * MARGIN) / span;
        Panel {
            x0,
            min: lo,
            scale,
            height: hi.y - lo.y,
        }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        let x = self.x0 + MARGIN + (p.x - self.min.x) * self.scale;
        let y = MARGIN + (self.height - (p.y - self.min.y)) * self.scale;
        (x, y)
    }
}

fn header(width: f64) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{PANEL:.0}\" viewBox=\"0 0 {width:.0} {PANEL:.0}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

fn stroke(sign: Option<f64>) -> &'static str {
    match sign {
        None => "stroke=\"black\" stroke-width=\"1.8\"",
        Some(w) if w > 0.0 => "stroke=\"black\" stroke-width=\"4\"",
        Some(w) if w < 0.0 => "stroke=\"black\" stroke-width=\"1.2\"",
        Some(_) => "stroke=\"gray\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"",
    }
}

fn edges(
    out: &mut String,
    panel: &Panel,
    pts: &[Point2],
    edges: &[(usize, usize)],
    signs: Option<&[f64]>,
    labels: bool,
) {
    for (k, &(i, j)) in edges.iter().enumerate() {
        let (x1, y1) = panel.map(pts[i]);
        let (x2, y2) = panel.map(pts[j]);
        let s = signs.map(|w| w[k]);
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" {} stroke-linecap=\"round\"/>",
            stroke(s)
        );
        if labels {
            let _ = writeln!(
                out,
                "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"10\" fill=\"steelblue\">{k}</text>",
                (x1 + x2) / 2.0 + 3.0,
                (y1 + y2) / 2.0 - 3.0
            );
        }
    }
}

fn vertices(out: &mut String, panel: &Panel, fw: &Framework, tol: &Tolerance) {
    let pointed: Vec<Option<bool>> = match build_embedding(fw, tol) {
        Ok(emb) => classify_vertices(&emb).iter().map(|v| Some(v.pointed)).collect(),
        Err(_) => vec![None; fw.vertex_count()],
    };
    for (v, &p) in fw.vertices().iter().enumerate() {
        let (x, y) = panel.map(p);
        let fill = match pointed[v] {
            Some(true) => "white",
            Some(false) => "black",
            None => "gray",
        };
        let _ = writeln!(
            out,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"1.2\"/>"
        );
    }
}

/// A framework with optional stress signs on its edges.
pub fn render_framework(fw: &Framework, omega: Option<&[f64]>, tol: &Tolerance) -> String {
    let panel = Panel::new(fw.vertices(), 0.0);
    let mut out = header(PANEL);
    edges(&mut out, &panel, fw.vertices(), fw.edges(), omega, false);
    vertices(&mut out, &panel, fw, tol);
    out.push_str("</svg>\n");
    out
}

/// The stressed framework on the left and its reciprocal on the right, with
/// matching edges labelled by input edge index. Fused reciprocal vertices
/// are ringed.
pub fn render_reciprocal_pair(fw: &Framework, omega: &[f64], recip: &ReciprocalDiagram, tol: &Tolerance) -> String {
    let left = Panel::new(fw.vertices(), 0.0);
    let right = Panel::new(&recip.vertices, PANEL);
    let mut out = header(2.0 * PANEL);
    let _ = writeln!(out, "<g id=\"framework\">");
    edges(&mut out, &left, fw.vertices(), fw.edges(), Some(omega), true);
    vertices(&mut out, &left, fw, tol);
    let _ = writeln!(out, "</g>\n<g id=\"reciprocal\">");
    let _ = writeln!(
        out,
        "<line x1=\"{PANEL}\" y1=\"0\" x2=\"{PANEL}\" y2=\"{PANEL}\" stroke=\"lightgray\"/>"
    );
    for (k, &(i, j)) in recip.edges.iter().enumerate() {
        let (x1, y1) = right.map(recip.vertices[i]);
        let (x2, y2) = right.map(recip.vertices[j]);
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" {} stroke-linecap=\"round\"/>",
            stroke(Some(recip.dual_stress[k]))
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"10\" fill=\"steelblue\">{}</text>",
            (x1 + x2) / 2.0 + 3.0,
            (y1 + y2) / 2.0 - 3.0,
            recip.edge_map[k]
        );
    }
    for (v, &p) in recip.vertices.iter().enumerate() {
        let (x, y) = right.map(p);
        let fused = recip.fused.iter().any(|&(a, _)| recip.face_map[a] == v);
        let _ = writeln!(out, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"black\"/>");
        if fused {
            let _ = writeln!(
                out,
                "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"8\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"><title>fused</title></circle>"
            );
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// The stressed framework with level curves of its lift overlaid.
pub fn render_lift(lift: &Lifting, curves: &[LevelCurve]) -> String {
    let emb = &lift.embedding;
    let fw = emb.framework();
    let panel = Panel::new(fw.vertices(), 0.0);
    let mut out = header(PANEL);
    edges(&mut out, &panel, fw.vertices(), fw.edges(), Some(&lift.omega), false);
    let peak = lift.peak_height().max(f64::MIN_POSITIVE);
    for c in curves {
        // Hue runs from blue at the base to red at the peak.
        let hue = 240.0 * (1.0 - (c.z / peak).clamp(0.0, 1.0));
        for comp in &c.components {
            let pts: Vec<String> = comp
                .iter()
                .map(|&p| {
                    let (x, y) = panel.map(p);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let tag = if c.closed { "polygon" } else { "polyline" };
            let _ = writeln!(
                out,
                "<{tag} points=\"{}\" fill=\"none\" stroke=\"hsl({hue:.0},80%,45%)\" stroke-width=\"1\"><title>z = {:.6}</title></{tag}>",
                pts.join(" "),
                c.z
            );
        }
    }
    vertices(&mut out, &panel, fw, emb.tolerance());
    out.push_str("</svg>\n");
    out
}
