//! Polyhedral lifting of a stressed circuit with its extrema and level curves.
//!
//! cargo run --example lifting

use recipro::lifting::{extremum_report, level_curve, maxwell_lifting, pointedness_at_peak};
use recipro::plane_graph::build_embedding;
use recipro::rigidity::unique_stress;
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let tol = Tolerance::default();
    let fw = fixtures::triangulated_polygon_circuit(8, 4)?;
    let emb = build_embedding(&fw, &tol)?;
    let lift = maxwell_lifting(&emb, &unique_stress(&fw, &tol)?)?;

    for (v, h) in lift.heights.iter().enumerate() {
        println!("vertex {v}: height {h:.5}");
    }
    println!("closure defect {:.2e}", lift.closure_defect);
    let ext = extremum_report(&lift)?;
    println!("maxima {:?}", ext.maxima);
    println!("pointed lifted vertices {:?}", pointedness_at_peak(&lift));

    let peak = lift.peak_height();
    for i in 1..=4 {
        let curve = level_curve(&lift, peak * i as f64 / 5.0)?;
        println!(
            "level {:.4}: {} points, closed {} simple {}",
            curve.z,
            curve.points.len(),
            curve.closed,
            curve.simple
        );
    }
    Ok(())
}
