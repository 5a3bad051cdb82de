//! Writes SVG drawings of a framework, its reciprocal and its lifting to the
//! system temp directory.
//!
//! cargo run --example svg_render

use recipro::io::{render_framework, render_lift, render_reciprocal_pair, write};
use recipro::lifting::{level_curve, maxwell_lifting};
use recipro::plane_graph::build_embedding;
use recipro::reciprocal::cremona_reciprocal;
use recipro::rigidity::unique_stress;
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let tol = Tolerance::default();
    let fw = fixtures::triangulated_polygon_circuit(9, 11)?;
    let emb = build_embedding(&fw, &tol)?;
    let stress = unique_stress(&fw, &tol)?;
    let recip = cremona_reciprocal(&emb, &stress)?;
    let lift = maxwell_lifting(&emb, &stress)?;
    let curves = (1..=6)
        .map(|i| level_curve(&lift, lift.peak_height() * i as f64 / 7.0))
        .collect::<recipro::Result<Vec<_>>>()?;

    let dir = std::env::temp_dir();
    let files = [
        ("framework.svg", render_framework(&fw, Some(&stress.omega), &tol)),
        (
            "reciprocal.svg",
            render_reciprocal_pair(&fw, &stress.omega, &recip, &tol),
        ),
        ("lift.svg", render_lift(&lift, &curves)),
    ];
    for (name, svg) in files {
        let path = dir.join(name);
        write(&path, &svg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
