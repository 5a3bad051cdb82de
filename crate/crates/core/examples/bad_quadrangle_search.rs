//! Seeded search for a stress whose vertex conditions hold but whose
//! reciprocal crosses itself.
//!
//! cargo run --release --example bad_quadrangle_search -- 7

use recipro::plane_graph::build_embedding;
use recipro::reciprocal::{cremona_reciprocal, diagram_noncrossing_report};
use recipro::rigidity::is_good_self_stress;
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let (fw, stress) = fixtures::bad_quadrangle_witness(seed, fixtures::DEFAULT_BUDGET)?;
    let emb = build_embedding(&fw, &Tolerance::default())?;
    let report = is_good_self_stress(&emb, &stress)?;
    println!("seed {seed}: {} vertices, {} edges", fw.vertex_count(), fw.edge_count());
    println!(
        "vertex conditions ok: {}",
        report.vertex_conditions.as_ref().is_some_and(|v| v.ok)
    );
    println!("bad quadrangles at {:?}", report.bad_quadrangle_vertices);
    let recip = cremona_reciprocal(&emb, &stress)?;
    println!(
        "reciprocal non-crossing: {}",
        diagram_noncrossing_report(&recip).noncrossing
    );
    Ok(())
}
