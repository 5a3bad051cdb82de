//! A circuit whose stress vanishes on one edge, and a perturbation that
//! brings it back.
//!
//! cargo run --example singular_circuit

use recipro::plane_graph::build_embedding;
use recipro::reciprocal::singular_circuit_report;
use recipro::rigidity::unique_stress;
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let tol = Tolerance::default();
    let fw = fixtures::singular_concurrent(0.0);
    let report = singular_circuit_report(&build_embedding(&fw, &tol)?)?;
    println!("stress {:?}", report.stress.omega);
    println!("zero edges {:?}", report.dropped_edges);
    println!("fused reciprocal vertices {:?}", report.reciprocal.fused);
    for check in &report.checks {
        println!("{check:?}");
    }

    let shifted = fixtures::singular_concurrent(1e-3);
    let s = unique_stress(&shifted, &tol)?;
    println!(
        "after a 1e-3 shift: stress on edge {} is {:.3e}",
        fixtures::SINGULAR_EDGE,
        s.omega[fixtures::SINGULAR_EDGE]
    );
    Ok(())
}
