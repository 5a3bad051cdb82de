//! Full analysis of a triangle with a hub vertex.
//!
//! cargo run --example k4_pipeline

use recipro::fixtures;
use recipro::io::{analyze, AnalysisOptions};

fn main() -> recipro::Result<()> {
    let fw = fixtures::k4();
    let report = analyze(&fw, None, &AnalysisOptions::default())?;
    let c = &report.counts;
    println!("counts: e={} t={} q={} x={} y={}", c.e, c.t, c.q, c.x, c.y);
    println!("stress: {:?}", report.stress.as_deref().unwrap_or(&[]));
    for check in &report.checks {
        println!("{} {}", if check.pass { "PASS" } else { "FAIL" }, check.name);
    }
    println!("status: {}", report.status);
    Ok(())
}
