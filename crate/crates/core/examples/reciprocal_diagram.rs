//! Reciprocal of a wheel's self-stress, checked for crossings and orientation.
//!
//! cargo run --example reciprocal_diagram

use recipro::plane_graph::build_embedding;
use recipro::reciprocal::{cremona_reciprocal, diagram_noncrossing_report, is_reciprocal_pair};
use recipro::rigidity::unique_stress;
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let tol = Tolerance::default();
    let fw = fixtures::wheel(5, 3)?;
    let emb = build_embedding(&fw, &tol)?;
    let stress = unique_stress(&fw, &tol)?;
    let recip = cremona_reciprocal(&emb, &stress)?;

    for (k, &(a, b)) in recip.edges.iter().enumerate() {
        let e = recip.edge_map[k];
        println!(
            "dual edge {a}-{b} for edge {:?} with stress {:+.4}",
            fw.edges()[e],
            stress.omega[e]
        );
    }
    let nc = diagram_noncrossing_report(&recip);
    println!("non-crossing: {} orientation: {:?}", nc.noncrossing, nc.orientation);
    println!("closure defect: {:.2e}", recip.closure_defect);
    println!(
        "reciprocal pair: {}",
        is_reciprocal_pair(&emb, &recip.framework()?, &recip.edge_map, &tol)?
    );
    Ok(())
}
