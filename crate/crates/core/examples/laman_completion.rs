//! Completes a reciprocal with pseudo-quadrangles to a Laman circuit.
//!
//! The input is the reciprocal of the singular circuit's support. Its own
//! reciprocal is the support again, which has one pseudo-quadrangle; the
//! completion splits it with a diagonal.
//!
//! cargo run --example laman_completion

use recipro::plane_graph::{build_embedding, classify_faces, is_laman_circuit, non_pointed_count, FaceClass};
use recipro::reciprocal::{complete_to_laman_circuit, singular_circuit_report};
use recipro::rigidity::SelfStress;
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let tol = Tolerance::default();
    let singular = singular_circuit_report(&build_embedding(&fixtures::singular_concurrent(0.0), &tol)?)?;
    let dual = singular.reciprocal.framework()?;
    let stress = SelfStress::new(&dual, singular.reciprocal.dual_stress.clone())?;

    let done = complete_to_laman_circuit(&build_embedding(&dual, &tol)?, &stress)?;
    let before = build_embedding(&done.reciprocal.framework()?, &tol)?;
    let quads = classify_faces(&before)
        .iter()
        .filter(|f| f.class == FaceClass::PseudoQuadrangle)
        .count();
    let out = &done.framework;
    println!("reciprocal has {quads} pseudo-quadrangle(s)");
    println!(
        "added diagonals {:?}",
        done.added_edges.iter().map(|&k| out.edges()[k]).collect::<Vec<_>>()
    );
    println!(
        "laman circuit {} non-pointed {}",
        is_laman_circuit(out.edges(), out.vertex_count()),
        non_pointed_count(&build_embedding(out, &tol)?)
    );
    Ok(())
}
