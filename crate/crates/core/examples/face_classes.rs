//! Face and vertex classification of the singular circuit with its
//! zero-stress edge removed, plus the diagonal that splits its
//! pseudo-quadrangle.
//!
//! cargo run --example face_classes

use recipro::plane_graph::{
    build_embedding, classify_faces, classify_vertices, counting_check, pseudo_quad_diagonal, FaceClass,
};
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let full = fixtures::singular_concurrent(0.0);
    let keep: Vec<bool> = (0..full.edge_count()).map(|k| k != fixtures::SINGULAR_EDGE).collect();
    let (fw, _, _) = full.restrict(&keep);
    let emb = build_embedding(&fw, &Tolerance::default())?;
    for f in classify_faces(&emb) {
        println!("face {}: {:?} corners={} boundary {:?}", f.id, f.class, f.k, f.vertices);
        if f.class == FaceClass::PseudoQuadrangle {
            println!("  diagonal {:?}", pseudo_quad_diagonal(&emb, f.id)?);
        }
    }
    for v in classify_vertices(&emb) {
        println!("vertex {}: degree {} pointed {}", v.id, v.degree, v.pointed);
    }
    let c = counting_check(&emb);
    println!(
        "counts: e={} t={} q={} x={} y={} holds={}",
        c.e, c.t, c.q, c.x, c.y, c.holds
    );
    Ok(())
}
