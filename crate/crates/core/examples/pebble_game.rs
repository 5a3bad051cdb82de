//! Laman rank by pebble game against the numerical rank of the rigidity matrix.
//!
//! cargo run --example pebble_game

use recipro::plane_graph::{is_laman, is_laman_circuit, pebble_game_rank};
use recipro::rigidity::{numerical_rank, rigidity_matrix};
use recipro::{fixtures, Tolerance};

fn main() -> recipro::Result<()> {
    let tol = Tolerance::default();
    let cases = [
        ("K4", fixtures::k4()),
        ("wheel W6", fixtures::wheel(6, 1)?),
        ("pointed pseudo-triangulation", fixtures::pointed_pt(7, 2)?),
        ("figure eight", fixtures::figure_eight(0)?),
    ];
    for (name, fw) in cases {
        let (n, edges) = (fw.vertex_count(), fw.edges());
        let pebble = pebble_game_rank(edges, n);
        let numeric = numerical_rank(&rigidity_matrix(&fw), tol.eps_rank);
        println!(
            "{name}: n={n} e={} pebble rank {} numerical rank {numeric} laman {} circuit {}",
            edges.len(),
            pebble.rank,
            is_laman(edges, n),
            is_laman_circuit(edges, n)
        );
    }
    Ok(())
}
