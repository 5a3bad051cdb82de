//! Combinatorial structure of non-crossing frameworks.

mod classify;
mod diagonal;
mod dual;
mod embedding;
mod pebble;

pub use classify::{
    classify_face, classify_faces, classify_vertices, counting_check, is_pseudo_quadrangulation,
    is_pseudo_triangulation, non_pointed_count, Counts, FaceClass, FaceInfo, VertexInfo,
};
pub use diagonal::{geodesic, pseudo_quad_diagonal, triangulate};
pub use dual::{dual_graph, DualGraph};
pub use embedding::{build_embedding, AngleKind, AngleRecord, Dart, PlaneEmbedding};
pub use pebble::{is_laman, is_laman_circuit, pebble_game_rank, PebbleResult};
