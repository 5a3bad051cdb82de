//! Rigidity matrices, self-stresses and the sign conditions for non-crossing
//! reciprocals.

mod angles;
mod conditions;
mod matrix;
mod stress;

pub use angles::{classify_angles, classify_sign_pattern, strict_signs, AngleClassification, Properness};
pub use conditions::{
    bad_quadrangles_from, check_bad_quadrangles, check_face_conditions, check_vertex_conditions, face_conditions_from,
    force_polygon, is_good_self_stress, proper_angle_count_check, proper_counts, vertex_conditions_from,
    ConditionReport, FaceCase, FaceConditions, FaceDiagnosis, ProperCountReport, VertexCase, VertexConditions,
    VertexDiagnosis,
};
pub use matrix::{numerical_rank, rigidity_matrix};
pub use stress::{
    boundary_edges, equilibrium_residual, random_combination, restrict_to_support, self_stress_space, stress_dimension,
    stress_dimension_bound_check, unique_stress, SelfStress, Support,
};
