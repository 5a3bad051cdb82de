//! Reciprocal diagrams of stressed frameworks.

mod diagram;
mod report;
mod singular;

pub use diagram::{cremona_reciprocal, is_reciprocal_pair, maxwell_reciprocal, Mode, ReciprocalDiagram};
pub use report::{
    count_corollaries_check, diagram_noncrossing_report, reciprocal_noncrossing_report, CorollaryReport,
    NoncrossingReport, Orientation,
};
pub use singular::{
    complete_to_laman_circuit, singular_circuit_report, CompletedCircuit, SingularCheck, SingularReport,
};
