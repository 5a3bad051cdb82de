//! Documents, reports, SVG output and fixture generation.

mod document;
mod generate;
mod report;
mod svg;

pub use document::{
    read, write, FrameworkDocument, LiftDocument, LiftFace, Metadata, ReciprocalDocument, FORMAT_VERSION,
};
pub use generate::{generate_fixture, generate_sized, FixtureKind};
pub use report::{
    analyze, near_degenerate_angles, AnalysisOptions, AnalysisReport, Check, FaceRow, LamanSummary, LiftingSummary,
    ReciprocalSummary, VertexRow,
};
pub use svg::{render_framework, render_lift, render_reciprocal_pair};
