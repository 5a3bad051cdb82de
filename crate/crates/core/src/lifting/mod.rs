//! Maxwell liftings of self-stresses to piecewise-linear surfaces.

mod extrema;
mod level;
mod saddle;
mod surface;

pub use extrema::{extremum_report, lifted_vertex_is_pointed, pointedness_at_peak, Extremum, ExtremumReport};
pub use level::{level_curve, level_curves_nested, LevelCurve};
pub use saddle::{saddle_analysis, SaddleReport};
pub use surface::{
    coplanarity_check, gradient_diagram, maxwell_lifting, maxwell_lifting_with, GradientDiagram, Lifting, TreeOrder,
};
