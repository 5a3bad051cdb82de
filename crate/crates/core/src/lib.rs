//! Self-stresses, reciprocal diagrams and Maxwell liftings of planar
//! bar-and-joint frameworks.
//!
//! The pipeline runs bottom-up: a [`Framework`] is embedded in the plane
//! ([`plane_graph`]), its self-stresses are computed ([`rigidity`]), and each
//! stress yields a reciprocal diagram ([`reciprocal`]) and a polyhedral lift
//! ([`lifting`]). The sign conditions in [`rigidity`] predict, from the
//! stress alone, whether the reciprocal drawing is free of crossings.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod framework;
pub mod geometry;
pub mod io;
pub mod lifting;
pub mod plane_graph;
pub mod reciprocal;
pub mod rigidity;

pub use error::{Error, ErrorClass, Result};
pub use framework::Framework;
pub use geometry::{Point2, Tolerance, Vector2};
