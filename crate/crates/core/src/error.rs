use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants are grouped by the exit-code class the CLI maps them to
/// (see [`Error::class`]).
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid framework: {0}")]
    Validation(String),
    #[error("zero-length segment")]
    DegenerateSegment,
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("edges {0} and {1} cross")]
    Crossing(usize, usize),
    #[error("vertex {vertex} lies in the relative interior of edge {edge}")]
    VertexOnEdge { vertex: usize, edge: usize },
    #[error("framework is not connected")]
    Disconnected,
    #[error("vertex {0} is a cut vertex; reciprocal construction needs a 2-connected support")]
    NotBiconnected(usize),
    #[error("vertex {0} has two flat angles")]
    DoubleFlat(usize),
    #[error("zero angle between consecutive edges at vertex {0}")]
    ZeroAngle(usize),
    #[error("face {face} is not a pseudo-quadrangle")]
    NotPseudoQuadrangle { face: usize },
    #[error("no valid diagonal found in face {face}")]
    NoDiagonal { face: usize },
    #[error("stress vanishes on edge {0}; restrict to the support first")]
    ZeroStress(usize),
    #[error("stress has {found} entries but the framework has {expected} edges")]
    StressLength { expected: usize, found: usize },
    #[error("closure defect {defect:.3e} exceeds tolerance {tolerance:.3e}; stress is not an equilibrium")]
    ClosureDefect { defect: f64, tolerance: f64 },
    #[error("stress space has dimension {0}; pass an explicit stress")]
    AmbiguousStress(usize),
    #[error("framework has no self-stress")]
    NoStress,
    #[error("edge correspondence is not a bijection")]
    NotBijective,
    #[error("height {z} outside the open interval (0, {peak})")]
    HeightOutOfRange { z: f64, peak: f64 },
    #[error("direction is not generic: {0}")]
    NonGenericDirection(String),
    #[error("search budget exhausted after {0} attempts")]
    SearchExhausted(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Coarse error taxonomy used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    ParseOrValidation,
    Geometric,
    Condition,
    Numerical,
}

impl ErrorClass {
    /// Process exit status: 2, 3, 4 or 5.
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::ParseOrValidation => 2,
            ErrorClass::Geometric => 3,
            ErrorClass::Condition => 4,
            ErrorClass::Numerical => 5,
        }
    }
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Parse { .. } | Validation(_) | StressLength { .. } | NotBijective | Io(_) => ErrorClass::ParseOrValidation,
            DegenerateSegment
            | ZeroVector
            | Crossing(..)
            | VertexOnEdge { .. }
            | Disconnected
            | NotBiconnected(_)
            | DoubleFlat(_)
            | ZeroAngle(_) => ErrorClass::Geometric,
            NotPseudoQuadrangle { .. }
            | NoDiagonal { .. }
            | ZeroStress(_)
            | NoStress
            | Precondition(_)
            | HeightOutOfRange { .. }
            | SearchExhausted(_) => ErrorClass::Condition,
            ClosureDefect { .. } | AmbiguousStress(_) | NonGenericDirection(_) => ErrorClass::Numerical,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
