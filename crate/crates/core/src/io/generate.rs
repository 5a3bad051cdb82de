//! Named fixture kinds as framework documents.

use std::fmt;
use std::str::FromStr;

use super::document::FrameworkDocument;
use crate::error::{Error, Result};
use crate::fixtures;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    K4,
    Wheel,
    TriangulatedPolygonCircuit,
    SingularConcurrent,
    BadQuadrangleSearch,
    PointedPt,
    FigureEight,
    AlmostPointed,
}

impl FixtureKind {
    pub const ALL: [FixtureKind; 8] = [
        FixtureKind::K4,
        FixtureKind::Wheel,
        FixtureKind::TriangulatedPolygonCircuit,
        FixtureKind::SingularConcurrent,
        FixtureKind::BadQuadrangleSearch,
        FixtureKind::PointedPt,
        FixtureKind::FigureEight,
        FixtureKind::AlmostPointed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureKind::K4 => "k4",
            FixtureKind::Wheel => "wheel",
            FixtureKind::TriangulatedPolygonCircuit => "triangulated-polygon-circuit",
            FixtureKind::SingularConcurrent => "singular-concurrent",
            FixtureKind::BadQuadrangleSearch => "bad-quadrangle-search",
            FixtureKind::PointedPt => "pointed-pt",
            FixtureKind::FigureEight => "figure-eight",
            FixtureKind::AlmostPointed => "almost-pointed",
        }
    }
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown fixture kind {s:?}")))
    }
}

/// Instance of `kind` for `seed` at its default size.
pub fn generate_fixture(kind: FixtureKind, seed: u64) -> Result<FrameworkDocument> {
    generate_sized(kind, seed, None)
}

/// Instance of `kind` for `seed`. `size` is the rim length of a wheel and the
/// vertex count of triangulated polygons and pointed pseudo-triangulations.
pub fn generate_sized(kind: FixtureKind, seed: u64, size: Option<usize>) -> Result<FrameworkDocument> {
    let doc = match kind {
        FixtureKind::K4 => FrameworkDocument::from_framework(&fixtures::k4())
            .expect("laman_circuit", true)
            .expect("non_pointed", 1),
        FixtureKind::Wheel => FrameworkDocument::from_framework(&fixtures::wheel(size.unwrap_or(4), seed)?)
            .expect("laman_circuit", true)
            .expect("non_pointed", 1),
        FixtureKind::TriangulatedPolygonCircuit => {
            FrameworkDocument::from_framework(&fixtures::triangulated_polygon_circuit(size.unwrap_or(8), seed)?)
                .expect("laman_circuit", true)
                .expect("non_pointed", 1)
        }
        FixtureKind::SingularConcurrent => FrameworkDocument::from_framework(&fixtures::singular_concurrent(0.0))
            .expect("zero_stress_edge", fixtures::SINGULAR_EDGE),
        FixtureKind::BadQuadrangleSearch => {
            let (fw, stress) = fixtures::bad_quadrangle_witness(seed, fixtures::DEFAULT_BUDGET)?;
            FrameworkDocument::from_framework(&fw)
                .with_stress(stress.omega)
                .expect("vertex_conditions", true)
                .expect("good", false)
        }
        FixtureKind::PointedPt => FrameworkDocument::from_framework(&fixtures::pointed_pt(size.unwrap_or(8), seed)?)
            .expect("non_pointed", 0)
            .expect("stress_dimension", 0),
        FixtureKind::FigureEight => FrameworkDocument::from_framework(&fixtures::figure_eight(seed)?)
            .expect("non_pointed", 2)
            .expect("good", false),
        FixtureKind::AlmostPointed => FrameworkDocument::from_framework(&fixtures::almost_pointed_non_circuit(seed)?)
            .expect("non_pointed", 1)
            .expect("laman_circuit", false),
    };
    Ok(doc.with_name(&format!("{kind}-{seed}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Tolerance;
    use crate::plane_graph::{build_embedding, is_laman_circuit, non_pointed_count};
    use crate::rigidity::stress_dimension;

    #[test]
    fn names_round_trip() {
        for k in FixtureKind::ALL {
            assert_eq!(k.name().parse::<FixtureKind>().unwrap(), k);
        }
        assert!("hexagon".parse::<FixtureKind>().is_err());
    }

    #[test]
    fn k4_document_is_the_fixture() {
        let doc = generate_fixture(FixtureKind::K4, 0).unwrap();
        assert_eq!(doc.framework().unwrap(), fixtures::k4());
    }

    #[test]
    fn outputs_match_their_advertised_classification() {
        let tol = Tolerance::default();
        for kind in FixtureKind::ALL {
            for seed in 0..3 {
                let doc = generate_fixture(kind, seed).unwrap();
                let fw = doc.framework().unwrap();
                let emb = build_embedding(&fw, &tol).unwrap();
                for (key, value) in &doc.metadata.as_ref().unwrap().expected {
                    let ok = match key.as_str() {
                        "laman_circuit" => *value == is_laman_circuit(fw.edges(), fw.vertex_count()),
                        "non_pointed" => *value == non_pointed_count(&emb),
                        "stress_dimension" => *value == stress_dimension(&fw, &tol),
                        _ => true,
                    };
                    assert!(ok, "{kind} seed {seed}: {key}");
                }
            }
        }
    }

    #[test]
    fn default_wheel_is_w4() {
        let fw = generate_fixture(FixtureKind::Wheel, 7).unwrap().framework().unwrap();
        assert_eq!((fw.vertex_count(), fw.edge_count()), (5, 8));
    }
}
