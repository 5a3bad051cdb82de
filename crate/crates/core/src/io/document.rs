//! JSON documents for frameworks, reciprocals and liftings.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::geometry::Point2;
use crate::lifting::{LevelCurve, Lifting};
use crate::reciprocal::{Mode, ReciprocalDiagram};
use crate::rigidity::SelfStress;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Classifications the instance is expected to have, keyed by check name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameworkDocument {
    pub version: u32,
    pub vertices: Vec<[f64; 2]>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stress: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl FrameworkDocument {
    pub fn from_framework(fw: &Framework) -> Self {
        FrameworkDocument {
            version: FORMAT_VERSION,
            vertices: fw.vertices().iter().map(|p| [p.x, p.y]).collect(),
            edges: fw.edges().iter().map(|&(i, j)| [i, j]).collect(),
            stress: None,
            metadata: None,
        }
    }

    pub fn with_stress(mut self, omega: Vec<f64>) -> Self {
        self.stress = Some(omega);
        self
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.metadata.get_or_insert_with(Metadata::default).name = Some(name.to_string());
        self
    }

    pub fn expect(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.metadata
            .get_or_insert_with(Metadata::default)
            .expected
            .insert(key.to_string(), value.into());
        self
    }

    pub fn framework(&self) -> Result<Framework> {
        Framework::new(
            self.vertices.iter().map(|&[x, y]| Point2::new(x, y)).collect(),
            self.edges.iter().map(|&[i, j]| (i, j)).collect(),
        )
    }

    /// Framework plus the embedded stress, checked for length and finiteness.
    pub fn load_parts(&self) -> Result<(Framework, Option<SelfStress>)> {
        let fw = self.framework()?;
        let stress = match &self.stress {
            None => None,
            Some(omega) => {
                if let Some(k) = omega.iter().position(|w| !w.is_finite()) {
                    return Err(Error::Validation(format!("stress entry {k} is not finite")));
                }
                Some(SelfStress::new(&fw, omega.clone())?)
            }
        };
        Ok((fw, stress))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FrameworkDocument = parse_json(text)?;
        if doc.version != FORMAT_VERSION {
            return Err(Error::Validation(format!(
                "unsupported document version {} (expected {FORMAT_VERSION})",
                doc.version
            )));
        }
        doc.framework()?;
        if let Some(s) = &doc.stress {
            if s.len() != doc.edges.len() {
                return Err(Error::StressLength {
                    expected: doc.edges.len(),
                    found: s.len(),
                });
            }
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&read(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        write(path, &self.to_json())
    }
}

pub(crate) fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReciprocalDocument {
    pub version: u32,
    pub mode: Mode,
    pub vertices: Vec<[f64; 2]>,
    pub edges: Vec<[usize; 2]>,
    /// Input edge of each reciprocal edge.
    pub edge_map: Vec<usize>,
    /// Input vertex of each reciprocal face.
    pub vertex_map: Vec<usize>,
    /// Reciprocal vertex for each face of the input embedding.
    pub face_map: Vec<usize>,
    /// Pairs of input faces merged into one reciprocal vertex.
    pub fused: Vec<[usize; 2]>,
    pub dual_stress: Vec<f64>,
    pub closure_defect: f64,
}

impl ReciprocalDocument {
    pub fn from_diagram(d: &ReciprocalDiagram) -> Self {
        ReciprocalDocument {
            version: FORMAT_VERSION,
            mode: d.mode,
            vertices: d.vertices.iter().map(|p| [p.x, p.y]).collect(),
            edges: d.edges.iter().map(|&(i, j)| [i, j]).collect(),
            edge_map: d.edge_map.clone(),
            vertex_map: d.vertex_map.clone(),
            face_map: d.face_map.clone(),
            fused: d.fused.iter().map(|&(a, b)| [a, b]).collect(),
            dual_stress: d.dual_stress.clone(),
            closure_defect: d.closure_defect,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftFace {
    pub vertices: Vec<usize>,
    pub gradient: [f64; 2],
    pub offset: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftDocument {
    pub version: u32,
    pub heights: Vec<f64>,
    pub outer_face: usize,
    pub faces: Vec<LiftFace>,
    pub flip_applied: bool,
    pub closure_defect: f64,
    pub level_curves: Vec<LevelCurve>,
}

impl LiftDocument {
    pub fn from_lifting(lift: &Lifting, level_curves: Vec<LevelCurve>) -> Self {
        let emb = &lift.embedding;
        LiftDocument {
            version: FORMAT_VERSION,
            heights: lift.heights.clone(),
            outer_face: emb.outer_face(),
            faces: (0..emb.face_count())
                .map(|f| LiftFace {
                    vertices: emb.face_vertices(f),
                    gradient: [lift.gradients[f].dx, lift.gradients[f].dy],
                    offset: lift.offsets[f],
                })
                .collect(),
            flip_applied: lift.flip_applied,
            closure_defect: lift.closure_defect,
            level_curves,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn triangle_loads() {
        let doc = FrameworkDocument::from_json(
            r#"{"version": 1, "vertices": [[0,0],[1,0],[0,1]], "edges": [[0,1],[1,2],[2,0]]}"#,
        )
        .unwrap();
        assert_eq!(doc.framework().unwrap().vertex_count(), 3);
    }

    #[test]
    fn self_loop_is_a_validation_error() {
        let err =
            FrameworkDocument::from_json(r#"{"version": 1, "vertices": [[0,0],[1,0]], "edges": [[0,0]]}"#).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = FrameworkDocument::from_json("{\n  \"version\": 1,\n  \"vertices\": [[0,0],\n}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 4),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn unknown_version_and_fields_are_rejected() {
        assert!(FrameworkDocument::from_json(r#"{"version": 7, "vertices": [], "edges": []}"#).is_err());
        assert!(matches!(
            FrameworkDocument::from_json(r#"{"version": 1, "vertices": [], "edges": [], "colour": 1}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn stress_length_is_checked() {
        let err = FrameworkDocument::from_json(
            r#"{"version": 1, "vertices": [[0,0],[1,0]], "edges": [[0,1]], "stress": [1, 2]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::StressLength { expected: 1, found: 2 }));
    }

    #[test]
    fn k4_with_stress_round_trips_through_a_file() {
        let fw = fixtures::k4();
        let omega = vec![-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 1.0, 1.0, 1.0];
        let doc = FrameworkDocument::from_framework(&fw)
            .with_stress(omega.clone())
            .with_name("k4")
            .expect("non_pointed", 1);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k4.json");
        doc.save(&path).unwrap();
        let back = FrameworkDocument::load(&path).unwrap();
        assert_eq!(back, doc);
        let (fw2, stress) = back.load_parts().unwrap();
        assert_eq!(fw2, fw);
        assert_eq!(stress.unwrap().omega, omega);
    }

    proptest! {
        #[test]
        fn save_then_load_is_identity(
            pts in proptest::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 2..8),
            stressed in any::<bool>(),
        ) {
            let n = pts.len();
            let edges: Vec<[usize; 2]> = (0..n - 1).map(|i| [i, i + 1]).collect();
            let doc = FrameworkDocument {
                version: FORMAT_VERSION,
                vertices: pts.iter().map(|&(x, y)| [x, y]).collect(),
                stress: stressed.then(|| (0..edges.len()).map(|k| k as f64 * 0.1 - 0.25).collect()),
                edges,
                metadata: None,
            };
            let text = doc.to_json();
            let back = FrameworkDocument::from_json(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_json(), text);
        }
    }
}
