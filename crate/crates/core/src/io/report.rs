//! The full analysis pipeline and its machine-readable report.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::geometry::Tolerance;
use crate::lifting::{coplanarity_check, extremum_report, maxwell_lifting, pointedness_at_peak};
use crate::plane_graph::{
    build_embedding, classify_faces, classify_vertices, counting_check, pebble_game_rank, AngleKind, Counts, FaceClass,
    PlaneEmbedding,
};
use crate::reciprocal::{count_corollaries_check, cremona_reciprocal, diagram_noncrossing_report, Orientation};
use crate::rigidity::{
    equilibrium_residual, is_good_self_stress, random_combination, self_stress_space, stress_dimension_bound_check,
    ConditionReport, SelfStress,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceRow {
    pub id: usize,
    pub outer: bool,
    pub corners: usize,
    pub class: String,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexRow {
    pub id: usize,
    pub degree: usize,
    pub pointed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LamanSummary {
    pub rank: usize,
    pub independent: bool,
    pub laman: bool,
    pub circuit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReciprocalSummary {
    pub noncrossing: bool,
    pub orientation: Option<Orientation>,
    pub dual_embedding_consistent: Option<bool>,
    pub vertices: usize,
    pub edges: usize,
    pub fused: Vec<[usize; 2]>,
    pub closure_defect: f64,
    pub corollaries_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftingSummary {
    pub peak_height: f64,
    pub flip_applied: bool,
    pub closure_defect: f64,
    pub coplanarity_residual: f64,
    pub unique_max_at_distinguished: bool,
    pub unique_min_is_outer_face: bool,
    pub pointed_lifted_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub noncrossing: bool,
    pub faces: Vec<FaceRow>,
    pub vertices: Vec<VertexRow>,
    pub counts: Counts,
    pub laman: LamanSummary,
    pub stress_dimension: usize,
    pub stress_basis: Vec<Vec<f64>>,
    /// The stress the remaining sections describe.
    pub stress: Option<Vec<f64>>,
    pub conditions: Option<ConditionReport>,
    pub reciprocal: Option<ReciprocalSummary>,
    pub lifting: Option<LiftingSummary>,
    pub checks: Vec<Check>,
    /// Angles whose classification depends on the geometric tolerance.
    pub warnings: Vec<String>,
    pub status: String,
}

impl AnalysisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Stress entries whose sign depends on the tolerance.
    pub fn tolerance_sensitive(&self) -> bool {
        self.conditions.as_ref().is_some_and(|c| !c.near_threshold.is_empty())
    }

    /// `0` when every check passes, `5` when the verdict hinges on the zero
    /// threshold, `4` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.tolerance_sensitive() {
            5
        } else if self.passed() {
            0
        } else {
            4
        }
    }
}

/// Angles within this many multiples of `eps_geom` radians of 0 or π are
/// reported as tolerance-dependent.
pub const NEAR_ANGLE_FACTOR: f64 = 1e3;

/// One message per angle that is classified flat or lies near 0 or π.
pub fn near_degenerate_angles(emb: &PlaneEmbedding) -> Vec<String> {
    let band = NEAR_ANGLE_FACTOR * emb.tolerance().eps_geom;
    emb.angles()
        .iter()
        .filter(|a| a.kind == AngleKind::Flat || a.measure < band || (a.measure - std::f64::consts::PI).abs() < band)
        .map(|a| {
            format!(
                "angle at vertex {} in face {} measures {:.9} rad and was classified {:?}",
                a.vertex, a.face, a.measure, a.kind
            )
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub tol: Tolerance,
    pub seed: u64,
    /// Random combinations tried when the stress space has dimension above one.
    pub samples: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            tol: Tolerance::default(),
            seed: 0,
            samples: 200,
        }
    }
}

fn class_name(c: FaceClass) -> String {
    match c {
        FaceClass::OuterConvex { strict: true } => "outer-convex".into(),
        FaceClass::OuterConvex { strict: false } => "outer-convex-with-flats".into(),
        FaceClass::OuterNonConvex => "outer-non-convex".into(),
        FaceClass::PseudoTriangle => "pseudo-triangle".into(),
        FaceClass::PseudoQuadrangle => "pseudo-quadrangle".into(),
        FaceClass::PseudoPolygon(k) => format!("pseudo-{k}-gon"),
        FaceClass::NonSimple(k) => format!("non-simple-{k}"),
    }
}

/// Chooses the stress to analyze: the given one, the unique one, or the first
/// good one among seeded random combinations of a larger basis.
fn choose_stress(
    fw: &Framework,
    emb: &PlaneEmbedding,
    given: Option<&SelfStress>,
    basis: &[SelfStress],
    opts: &AnalysisOptions,
) -> Result<(Option<SelfStress>, String)> {
    if let Some(s) = given {
        if !s.is_equilibrium(fw, &opts.tol) {
            return Err(Error::Validation(format!(
                "given stress is not in equilibrium (residual {:.3e})",
                s.residual
            )));
        }
        return Ok((Some(s.clone()), "given stress".into()));
    }
    match basis.len() {
        0 => Ok((None, "no self-stress".into())),
        1 => Ok((Some(basis[0].clone()), "unique self-stress".into())),
        d => {
            let mut rng = crate::fixtures::rng(opts.seed);
            let mut first = None;
            for _ in 0..opts.samples {
                let s = random_combination(fw, basis, &mut rng)?;
                if is_good_self_stress(emb, &s)?.good {
                    return Ok((Some(s), format!("good stress found in a {d}-dimensional space")));
                }
                first.get_or_insert(s);
            }
            Ok((
                first,
                format!(
                    "no good stress among {} samples of a {d}-dimensional space",
                    opts.samples
                ),
            ))
        }
    }
}

/// Runs crossing, embedding, classification, stress, condition, reciprocal
/// and lifting checks on `fw`.
pub fn analyze(fw: &Framework, given: Option<&SelfStress>, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let tol = &opts.tol;
    if let Some(err) = fw.first_crossing(tol)? {
        return Err(err);
    }
    let emb = build_embedding(fw, tol)?;
    let faces = classify_faces(&emb)
        .into_iter()
        .map(|f| FaceRow {
            id: f.id,
            outer: f.outer,
            corners: f.corners.len(),
            class: class_name(f.class),
            vertices: f.vertices,
        })
        .collect();
    let vertices = classify_vertices(&emb)
        .into_iter()
        .map(|v| VertexRow {
            id: v.id,
            degree: v.degree,
            pointed: v.pointed,
        })
        .collect();
    let counts = counting_check(&emb);
    let n = fw.vertex_count();
    let pebble = pebble_game_rank(fw.edges(), n);
    let laman = LamanSummary {
        rank: pebble.rank,
        independent: pebble.independent,
        laman: pebble.independent && fw.edge_count() == 2 * n - 3,
        circuit: crate::plane_graph::is_laman_circuit(fw.edges(), n),
    };
    let basis = self_stress_space(fw, tol);

    let mut checks = vec![Check {
        name: "non-crossing".into(),
        pass: true,
        residual: None,
    }];
    if counts.applicable {
        checks.push(Check {
            name: "counting identity".into(),
            pass: counts.holds,
            residual: None,
        });
    }
    checks.push(Check {
        name: "stress dimension at most non-pointed count".into(),
        pass: stress_dimension_bound_check(fw, &emb, tol),
        residual: None,
    });

    let (stress, mut status) = choose_stress(fw, &emb, given, &basis, opts)?;
    let mut conditions = None;
    let mut reciprocal = None;
    let mut lifting = None;
    if let Some(s) = stress.as_ref().filter(|s| !s.is_zero(tol)) {
        let residual = equilibrium_residual(fw, &s.omega);
        checks.push(Check {
            name: "equilibrium".into(),
            pass: s.is_equilibrium(fw, tol),
            residual: Some(residual),
        });
        let report = is_good_self_stress(&emb, s)?;
        checks.push(Check {
            name: "good self-stress".into(),
            pass: report.good,
            residual: None,
        });
        let support_verdict =
            report.vertex_conditions.as_ref().is_some_and(|vc| vc.ok) && report.bad_quadrangle_vertices.is_empty();

        match cremona_reciprocal(&emb, s) {
            Ok(recip) => {
                let nc = diagram_noncrossing_report(&recip);
                let corollaries_ok = nc
                    .noncrossing
                    .then(|| count_corollaries_check(&recip).map(|c| c.ok).unwrap_or(false));
                checks.push(Check {
                    name: "sign conditions agree with reciprocal".into(),
                    pass: support_verdict == nc.noncrossing,
                    residual: None,
                });
                if let Some(ok) = corollaries_ok {
                    checks.push(Check {
                        name: "reciprocal counts".into(),
                        pass: ok,
                        residual: None,
                    });
                }
                if nc.noncrossing {
                    checks.push(Check {
                        name: "orientation reversed".into(),
                        pass: nc.orientation == Some(Orientation::Reversed),
                        residual: None,
                    });
                }
                reciprocal = Some(ReciprocalSummary {
                    noncrossing: nc.noncrossing,
                    orientation: nc.orientation,
                    dual_embedding_consistent: nc.dual_embedding_consistent,
                    vertices: recip.vertices.len(),
                    edges: recip.edges.len(),
                    fused: recip.fused.iter().map(|&(a, b)| [a, b]).collect(),
                    closure_defect: recip.closure_defect,
                    corollaries_ok,
                });
            }
            Err(e) => status = format!("{status}; reciprocal unavailable: {e}"),
        }

        let lift = maxwell_lifting(&emb, s)?;
        let coplanarity = coplanarity_check(&lift);
        checks.push(Check {
            name: "lifting closure".into(),
            pass: true,
            residual: Some(lift.closure_defect.max(coplanarity)),
        });
        let mut summary = LiftingSummary {
            peak_height: lift.peak_height(),
            flip_applied: lift.flip_applied,
            closure_defect: lift.closure_defect,
            coplanarity_residual: coplanarity,
            unique_max_at_distinguished: false,
            unique_min_is_outer_face: false,
            pointed_lifted_vertices: pointedness_at_peak(&lift),
        };
        if report.good {
            let ext = extremum_report(&lift)?;
            summary.unique_max_at_distinguished = ext.unique_max_at_distinguished;
            summary.unique_min_is_outer_face = ext.unique_min_is_outer_face;
            checks.push(Check {
                name: "lifting extrema".into(),
                pass: ext.unique_max_at_distinguished && ext.unique_min_is_outer_face,
                residual: None,
            });
        }
        lifting = Some(summary);
        conditions = Some(report);
    }

    Ok(AnalysisReport {
        noncrossing: true,
        faces,
        vertices,
        counts,
        laman,
        stress_dimension: basis.len(),
        stress_basis: basis.iter().map(|s| s.omega.clone()).collect(),
        stress: stress.map(|s| s.omega),
        conditions,
        reciprocal,
        lifting,
        checks,
        warnings: near_degenerate_angles(&emb),
        status: std::mem::take(&mut status),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::Point2;

    #[test]
    fn k4_passes_everything() {
        let r = analyze(&fixtures::k4(), None, &AnalysisOptions::default()).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.stress_dimension, 1);
        assert!(r.conditions.as_ref().unwrap().good);
        let l = r.lifting.unwrap();
        assert!((l.peak_height - 4.0 / 3.0).abs() < 1e-9);
        assert_eq!(l.pointed_lifted_vertices, vec![3]);
    }

    #[test]
    fn near_flat_angles_are_warned_about() {
        assert!(analyze(&fixtures::k4(), None, &AnalysisOptions::default())
            .unwrap()
            .warnings
            .is_empty());
        // Vertex 1 sits 1e-8 below the segment from 0 to 2.
        let fw = Framework::new(
            vec![
                Point2::new(0., 0.),
                Point2::new(1., -1e-8),
                Point2::new(2., 0.),
                Point2::new(1., 1.),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
        )
        .unwrap();
        let r = analyze(&fw, None, &AnalysisOptions::default()).unwrap();
        assert!(r.warnings.iter().all(|w| w.contains("vertex 1")), "{:?}", r.warnings);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn triangle_has_no_stress() {
        let fw = Framework::new(
            vec![Point2::new(0., 0.), Point2::new(1., 0.), Point2::new(0., 1.)],
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap();
        let r = analyze(&fw, None, &AnalysisOptions::default()).unwrap();
        assert_eq!(r.status, "no self-stress");
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn crossing_cycle_is_geometric_error() {
        let fw = Framework::new(
            vec![
                Point2::new(0., 0.),
                Point2::new(1., 1.),
                Point2::new(1., 0.),
                Point2::new(0., 1.),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap();
        let err = analyze(&fw, None, &AnalysisOptions::default()).unwrap_err();
        assert_eq!(err.class(), crate::error::ErrorClass::Geometric);
    }

    #[test]
    fn figure_eight_fails_conditions() {
        let r = analyze(&fixtures::figure_eight(0).unwrap(), None, &AnalysisOptions::default()).unwrap();
        assert_eq!(r.stress_dimension, 2);
        assert_eq!(r.exit_code(), 4);
    }

    #[test]
    fn unbalanced_given_stress_is_rejected() {
        let fw = fixtures::k4();
        let s = SelfStress::new(&fw, vec![1.0; 6]).unwrap();
        assert!(matches!(
            analyze(&fw, Some(&s), &AnalysisOptions::default()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn report_field_order_is_stable() {
        let r = analyze(&fixtures::k4(), None, &AnalysisOptions::default()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let keys = [
            "\"noncrossing\"",
            "\"faces\"",
            "\"counts\"",
            "\"stress_basis\"",
            "\"checks\"",
            "\"status\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }
}
