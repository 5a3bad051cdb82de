//! Exit codes and outputs of the command-line front end.

use std::path::{Path, PathBuf};

use recipro::cli::run;
use recipro::fixtures;
use recipro::io::{FrameworkDocument, LiftDocument, ReciprocalDocument};
use recipro::{Framework, Point2};
use tempfile::TempDir;

fn recipro(args: &[&str]) -> i32 {
    run(std::iter::once("recipro").chain(args.iter().copied()))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &TempDir, kind: &str, seed: u64) -> PathBuf {
    let out = dir.path().join(format!("{kind}-{seed}.json"));
    let code = recipro(&["generate", kind, "--seed", &seed.to_string(), "--out", path_str(&out)]);
    assert_eq!(code, 0, "generate {kind}");
    out
}

fn save(dir: &TempDir, name: &str, fw: &Framework) -> PathBuf {
    let out = dir.path().join(name);
    FrameworkDocument::from_framework(fw).save(&out).unwrap();
    out
}

#[test]
fn analyze_k4_passes() {
    let dir = TempDir::new().unwrap();
    let k4 = generate(&dir, "k4", 0);
    let svg = dir.path().join("k4.svg");
    assert_eq!(recipro(&["analyze", path_str(&k4), "--svg", path_str(&svg)]), 0);
    assert!(std::fs::read_to_string(svg).unwrap().contains("<svg"));
    assert_eq!(recipro(&["analyze", path_str(&k4), "--json"]), 0);
}

#[test]
fn failed_conditions_exit_4() {
    let dir = TempDir::new().unwrap();
    let eight = generate(&dir, "figure-eight", 3);
    assert_eq!(recipro(&["analyze", path_str(&eight)]), 4);
    let singular = generate(&dir, "singular-concurrent", 0);
    assert_eq!(recipro(&["verify-good", path_str(&singular)]), 4);
    let witness = generate(&dir, "bad-quadrangle-search", 1);
    assert_eq!(recipro(&["verify-good", path_str(&witness)]), 4);
}

#[test]
fn ambiguous_stress_exits_5() {
    let dir = TempDir::new().unwrap();
    let eight = generate(&dir, "figure-eight", 0);
    assert_eq!(recipro(&["reciprocal", path_str(&eight)]), 5);
    assert_eq!(recipro(&["lift", path_str(&eight)]), 5);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"version\": 1, \"vertices\": [[0, 0]],").unwrap();
    assert_eq!(recipro(&["analyze", path_str(&bad)]), 2);
    std::fs::write(
        &bad,
        r#"{"version": 1, "vertices": [[0, 0], [1, 0]], "edges": [[0, 5]]}"#,
    )
    .unwrap();
    assert_eq!(recipro(&["laman", path_str(&bad)]), 2);
    assert_eq!(recipro(&["analyze", path_str(&dir.path().join("missing.json"))]), 2);
    assert_eq!(recipro(&["generate", "hexagon"]), 2);
    assert_eq!(recipro(&["frobnicate"]), 2);
}

#[test]
fn crossing_framework_exits_3() {
    let dir = TempDir::new().unwrap();
    let pts = vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(1.0, 0.0),
        Point2::new(0.0, 1.0),
    ];
    let bowtie = Framework::new(pts, vec![(0, 1), (2, 3), (0, 2), (1, 3)]).unwrap();
    let path = save(&dir, "bowtie.json", &bowtie);
    assert_eq!(recipro(&["analyze", path_str(&path)]), 3);
}

#[test]
fn reciprocal_and_lift_write_documents() {
    let dir = TempDir::new().unwrap();
    let wheel = generate(&dir, "wheel", 4);
    let recip = dir.path().join("recip.json");
    let lift = dir.path().join("lift.json");
    assert_eq!(recipro(&["reciprocal", path_str(&wheel), "--out", path_str(&recip)]), 0);
    assert_eq!(
        recipro(&[
            "reciprocal",
            path_str(&wheel),
            "--mode",
            "maxwell",
            "--svg",
            path_str(&dir.path().join("r.svg"))
        ]),
        0
    );
    assert_eq!(
        recipro(&["lift", path_str(&wheel), "--out", path_str(&lift), "--levels", "4"]),
        0
    );

    let fw = FrameworkDocument::load(&wheel).unwrap().framework().unwrap();
    let r: ReciprocalDocument = serde_json::from_str(&std::fs::read_to_string(recip).unwrap()).unwrap();
    assert_eq!(r.edges.len(), fw.edge_count());
    let l: LiftDocument = serde_json::from_str(&std::fs::read_to_string(lift).unwrap()).unwrap();
    assert_eq!(l.heights.len(), fw.vertex_count());
    assert_eq!(l.level_curves.len(), 4);
    assert!(l.level_curves.iter().all(|c| c.simple));
}

#[test]
fn laman_and_batch() {
    let dir = TempDir::new().unwrap();
    let pointed = generate(&dir, "pointed-pt", 2);
    assert_eq!(recipro(&["laman", path_str(&pointed), "--json"]), 0);
    let k4 = generate(&dir, "k4", 0);
    let eight = generate(&dir, "figure-eight", 1);
    assert_eq!(recipro(&["batch", path_str(&k4), path_str(&pointed)]), 0);
    assert_eq!(recipro(&["batch", path_str(&k4), path_str(&eight)]), 4);
}

#[test]
fn tolerance_flags_are_validated() {
    let dir = TempDir::new().unwrap();
    let k4 = save(&dir, "k4.json", &fixtures::k4());
    assert_eq!(recipro(&["analyze", path_str(&k4), "--tol-geom=-1"]), 2);
    assert_eq!(
        recipro(&["analyze", path_str(&k4), "--tol-rank", "1e-7", "--tol-stress", "1e-6"]),
        0
    );
}
