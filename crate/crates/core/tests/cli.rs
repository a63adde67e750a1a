use std::process::{Command, Output};

use polychora::metrics::StatsReport;
use polychora::paperdata::ValidationReport;

fn polychora(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polychora")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stats_120cell() {
    let o = polychora(&["stats", "120-cell"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for want in ["1200", "144.0000000000", "919.574", "787.856"] {
        assert!(s.contains(want), "missing {want} in\n{s}");
    }
}

#[test]
fn stats_json_round_trips() {
    let o = polychora(&["stats", "600cell", "--json"]);
    assert!(o.status.success());
    let r: StatsReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.counts.cells, 600);
    assert_eq!(r.feature.edges_per_vertex, 12);
    assert_eq!(r, polychora::metrics::polytope_stats("600-cell".parse().unwrap()).unwrap());
    let again = serde_json::to_string_pretty(&r).unwrap();
    assert_eq!(again.trim(), stdout(&o).trim());
}

#[test]
fn pole_600cell() {
    let s = stdout(&polychora(&["pole", "600-cell"]));
    assert!(s.contains("13200") && s.contains("equals"), "{s}");
    assert!(!s.contains("differs"));
}

#[test]
fn project_tesseract_csv() {
    let s = stdout(&polychora(&["project", "tesseract", "--format", "csv"]));
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows.len(), 17);
    assert_eq!(rows[8], "8,0.0000000000,-1.4142135624");
}

#[test]
fn project_svg_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.svg");
    let o = polychora(&["project", "TESSERACT", "--out", out.to_str().unwrap(), "--labels", "--stroke", "navy"]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(out).unwrap();
    assert_eq!(svg.matches("<line").count(), 32);
    assert_eq!(svg.matches("<text").count(), 16);
}

#[test]
fn outputs_are_deterministic() {
    let a = polychora(&["generate", "600-cell", "--exact"]);
    let b = polychora(&["generate", "600-cell", "--exact"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 121);
}

#[test]
fn usage_errors() {
    let o = polychora(&["stats", "dodecaplex"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("tesseract, 120-cell, 600-cell"));
    assert_eq!(polychora(&["--version"]).status.code(), Some(0));
    let o = polychora(&["solve", "--centers", "/nonexistent/c.csv", "--a", "1", "--b", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/c.csv"));
}

#[test]
fn solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let centers = dir.path().join("c.csv");
    std::fs::write(&centers, "1.3,0.4,0.2,0\n0.3,1.4,0.2,0\n0.3,0.4,1.2,0\n-0.7,-0.6,-0.8,0\n").unwrap();
    let a = (1.0f64 + 0.49).sqrt();
    let b = (3.0f64 + 0.49).sqrt();
    let o = polychora(&["solve", "--centers", centers.to_str().unwrap(), "--a", &a.to_string(), "--b", &b.to_string()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.contains("0.3000000000,0.4000000000,0.2000000000,0.7000000000"), "{s}");
    assert!(s.contains("0.3000000000,0.4000000000,0.2000000000,-0.7000000000"), "{s}");
}

#[test]
fn validate_strict_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = polychora(&["validate", "--canonical", "120-cell", "--report", report.to_str().unwrap(), "--strict"]);
    assert_eq!(o.status.code(), Some(2));
    let text = std::fs::read_to_string(&report).unwrap();
    let r: ValidationReport = serde_json::from_str(&text).unwrap();
    assert!(r.duplicate_rows.contains(&(326, 327)));
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);

    let v = dir.path().join("v.csv");
    let j = dir.path().join("j.csv");
    assert!(polychora(&["export", "vertices", "600-cell", "--out", v.to_str().unwrap()]).status.success());
    assert!(polychora(&["export", "joints", "600-cell", "--out", j.to_str().unwrap()]).status.success());
    let o = polychora(&[
        "validate",
        "--vertices",
        v.to_str().unwrap(),
        "--joints",
        j.to_str().unwrap(),
        "--canonical",
        "600-cell",
        "--strict",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("findings              0"));
}

#[test]
fn export_complex_json() {
    let s = stdout(&polychora(&["export", "complex", "tesseract"]));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 32);
    assert_eq!(v["cells"].as_array().unwrap().len(), 8);
}
