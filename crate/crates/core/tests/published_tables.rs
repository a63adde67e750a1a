use polychora::builder::PolytopeKind;
use polychora::complexes::IncidenceComplex;
use polychora::paperdata::{
    bundled_joints, bundled_table, cross_check_adjacency, format_joints, format_table, load_table, parse_joints,
    parse_table, validate, ValidationReport,
};
use polychora::Error;

fn dist(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

#[test]
fn tables_load_completely() {
    for (kind, rows, degree) in [(PolytopeKind::Cell120, 600, 4), (PolytopeKind::Cell600, 120, 12)] {
        assert_eq!(bundled_table(kind).unwrap().len(), rows);
        let joints = bundled_joints(kind).unwrap();
        assert_eq!(joints.len(), rows);
        assert!(joints.iter().all(|j| j.neighbors.len() == degree));
    }
}

#[test]
fn joint_symmetry_matches_recount() {
    let joints = bundled_joints(PolytopeKind::Cell600).unwrap();
    let report = validate(&bundled_table(PolytopeKind::Cell600).unwrap(), &joints, &PolytopeKind::Cell600.build());
    let mut asym = Vec::new();
    for r in &joints {
        for &j in &r.neighbors {
            if !joints[j - 1].neighbors.contains(&r.index) {
                asym.push((r.index, j));
            }
        }
    }
    assert_eq!(report.asymmetric_pairs, asym);
    assert!(report.degree_violations.is_empty());
}

#[test]
fn duplicate_rows_are_flagged() {
    let t = bundled_table(PolytopeKind::Cell120).unwrap();
    let r = validate(&t, &bundled_joints(PolytopeKind::Cell120).unwrap(), &PolytopeKind::Cell120.build());
    assert!(r.duplicate_rows.contains(&(326, 327)));
    assert!(r.duplicate_rows.contains(&(551, 552)));
    for (i, j) in &r.duplicate_rows {
        assert!(dist(&t[i - 1].coords, &t[j - 1].coords) < 1e-9);
    }
}

#[test]
fn modal_edges_match_printed_rows() {
    let t = bundled_table(PolytopeKind::Cell600).unwrap();
    let r = validate(&t, &bundled_joints(PolytopeKind::Cell600).unwrap(), &PolytopeKind::Cell600.build());
    assert!((r.modal_edge_length - dist(&t[0].coords, &t[1].coords)).abs() < 1e-6);
    assert!((r.modal_edge_length - 1.0).abs() < 1e-6);

    let t = bundled_table(PolytopeKind::Cell120).unwrap();
    let r = validate(&t, &bundled_joints(PolytopeKind::Cell120).unwrap(), &PolytopeKind::Cell120.build());
    assert!((r.modal_edge_length - dist(&t[30].coords, &t[31].coords)).abs() < 1e-6);
    assert!((r.modal_edge_length - 0.4045085).abs() < 1e-6);
}

#[test]
fn adjacency_recomputation() {
    let t = bundled_table(PolytopeKind::Cell600).unwrap();
    let a = cross_check_adjacency(&t, &bundled_joints(PolytopeKind::Cell600).unwrap());
    assert!((a.reference_distance - 1.0).abs() < 1e-6);
    assert!(a.agreement_fraction() > 0.95);

    let t = bundled_table(PolytopeKind::Cell120).unwrap();
    let a = cross_check_adjacency(&t, &bundled_joints(PolytopeKind::Cell120).unwrap());
    assert!(a.missing.iter().any(|&(i, j)| [i, j].contains(&327)));
}

#[test]
fn canonical_self_export_is_clean() {
    for kind in [PolytopeKind::Cell600, PolytopeKind::Cell120] {
        let c = IncidenceComplex::build(kind.build()).unwrap();
        let t = parse_table(&format_table(&c.polytope.vertices_f64())).unwrap();
        let j = parse_joints(&format_joints(&c.adjacency_lists())).unwrap();
        let r = validate(&t, &j, &kind.build());
        assert!(r.is_clean(), "{kind}: {r:?}");
        assert_eq!(r.spectrum_match_fraction, 1.0);
        let a = cross_check_adjacency(&t, &j);
        assert!(a.missing.is_empty() && a.extra.is_empty());
    }
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let t = bundled_table(PolytopeKind::Cell120).unwrap();
    let j = bundled_joints(PolytopeKind::Cell120).unwrap();
    let canonical = PolytopeKind::Cell120.build();
    let r1 = validate(&t, &j, &canonical);
    let r2 = validate(&t, &j, &canonical);
    assert_eq!(r1, r2);
    let back: ValidationReport = serde_json::from_str(&serde_json::to_string(&r1).unwrap()).unwrap();
    assert_eq!(back, r1);
}

#[test]
fn load_errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "index,x1,x2,x3,x4\n1,0,0,0\n").unwrap();
    let err = load_table(&path).unwrap_err();
    assert!(matches!(err, Error::ParseFile { line: 2, .. }));
    assert!(err.to_string().contains("bad.csv"));
    let err = load_table(dir.path().join("missing.csv")).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
}
