//! Bundled published coordinate and joint tables, their parsers, and an
//! errata validator that compares them with exact ground truth.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::builder::{Polytope, PolytopeKind};
use crate::error::{Error, Result};

pub const DUPLICATE_TOL: f64 = 1e-9;
pub const RADIUS_TOL: f64 = 1e-6;
pub const EDGE_TOL: f64 = 1e-6;
pub const SPECTRUM_TOL: f64 = 1e-5;
pub const ADJACENCY_TOL: f64 = 1e-4;

const CELL120_VERTICES: &str = include_str!("../data/120cell_vertices.csv");
const CELL120_JOINTS: &str = include_str!("../data/120cell_joints.csv");
const CELL600_VERTICES: &str = include_str!("../data/600cell_vertices.csv");
const CELL600_JOINTS: &str = include_str!("../data/600cell_joints.csv");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRecord {
    /// 1-based row number.
    pub index: usize,
    pub coords: [f64; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointRecord {
    pub index: usize,
    /// 1-based, ascending.
    pub neighbors: Vec<usize>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank data lines with 1-based line numbers, header checked.
fn data_lines<'a>(text: &'a str, header: &str) -> Result<Vec<(usize, &'a str)>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.next() {
        Some((_, h)) if h.replace(' ', "") == header => {}
        Some((n, h)) => return Err(parse_err(n, format!("expected header `{header}`, found `{h}`"))),
        None => return Err(parse_err(1, "empty file")),
    }
    Ok(lines.filter(|(_, l)| !l.is_empty()).collect())
}

fn parse_index(line: usize, field: &str, expected: usize) -> Result<usize> {
    let index: usize = field
        .trim()
        .parse()
        .map_err(|_| parse_err(line, format!("bad index `{field}`")))?;
    if index != expected {
        return Err(parse_err(line, format!("index gap: expected {expected}, found {index}")));
    }
    Ok(index)
}

pub fn parse_table(text: &str) -> Result<Vec<TableRecord>> {
    let mut out = Vec::new();
    for (line, l) in data_lines(text, "index,x1,x2,x3,x4")? {
        let fields: Vec<&str> = l.split(',').collect();
        if fields.len() != 5 {
            return Err(parse_err(line, format!("expected 5 fields, found {}", fields.len())));
        }
        let index = parse_index(line, fields[0], out.len() + 1)?;
        let mut coords = [0.0; 4];
        for (c, f) in coords.iter_mut().zip(&fields[1..]) {
            *c = f
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| parse_err(line, format!("bad coordinate `{f}`")))?;
        }
        out.push(TableRecord { index, coords });
    }
    Ok(out)
}

pub fn parse_joints(text: &str) -> Result<Vec<JointRecord>> {
    let rows = data_lines(text, "index,neighbors")?;
    let count = rows.len();
    let mut out = Vec::with_capacity(count);
    for (line, l) in rows {
        let (idx, rest) = l
            .split_once(',')
            .ok_or_else(|| parse_err(line, "expected `index,neighbors`"))?;
        let index = parse_index(line, idx, out.len() + 1)?;
        let mut neighbors = Vec::new();
        for f in rest.split(';').filter(|f| !f.trim().is_empty()) {
            let j: usize = f
                .trim()
                .parse()
                .map_err(|_| parse_err(line, format!("bad neighbor `{f}`")))?;
            if j == 0 || j > count {
                return Err(parse_err(line, format!("neighbor {j} out of range 1..={count}")));
            }
            if j == index {
                return Err(parse_err(line, "self-loop"));
            }
            if neighbors.last().is_some_and(|&p| p >= j) {
                return Err(parse_err(line, "neighbors must be strictly ascending"));
            }
            neighbors.push(j);
        }
        out.push(JointRecord { index, neighbors });
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn load_table(path: impl AsRef<Path>) -> Result<Vec<TableRecord>> {
    let path = path.as_ref();
    parse_table(&read(path)?).map_err(|e| e.in_file(path))
}

pub fn load_joints(path: impl AsRef<Path>) -> Result<Vec<JointRecord>> {
    let path = path.as_ref();
    parse_joints(&read(path)?).map_err(|e| e.in_file(path))
}

fn bundled_text(kind: PolytopeKind) -> Result<(&'static str, &'static str)> {
    match kind {
        PolytopeKind::Cell120 => Ok((CELL120_VERTICES, CELL120_JOINTS)),
        PolytopeKind::Cell600 => Ok((CELL600_VERTICES, CELL600_JOINTS)),
        PolytopeKind::Tesseract => Err(Error::Structural("no published table for the tesseract".into())),
    }
}

/// The published coordinate table for the 120-cell or 600-cell.
pub fn bundled_table(kind: PolytopeKind) -> Result<Vec<TableRecord>> {
    parse_table(bundled_text(kind)?.0)
}

/// The published joint table for the 120-cell or 600-cell.
pub fn bundled_joints(kind: PolytopeKind) -> Result<Vec<JointRecord>> {
    parse_joints(bundled_text(kind)?.1)
}

/// Coordinate CSV at 10 decimals.
pub fn format_table(points: &[[f64; 4]]) -> String {
    let mut out = String::from("index,x1,x2,x3,x4\n");
    for (i, p) in points.iter().enumerate() {
        let _ = write!(out, "{}", i + 1);
        for c in p {
            let _ = write!(out, ",{:.10}", c + 0.0);
        }
        out.push('\n');
    }
    out
}

/// Joint CSV from 0-based adjacency lists.
pub fn format_joints(adjacency: &[Vec<usize>]) -> String {
    let mut out = String::from("index,neighbors\n");
    for (i, nbrs) in adjacency.iter().enumerate() {
        let mut n: Vec<usize> = nbrs.iter().map(|j| j + 1).collect();
        n.sort_unstable();
        let list: Vec<String> = n.iter().map(|j| j.to_string()).collect();
        let _ = writeln!(out, "{},{}", i + 1, list.join(";"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusOutlier {
    pub index: usize,
    pub radius: f64,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeOutlier {
    pub pair: (usize, usize),
    pub distance: f64,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumMismatch {
    pub pair: (usize, usize),
    pub distance: f64,
    /// Closest distance in the rescaled ground-truth spectrum.
    pub nearest: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub median_radius: f64,
    pub modal_edge_length: f64,
    pub expected_degree: usize,
    pub radius_outliers: Vec<RadiusOutlier>,
    pub edge_outliers: Vec<EdgeOutlier>,
    pub asymmetric_pairs: Vec<(usize, usize)>,
    pub duplicate_rows: Vec<(usize, usize)>,
    pub degree_violations: Vec<(usize, usize)>,
    pub spectrum_match_fraction: f64,
    pub spectrum_mismatches: Vec<SpectrumMismatch>,
}

impl ValidationReport {
    pub fn finding_count(&self) -> usize {
        self.radius_outliers.len()
            + self.edge_outliers.len()
            + self.asymmetric_pairs.len()
            + self.duplicate_rows.len()
            + self.degree_violations.len()
            + self.spectrum_mismatches.len()
    }

    pub fn is_clean(&self) -> bool {
        self.finding_count() == 0
    }
}

fn dist(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn norm(a: &[f64; 4]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn median(mut xs: Vec<f64>) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

/// Median of the largest run of values whose consecutive gaps are within `gap`.
pub fn modal_value(mut xs: Vec<f64>, gap: f64) -> Option<f64> {
    xs.retain(|x| x.is_finite());
    xs.sort_by(f64::total_cmp);
    let mut best: Option<(usize, usize)> = None;
    let mut start = 0;
    for i in 1..=xs.len() {
        if i == xs.len() || xs[i] - xs[i - 1] > gap {
            if best.is_none_or(|(s, e)| i - start > e - s) {
                best = Some((start, i));
            }
            start = i;
        }
    }
    best.filter(|(s, e)| e > s).map(|(s, e)| median(xs[s..e].to_vec()))
}

fn listed_pairs(joints: &[JointRecord]) -> BTreeSet<(usize, usize)> {
    joints
        .iter()
        .flat_map(|r| r.neighbors.iter().map(move |&j| (r.index.min(j), r.index.max(j))))
        .collect()
}

fn coords_of(records: &[TableRecord], index: usize) -> Option<&[f64; 4]> {
    records.get(index.checked_sub(1)?).map(|r| &r.coords)
}

/// All table pairs `(i, j, distance)` with 1-based `i < j`, sorted by distance.
fn table_spectrum(records: &[TableRecord]) -> Vec<(f64, usize, usize)> {
    let mut out = Vec::with_capacity(records.len() * records.len().saturating_sub(1) / 2);
    for (i, a) in records.iter().enumerate() {
        for b in &records[i + 1..] {
            out.push((dist(&a.coords, &b.coords), a.index, b.index));
        }
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    out
}

fn point_spectrum(points: &[[f64; 4]], scale: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(points.len() * points.len().saturating_sub(1) / 2);
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            out.push(dist(a, b) * scale);
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

fn nearest(sorted: &[f64], x: f64) -> f64 {
    let k = sorted.partition_point(|&v| v < x);
    [k.checked_sub(1), Some(k)]
        .into_iter()
        .flatten()
        .filter_map(|i| sorted.get(i))
        .copied()
        .min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs()))
        .unwrap_or(f64::NAN)
}

/// Check a coordinate table and joint table against ground truth.
///
/// Findings are reported, never repaired.
pub fn validate(records: &[TableRecord], joints: &[JointRecord], canonical: &Polytope) -> ValidationReport {
    let expected_degree = canonical.descriptor.edges_per_vertex();
    let median_radius = median(records.iter().map(|r| norm(&r.coords)).collect());
    let radius_outliers = records
        .iter()
        .filter_map(|r| {
            let radius = norm(&r.coords);
            let deviation = radius - median_radius;
            (deviation.abs() > RADIUS_TOL).then_some(RadiusOutlier {
                index: r.index,
                radius,
                deviation,
            })
        })
        .collect();

    let pairs: Vec<((usize, usize), f64)> = listed_pairs(joints)
        .into_iter()
        .filter_map(|(i, j)| Some(((i, j), dist(coords_of(records, i)?, coords_of(records, j)?))))
        .collect();
    let modal_edge_length = modal_value(pairs.iter().map(|p| p.1).collect(), EDGE_TOL).unwrap_or(f64::NAN);
    let edge_outliers = pairs
        .iter()
        .filter_map(|&(pair, distance)| {
            let deviation = distance - modal_edge_length;
            (deviation.abs() > EDGE_TOL).then_some(EdgeOutlier {
                pair,
                distance,
                deviation,
            })
        })
        .collect();

    let listed: BTreeSet<(usize, usize)> = joints
        .iter()
        .flat_map(|r| r.neighbors.iter().map(move |&j| (r.index, j)))
        .collect();
    let asymmetric_pairs = listed.iter().copied().filter(|&(i, j)| !listed.contains(&(j, i))).collect();

    let degree_violations = joints
        .iter()
        .filter(|r| r.neighbors.len() != expected_degree)
        .map(|r| (r.index, r.neighbors.len()))
        .collect();

    let spectrum = table_spectrum(records);
    let mut duplicate_rows: Vec<(usize, usize)> = spectrum
        .iter()
        .take_while(|s| s.0 < DUPLICATE_TOL)
        .map(|s| (s.1, s.2))
        .collect();
    duplicate_rows.sort_unstable();

    let truth = canonical.vertices_f64();
    let truth_radius = truth.first().map(norm).unwrap_or(0.0);
    let scale = if truth_radius > 0.0 { median_radius / truth_radius } else { f64::NAN };
    let reference = point_spectrum(&truth, scale);
    let (mut i, mut j, mut matched) = (0, 0, 0usize);
    let mut spectrum_mismatches = Vec::new();
    while i < spectrum.len() {
        let (d, a, b) = spectrum[i];
        if j < reference.len() && (d - reference[j]).abs() <= SPECTRUM_TOL {
            matched += 1;
            i += 1;
            j += 1;
        } else if j < reference.len() && reference[j] < d {
            j += 1;
        } else {
            spectrum_mismatches.push(SpectrumMismatch {
                pair: (a, b),
                distance: d,
                nearest: nearest(&reference, d),
            });
            i += 1;
        }
    }
    let total = spectrum.len().max(reference.len());
    let spectrum_match_fraction = if total == 0 { 1.0 } else { matched as f64 / total as f64 };

    ValidationReport {
        median_radius,
        modal_edge_length,
        expected_degree,
        radius_outliers,
        edge_outliers,
        asymmetric_pairs,
        duplicate_rows,
        degree_violations,
        spectrum_match_fraction,
        spectrum_mismatches,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdjacencyCheck {
    /// Modal nearest-neighbor distance used as the edge length.
    pub reference_distance: f64,
    pub agree: usize,
    /// Listed in the joint table but not at edge distance.
    pub missing: Vec<(usize, usize)>,
    /// At edge distance but not listed.
    pub extra: Vec<(usize, usize)>,
}

impl AdjacencyCheck {
    pub fn agreement_fraction(&self) -> f64 {
        let total = self.agree + self.missing.len() + self.extra.len();
        if total == 0 {
            1.0
        } else {
            self.agree as f64 / total as f64
        }
    }
}

/// Recompute adjacency from coordinates and diff it against the joint table.
pub fn cross_check_adjacency(records: &[TableRecord], joints: &[JointRecord]) -> AdjacencyCheck {
    let n = records.len();
    let mut nn = vec![f64::INFINITY; n];
    for i in 0..n {
        for k in i + 1..n {
            let d = dist(&records[i].coords, &records[k].coords);
            if d > DUPLICATE_TOL {
                nn[i] = nn[i].min(d);
                nn[k] = nn[k].min(d);
            }
        }
    }
    let reference_distance = modal_value(nn, EDGE_TOL).unwrap_or(f64::NAN);
    let mut computed = BTreeSet::new();
    for i in 0..n {
        for k in i + 1..n {
            let d = dist(&records[i].coords, &records[k].coords);
            if (d - reference_distance).abs() <= ADJACENCY_TOL * reference_distance {
                computed.insert((records[i].index, records[k].index));
            }
        }
    }
    let listed = listed_pairs(joints);
    AdjacencyCheck {
        reference_distance,
        agree: listed.intersection(&computed).count(),
        missing: listed.difference(&computed).copied().collect(),
        extra: computed.difference(&listed).copied().collect(),
    }
}
