//! Distances, angles, cell volumes, boundary content and hypervolume.
//!
//! Exact inputs are converted to `f64` once; all trigonometry and square
//! roots happen in float. Every angle is sampled over all incident
//! configurations and must be constant to [`ANGLE_CONSTANCY_TOL`].

use serde::{Deserialize, Serialize};

use crate::builder::PolytopeKind;
use crate::complexes::{IncidenceComplex, IncidenceProfile};
use crate::error::{Error, Result};
use crate::exactnum::{Point4, Vector4};

/// Largest admissible max−min spread of a sampled angle, in degrees.
pub const ANGLE_CONSTANCY_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub edge_length: f64,
    pub angle_edges_deg: f64,
    pub angle_faces_deg: f64,
    pub angle_cells_deg: f64,
    /// Total 3-content of the cells.
    pub boundary_content: f64,
    pub hypervolume: f64,
    pub inradius: f64,
}

/// Summary of one angle sampled over many configurations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleStat {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub samples: usize,
}

impl AngleStat {
    fn from_samples(values: impl IntoIterator<Item = f64>) -> Result<AngleStat> {
        let mut n = 0usize;
        let mut sum = 0.0;
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in values {
            n += 1;
            sum += v;
            min = min.min(v);
            max = max.max(v);
        }
        if n == 0 {
            return Err(Error::Structural("no angle samples".into()));
        }
        Ok(AngleStat {
            mean: sum / n as f64,
            min,
            max,
            samples: n,
        })
    }

    pub fn spread(&self) -> f64 {
        self.max - self.min
    }

    /// The common value, or an error if the samples disagree.
    pub fn constant(&self, what: &str) -> Result<f64> {
        if self.spread() < ANGLE_CONSTANCY_TOL {
            Ok(self.mean)
        } else {
            Err(Error::Structural(format!(
                "{what} angle varies by {:e} degrees",
                self.spread()
            )))
        }
    }
}

/// Euclidean distance: exact squared norm, one float square root.
pub fn distance(a: &Point4, b: &Point4) -> f64 {
    a.squared_distance(b).to_f64().sqrt()
}

/// Euclidean distance between float points of any dimension.
pub fn distance_f64(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn clamped_degrees(cos: f64) -> f64 {
    cos.clamp(-1.0, 1.0).acos().to_degrees()
}

/// Included angle in degrees, from the exact dot product and squared norms.
pub fn angle_between(u: &Vector4, v: &Vector4) -> Result<f64> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let cos = u.dot(v).to_f64() / (u.norm2().to_f64() * v.norm2().to_f64()).sqrt();
    Ok(clamped_degrees(cos))
}

/// Included angle in degrees between float vectors of any dimension.
pub fn angle_between_f64(u: &[f64], v: &[f64]) -> Result<f64> {
    let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let nu: f64 = u.iter().map(|a| a * a).sum();
    let nv: f64 = v.iter().map(|a| a * a).sum();
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(clamped_degrees(dot / (nu * nv).sqrt()))
}

fn sub(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    std::array::from_fn(|i| a[i] - b[i])
}

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    (0..4).map(|i| a[i] * b[i]).sum()
}

fn centroid(points: &[[f64; 4]], idx: &[usize]) -> [f64; 4] {
    let n = idx.len() as f64;
    std::array::from_fn(|k| idx.iter().map(|&i| points[i][k]).sum::<f64>() / n)
}

/// Angle between the two face edges at every corner of every face.
pub fn edge_edge_angle(c: &IncidenceComplex) -> Result<AngleStat> {
    let v = &c.polytope.vertices;
    let mut samples = Vec::new();
    for face in &c.faces {
        let k = face.len();
        for i in 0..k {
            let corner = &v[face[i]];
            let a = &v[face[(i + k - 1) % k]] - corner;
            let b = &v[face[(i + 1) % k]] - corner;
            samples.push(angle_between(&a, &b)?);
        }
    }
    AngleStat::from_samples(samples)
}

/// Dihedral angle between two faces of one cell meeting at an edge.
pub fn face_face_angle(c: &IncidenceComplex) -> Result<AngleStat> {
    let pts = c.polytope.vertices_f64();
    let mut samples = Vec::new();
    for faces in &c.cell_faces {
        for (a, &f1) in faces.iter().enumerate() {
            for &f2 in &faces[a + 1..] {
                let shared: Vec<usize> = c.faces[f1].iter().copied().filter(|x| c.faces[f2].contains(x)).collect();
                if shared.len() != 2 {
                    continue;
                }
                let (p, q) = (pts[shared[0]], pts[shared[1]]);
                let mid: [f64; 4] = std::array::from_fn(|i| 0.5 * (p[i] + q[i]));
                let e = sub(&q, &p);
                let ee = dot(&e, &e);
                let across = |f: usize| -> [f64; 4] {
                    let d = sub(&centroid(&pts, &c.faces[f]), &mid);
                    let t = dot(&d, &e) / ee;
                    std::array::from_fn(|i| d[i] - t * e[i])
                };
                samples.push(angle_between_f64(&across(f1), &across(f2))?);
            }
        }
    }
    AngleStat::from_samples(samples)
}

/// Interior angle between the hyperplanes of two cells sharing a face.
pub fn cell_cell_angle(c: &IncidenceComplex) -> Result<AngleStat> {
    let center = c.polytope.centroid();
    let outward = |cell: usize| -> Vector4 {
        let plane = &c.cell_planes[cell];
        let members: Vec<Vector4> = c.cells[cell].iter().map(|&i| &c.polytope.vertices[i] - &center).collect();
        let sum = members.iter().fold(Vector4::zero(), |acc, m| &acc + m);
        if plane.normal.dot(&sum).signum() < 0 {
            -&plane.normal
        } else {
            plane.normal.clone()
        }
    };
    let normals: Vec<Vector4> = (0..c.cells.len()).map(outward).collect();
    let mut samples = Vec::new();
    for cells in &c.face_cells {
        if let [a, b] = cells[..] {
            samples.push(180.0 - angle_between(&normals[a], &normals[b])?);
        }
    }
    AngleStat::from_samples(samples)
}

/// 3-volume of a tetrahedron in 4-space spanned by three edge vectors.
fn tetra_volume(a: &[f64; 4], b: &[f64; 4], c: &[f64; 4]) -> f64 {
    let g = [
        [dot(a, a), dot(a, b), dot(a, c)],
        [dot(b, a), dot(b, b), dot(b, c)],
        [dot(c, a), dot(c, b), dot(c, c)],
    ];
    let det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    det.max(0.0).sqrt() / 6.0
}

/// Fan tetrahedralization from the cell centroid through each face centroid.
pub fn cell_volume(c: &IncidenceComplex, cell: usize) -> Result<f64> {
    let pts = c.polytope.vertices_f64();
    cell_volume_with(c, cell, &pts)
}

fn cell_volume_with(c: &IncidenceComplex, cell: usize, pts: &[[f64; 4]]) -> Result<f64> {
    let g = centroid(pts, &c.cells[cell]);
    let scale = c.cells[cell]
        .iter()
        .map(|&i| dot(&sub(&pts[i], &g), &sub(&pts[i], &g)))
        .fold(0.0, f64::max)
        .sqrt();
    let mut total = 0.0;
    for &f in &c.cell_faces[cell] {
        let face = &c.faces[f];
        let fc = sub(&centroid(pts, face), &g);
        for k in 0..face.len() {
            let a = sub(&pts[face[k]], &g);
            let b = sub(&pts[face[(k + 1) % face.len()]], &g);
            let vol = tetra_volume(&a, &b, &fc);
            if vol <= 1e-12 * scale.powi(3) {
                return Err(Error::Structural(format!(
                    "degenerate tetrahedron in cell {cell}, face {f}"
                )));
            }
            total += vol;
        }
    }
    Ok(total)
}

/// Distance from the vertex centroid to each cell hyperplane.
pub fn cell_heights(c: &IncidenceComplex) -> Vec<f64> {
    let center = c.polytope.centroid();
    c.cell_planes
        .iter()
        .map(|plane| {
            let s = plane.evaluate(&center);
            (&(&s * &s) / &plane.normal.norm2()).to_f64().sqrt()
        })
        .collect()
}

/// Sum of all cell volumes.
pub fn boundary_content(c: &IncidenceComplex) -> Result<f64> {
    let pts = c.polytope.vertices_f64();
    (0..c.cells.len()).map(|i| cell_volume_with(c, i, &pts)).sum()
}

/// Sum of the pyramids over each cell with apex at the center.
pub fn hypervolume(c: &IncidenceComplex) -> Result<f64> {
    let pts = c.polytope.vertices_f64();
    let heights = cell_heights(c);
    let mut total = 0.0;
    for (i, h) in heights.iter().enumerate() {
        total += 0.25 * h * cell_volume_with(c, i, &pts)?;
    }
    Ok(total)
}

/// All measures at the complex's own scale.
pub fn metrics_report(c: &IncidenceComplex) -> Result<MetricsReport> {
    let (i, j) = *c
        .edges
        .first()
        .ok_or_else(|| Error::Structural("complex has no edges".into()))?;
    let heights = cell_heights(c);
    let inradius = heights.iter().sum::<f64>() / heights.len().max(1) as f64;
    Ok(MetricsReport {
        edge_length: distance(&c.polytope.vertices[i], &c.polytope.vertices[j]),
        angle_edges_deg: edge_edge_angle(c)?.constant("edge-edge")?,
        angle_faces_deg: face_face_angle(c)?.constant("face-face")?,
        angle_cells_deg: cell_cell_angle(c)?.constant("cell-cell")?,
        boundary_content: boundary_content(c)?,
        hypervolume: hypervolume(c)?,
        inradius,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub cells: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Angles {
    pub edges: f64,
    pub faces: f64,
    pub cells: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub name: String,
    pub schlafli: [u32; 3],
    pub counts: Counts,
    pub feature: IncidenceProfile,
    pub angles_deg: Angles,
    pub boundary_content: f64,
    pub hypervolume: f64,
    pub inradius: f64,
}

/// Counts, incidence constants and measures of a polytope at unit edge.
pub fn polytope_stats(kind: PolytopeKind) -> Result<StatsReport> {
    let c = IncidenceComplex::build(kind.build())?.unit_edge()?;
    let m = metrics_report(&c)?;
    let [v, e, f, k] = c.counts();
    let d = kind.descriptor();
    Ok(StatsReport {
        name: kind.name().to_string(),
        schlafli: [d.p, d.q, d.r],
        counts: Counts {
            vertices: v,
            edges: e,
            faces: f,
            cells: k,
        },
        feature: c.incidence_profile()?,
        angles_deg: Angles {
            edges: m.angle_edges_deg,
            faces: m.angle_faces_deg,
            cells: m.angle_cells_deg,
        },
        boundary_content: m.boundary_content,
        hypervolume: m.hypervolume,
        inradius: m.inradius,
    })
}
