//! Edges, 2-faces and 3-cells of a polytope, found with exact predicates.
//!
//! Edges are the closest vertex pairs. A face is the exact 2-flat closure of
//! two adjacent edges whose induced edge graph is a single `p`-cycle. A cell
//! is the zero set of a supporting hyperplane spanned by a face and one more
//! adjacent vertex.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::builder::{closest_pairs, Polytope};
use crate::error::{Error, Result};
use crate::exactnum::{cross3, integerize, GoldenNumber, IntGolden, IntVector4, Point4, Vector4};

/// `{x : normal·x = offset}`; the polytope lies on the side `normal·x ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vector4,
    pub offset: GoldenNumber,
}

impl Hyperplane {
    pub fn evaluate(&self, x: &Point4) -> GoldenNumber {
        &self.normal.dot(&x.to_vector()) - &self.offset
    }
}

#[derive(Clone, Debug)]
pub struct IncidenceComplex {
    pub polytope: Polytope,
    /// `(i, j)` with `i < j`, ascending.
    pub edges: Vec<(usize, usize)>,
    /// Boundary cycles, smallest index first then its smaller neighbor.
    pub faces: Vec<Vec<usize>>,
    /// Sorted vertex sets.
    pub cells: Vec<Vec<usize>>,
    /// Outward supporting hyperplane of each cell.
    pub cell_planes: Vec<Hyperplane>,
    pub edge_faces: Vec<Vec<usize>>,
    pub face_cells: Vec<Vec<usize>>,
    pub cell_faces: Vec<Vec<usize>>,
    pub vertex_edges: Vec<Vec<usize>>,
    pub vertex_faces: Vec<Vec<usize>>,
    pub vertex_cells: Vec<Vec<usize>>,
}

/// Constant incidence numbers of a regular complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceProfile {
    pub edges_per_vertex: usize,
    pub faces_per_edge: usize,
    pub cells_per_edge: usize,
    pub cells_per_vertex: usize,
    pub cells_per_face: usize,
}

/// JSON shape of `export complex`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexExport {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<usize>>,
    pub cells: Vec<Vec<usize>>,
}

pub fn enumerate_edges(p: &Polytope) -> Vec<(usize, usize)> {
    closest_pairs(&p.vertices).map(|c| c.pairs).unwrap_or_default()
}

fn neighbor_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// Vertices scaled onto the integer lattice of Z[√5].
fn lattice_points(p: &Polytope) -> Result<Vec<IntVector4>> {
    let positions: Vec<Vector4> = p.vertices.iter().map(Point4::to_vector).collect();
    integerize(&positions)
        .map(|s| s.vectors)
        .ok_or_else(|| Error::Structural("coordinates exceed the exact lattice range".into()))
}

fn to_vector(v: &IntVector4) -> Vector4 {
    Vector4(v.0.map(IntGolden::to_golden))
}

/// Exact affine flat through `base`, stored as integer normals spanning its
/// orthogonal complement.
struct Flat {
    base: IntVector4,
    normals: Vec<IntVector4>,
}

impl Flat {
    /// The 2-flat through three points; `None` when they are collinear.
    fn plane(base: &IntVector4, u: &IntVector4, w: &IntVector4) -> Option<Flat> {
        let (du, dw) = (u.sub(base), w.sub(base));
        let normals: Vec<IntVector4> = (0..4)
            .map(|k| cross3(&du, &dw, &IntVector4::axis(k)))
            .filter(|n| !n.is_zero())
            .collect();
        (!normals.is_empty()).then_some(Flat { base: *base, normals })
    }

    /// The hyperplane through four points; `None` when they are coplanar.
    fn hyperplane(base: &IntVector4, u: &IntVector4, w: &IntVector4, x: &IntVector4) -> Option<Flat> {
        let n = cross3(&u.sub(base), &w.sub(base), &x.sub(base));
        (!n.is_zero()).then_some(Flat {
            base: *base,
            normals: vec![n],
        })
    }

    fn contains(&self, x: &IntVector4) -> bool {
        let d = x.sub(&self.base);
        self.normals.iter().all(|n| n.dot(&d).is_zero())
    }

    /// Sign of `x` against the first normal.
    fn side(&self, x: &IntVector4) -> i8 {
        self.normals[0].dot(&x.sub(&self.base)).signum()
    }
}

/// Rotate and reflect a cycle so it starts at its smallest index followed by
/// the smaller of that vertex's two cycle neighbors.
fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let next = cycle[(start + 1) % n];
    let prev = cycle[(start + n - 1) % n];
    if next <= prev {
        (0..n).map(|k| cycle[(start + k) % n]).collect()
    } else {
        (0..n).map(|k| cycle[(start + n - k) % n]).collect()
    }
}

/// The single cycle through all of `members` in the induced edge graph, if any.
fn induced_cycle(members: &[usize], adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let inside: HashSet<usize> = members.iter().copied().collect();
    let local = |v: usize| -> Vec<usize> { adj[v].iter().copied().filter(|u| inside.contains(u)).collect() };
    if members.iter().any(|&v| local(v).len() != 2) {
        return None;
    }
    let first = *members.iter().min()?;
    let mut cycle = vec![first];
    let mut prev = first;
    let mut cur = local(first)[0];
    while cur != first {
        cycle.push(cur);
        let nb = local(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
        if cycle.len() > members.len() {
            return None;
        }
    }
    (cycle.len() == members.len()).then(|| canonical_cycle(&cycle))
}

pub fn enumerate_faces(p: &Polytope, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let n = p.vertex_count();
    let pts = lattice_points(p)?;
    let gon = p.descriptor.p as usize;
    let adj = neighbor_lists(n, edges);
    let mut covered: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut faces = Vec::new();

    for v in 0..n {
        for (a, &u) in adj[v].iter().enumerate() {
            for &w in &adj[v][a + 1..] {
                if covered.contains(&(u, v, w)) {
                    continue;
                }
                let Some(flat) = Flat::plane(&pts[v], &pts[u], &pts[w]) else {
                    continue;
                };
                let closure: Vec<usize> = (0..n).filter(|&x| flat.contains(&pts[x])).collect();
                if closure.len() != gon {
                    continue;
                }
                let Some(cycle) = induced_cycle(&closure, &adj) else {
                    continue;
                };
                for k in 0..gon {
                    let (a, b, c) = (cycle[k], cycle[(k + 1) % gon], cycle[(k + 2) % gon]);
                    covered.insert((a.min(c), b, a.max(c)));
                }
                if seen.insert(closure) {
                    faces.push(cycle);
                }
            }
        }
    }
    faces.sort();
    Ok(faces)
}

fn contains_all(sorted: &[usize], items: &[usize]) -> bool {
    items.iter().all(|x| sorted.binary_search(x).is_ok())
}

/// Cells with their outward hyperplanes, sorted by vertex set.
pub fn enumerate_cells(
    p: &Polytope,
    edges: &[(usize, usize)],
    faces: &[Vec<usize>],
) -> Result<(Vec<Vec<usize>>, Vec<Hyperplane>)> {
    let n = p.vertex_count();
    let pts = lattice_points(p)?;
    let adj = neighbor_lists(n, edges);
    let mut cells: Vec<(Vec<usize>, Hyperplane)> = Vec::new();
    let mut vertex_faces = vec![Vec::new(); n];
    for (f, face) in faces.iter().enumerate() {
        for &v in face {
            vertex_faces[v].push(f);
        }
    }
    // Cells found so far that contain each face.
    let mut holding: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];

    for (f, face) in faces.iter().enumerate() {
        if holding[f].len() >= 2 {
            continue;
        }
        let base = &pts[face[0]];
        let face_flat = Flat::plane(base, &pts[face[1]], &pts[face[2]])
            .ok_or_else(|| Error::Structural(format!("face {face:?} is degenerate")))?;
        let candidates: BTreeSet<usize> = face
            .iter()
            .flat_map(|&v| adj[v].iter().copied())
            .filter(|&x| !face_flat.contains(&pts[x]))
            .collect();
        for x in candidates {
            if holding[f].iter().any(|&c| cells[c].0.binary_search(&x).is_ok()) {
                continue;
            }
            let Some(span) = Flat::hyperplane(base, &pts[face[1]], &pts[face[2]], &pts[x]) else {
                continue;
            };
            let mut positive = false;
            let mut negative = false;
            let mut members = Vec::new();
            for (i, q) in pts.iter().enumerate() {
                match span.side(q) {
                    0 => members.push(i),
                    s if s > 0 => positive = true,
                    _ => negative = true,
                }
                if positive && negative {
                    break;
                }
            }
            if positive && negative {
                continue;
            }
            let mut normal = to_vector(&span.normals[0]);
            if positive {
                normal = -&normal;
            }
            let offset = normal.dot(&p.vertices[face[0]].to_vector());
            let id = cells.len();
            let inner: BTreeSet<usize> = members.iter().flat_map(|&v| vertex_faces[v].iter().copied()).collect();
            for g in inner {
                if contains_all(&members, &faces[g]) {
                    holding[g].push(id);
                }
            }
            cells.push((members, Hyperplane { normal, offset }));
        }
        let found = holding[f].len();
        if found != 2 {
            return Err(Error::Structural(format!(
                "face {:?} has {} supporting extensions, expected 2",
                face, found
            )));
        }
    }

    cells.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(cells.into_iter().unzip())
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

impl IncidenceComplex {
    /// Enumerate everything and wire up the incidence maps.
    pub fn build(polytope: Polytope) -> Result<Self> {
        if polytope.vertex_count() < 2 {
            return Err(Error::Structural("need at least two vertices".into()));
        }
        let edges = enumerate_edges(&polytope);
        let faces = enumerate_faces(&polytope, &edges)?;
        let (cells, cell_planes) = enumerate_cells(&polytope, &edges, &faces)?;
        let n = polytope.vertex_count();

        let mut vertex_edges = vec![Vec::new(); n];
        for (e, &(i, j)) in edges.iter().enumerate() {
            vertex_edges[i].push(e);
            vertex_edges[j].push(e);
        }
        let mut vertex_faces = vec![Vec::new(); n];
        for (f, face) in faces.iter().enumerate() {
            for &v in face {
                vertex_faces[v].push(f);
            }
        }
        let mut vertex_cells = vec![Vec::new(); n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                vertex_cells[v].push(c);
            }
        }
        let edge_faces = edges
            .iter()
            .map(|&(i, j)| intersect_sorted(&vertex_faces[i], &vertex_faces[j]))
            .collect::<Vec<Vec<usize>>>();
        let face_cells: Vec<Vec<usize>> = faces
            .iter()
            .map(|face| {
                face[1..]
                    .iter()
                    .fold(vertex_cells[face[0]].clone(), |acc, &v| intersect_sorted(&acc, &vertex_cells[v]))
            })
            .collect();
        let mut cell_faces = vec![Vec::new(); cells.len()];
        for (f, cs) in face_cells.iter().enumerate() {
            for &c in cs {
                cell_faces[c].push(f);
            }
        }

        let complex = IncidenceComplex {
            polytope,
            edges,
            faces,
            cells,
            cell_planes,
            edge_faces,
            face_cells,
            cell_faces,
            vertex_edges,
            vertex_faces,
            vertex_cells,
        };
        Ok(complex)
    }

    /// Same combinatorics with every coordinate multiplied by `factor` (> 0).
    pub fn rescaled(&self, factor: &GoldenNumber) -> Result<Self> {
        let polytope = crate::builder::rescale(&self.polytope, factor)?;
        let cell_planes = self
            .cell_planes
            .iter()
            .map(|h| Hyperplane {
                normal: h.normal.clone(),
                offset: &h.offset * factor,
            })
            .collect();
        Ok(IncidenceComplex {
            polytope,
            cell_planes,
            ..self.clone()
        })
    }

    /// Rescaled so every edge has length exactly 1.
    pub fn unit_edge(&self) -> Result<Self> {
        let (i, j) = *self
            .edges
            .first()
            .ok_or_else(|| Error::Structural("complex has no edges".into()))?;
        let d2 = self.polytope.vertices[i].squared_distance(&self.polytope.vertices[j]);
        let edge = d2.sqrt().ok_or_else(|| Error::NoExactSqrt(d2.to_string()))?;
        self.rescaled(&edge.recip()?)
    }

    /// `(N0, N1, N2, N3)`.
    pub fn counts(&self) -> [usize; 4] {
        [self.polytope.vertex_count(), self.edges.len(), self.faces.len(), self.cells.len()]
    }

    pub fn euler_characteristic(&self) -> i64 {
        let [v, e, f, c] = self.counts().map(|x| x as i64);
        v - e + f - c
    }

    /// Cells containing both endpoints of edge `e`.
    pub fn edge_cells(&self, e: usize) -> Vec<usize> {
        let (i, j) = self.edges[e];
        intersect_sorted(&self.vertex_cells[i], &self.vertex_cells[j])
    }

    pub fn incidence_profile(&self) -> Result<IncidenceProfile> {
        fn constant(name: &str, mut values: impl Iterator<Item = usize>) -> Result<usize> {
            let first = values
                .next()
                .ok_or_else(|| Error::Structural(format!("no elements for {name}")))?;
            match values.find(|&v| v != first) {
                None => Ok(first),
                Some(other) => Err(Error::Structural(format!(
                    "{name} is not constant ({first} vs {other})"
                ))),
            }
        }
        Ok(IncidenceProfile {
            edges_per_vertex: constant("edges per vertex", self.vertex_edges.iter().map(Vec::len))?,
            faces_per_edge: constant("faces per edge", self.edge_faces.iter().map(Vec::len))?,
            cells_per_edge: constant("cells per edge", (0..self.edges.len()).map(|e| self.edge_cells(e).len()))?,
            cells_per_vertex: constant("cells per vertex", self.vertex_cells.iter().map(Vec::len))?,
            cells_per_face: constant("cells per face", self.face_cells.iter().map(Vec::len))?,
        })
    }

    /// Sorted neighbor indices per vertex.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        neighbor_lists(self.polytope.vertex_count(), &self.edges)
    }

    pub fn to_export(&self) -> ComplexExport {
        let one_based = |v: &Vec<usize>| v.iter().map(|i| i + 1).collect();
        ComplexExport {
            vertices: self.polytope.vertex_count(),
            edges: self.edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
            faces: self.faces.iter().map(one_based).collect(),
            cells: self.cells.iter().map(one_based).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{build_tesseract, PolytopeKind};

    #[test]
    fn canonical_cycle_orientation() {
        assert_eq!(canonical_cycle(&[4, 2, 7, 1, 9]), vec![1, 7, 2, 4, 9]);
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[0, 5, 6, 1]), vec![0, 1, 6, 5]);
    }

    #[test]
    fn tesseract_complex() {
        let c = IncidenceComplex::build(build_tesseract(false)).unwrap();
        assert_eq!(c.counts(), [16, 32, 24, 8]);
        assert!(c.faces.iter().all(|f| f.len() == 4));
        assert!(c.cells.iter().all(|f| f.len() == 8));
        assert_eq!(c.euler_characteristic(), 0);
        let profile = c.incidence_profile().unwrap();
        assert_eq!(
            profile,
            IncidenceProfile {
                edges_per_vertex: 4,
                faces_per_edge: 3,
                cells_per_edge: 3,
                cells_per_vertex: 4,
                cells_per_face: 2
            }
        );
    }

    #[test]
    fn tesseract_neighbors_at_hamming_distance_one() {
        let p = build_tesseract(false);
        let coords: Vec<[i64; 4]> = p
            .vertices_f64()
            .iter()
            .map(|v| v.map(|x| x as i64))
            .collect();
        let c = IncidenceComplex::build(p).unwrap();
        for (i, list) in c.adjacency_lists().iter().enumerate() {
            assert_eq!(list.len(), 4);
            for &j in list {
                let hamming = (0..4).filter(|&k| coords[i][k] != coords[j][k]).count();
                assert_eq!(hamming, 1);
            }
        }
    }

    #[test]
    fn missing_cell_is_a_structural_error() {
        // A lone square: each face edge extends to no supporting cell.
        let mut p = build_tesseract(false);
        p.vertices.truncate(4);
        p.vertices = vec![
            Point4::from_integers([0, 0, 0, 0]),
            Point4::from_integers([1, 0, 0, 0]),
            Point4::from_integers([0, 1, 0, 0]),
            Point4::from_integers([1, 1, 0, 0]),
        ];
        let edges = enumerate_edges(&p);
        let faces = enumerate_faces(&p, &edges).unwrap();
        assert_eq!(faces, vec![vec![0, 1, 3, 2]]);
        assert!(matches!(enumerate_cells(&p, &edges, &faces), Err(Error::Structural(_))));
    }

    #[test]
    fn cells_of_the_600_cell_are_tetrahedra() {
        let c = IncidenceComplex::build(PolytopeKind::Cell600.build()).unwrap();
        assert_eq!(c.counts(), [120, 720, 1200, 600]);
        assert!(c.cells.iter().all(|cell| cell.len() == 4));
    }
}
