//! Exact vertex sets of the tesseract, the 600-cell and the 120-cell.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::{integerize, GoldenNumber, IntGolden, Point4, Vector4};

/// The three supported regular 4-polytopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolytopeKind {
    Tesseract,
    Cell120,
    Cell600,
}

impl PolytopeKind {
    pub const ALL: [PolytopeKind; 3] = [PolytopeKind::Tesseract, PolytopeKind::Cell120, PolytopeKind::Cell600];

    pub fn descriptor(self) -> SchlafliDescriptor {
        let (p, q, r) = match self {
            PolytopeKind::Tesseract => (4, 3, 3),
            PolytopeKind::Cell120 => (5, 3, 3),
            PolytopeKind::Cell600 => (3, 3, 5),
        };
        SchlafliDescriptor { p, q, r, kind: self }
    }

    pub fn name(self) -> &'static str {
        match self {
            PolytopeKind::Tesseract => "tesseract",
            PolytopeKind::Cell120 => "120-cell",
            PolytopeKind::Cell600 => "600-cell",
        }
    }

    /// Canonical centered realization.
    pub fn build(self) -> Polytope {
        match self {
            PolytopeKind::Tesseract => build_tesseract(true),
            PolytopeKind::Cell120 => build_120cell(),
            PolytopeKind::Cell600 => build_600cell(),
        }
    }
}

impl fmt::Display for PolytopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolytopeKind {
    type Err = Error;

    /// Case-insensitive; the hyphen is optional (`120cell`, `600-Cell`, ...).
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .flat_map(char::to_lowercase)
            .collect();
        match key.as_str() {
            "tesseract" => Ok(PolytopeKind::Tesseract),
            "120cell" => Ok(PolytopeKind::Cell120),
            "600cell" => Ok(PolytopeKind::Cell600),
            _ => Err(Error::UnknownPolytope(s.to_string())),
        }
    }
}

/// Schläfli symbol `{p, q, r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchlafliDescriptor {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub kind: PolytopeKind,
}

impl SchlafliDescriptor {
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            PolytopeKind::Tesseract => 16,
            PolytopeKind::Cell120 => 600,
            PolytopeKind::Cell600 => 120,
        }
    }

    /// Vertices of the vertex figure `{q, r}`.
    pub fn edges_per_vertex(&self) -> usize {
        match (self.q, self.r) {
            (3, 3) => 4,
            (3, 4) => 6,
            (4, 3) => 8,
            (3, 5) => 12,
            (5, 3) => 20,
            _ => unreachable!("unsupported vertex figure"),
        }
    }
}

impl fmt::Display for SchlafliDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.p, self.q, self.r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    /// The 0/1 unit tesseract.
    UnitCube,
    /// Centered at the origin.
    Canonical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub descriptor: SchlafliDescriptor,
    pub vertices: Vec<Point4>,
    pub frame: Frame,
    /// Multiplier applied to the base construction.
    pub scale: GoldenNumber,
}

impl Polytope {
    pub fn kind(&self) -> PolytopeKind {
        self.descriptor.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn centroid(&self) -> Point4 {
        let n = GoldenNumber::from_integer(self.vertices.len() as i64);
        let coords = std::array::from_fn(|i| {
            let s: GoldenNumber = self.vertices.iter().map(|v| v[i].clone()).sum();
            s.checked_div(&n).unwrap_or_default()
        });
        Point4(coords)
    }

    pub fn vertices_f64(&self) -> Vec<[f64; 4]> {
        self.vertices.iter().map(Point4::to_f64).collect()
    }

    /// Exact minimum squared inter-vertex distance.
    pub fn min_squared_distance(&self) -> Option<GoldenNumber> {
        closest_pairs(&self.vertices).map(|c| c.squared_distance)
    }
}

/// All vertex pairs realizing the minimum distance.
#[derive(Clone, Debug)]
pub struct ClosestPairs {
    pub squared_distance: GoldenNumber,
    /// `(i, j)` with `i < j`, ascending.
    pub pairs: Vec<(usize, usize)>,
}

/// Exact closest pairs, scanning every pair.
pub fn closest_pairs(vertices: &[Point4]) -> Option<ClosestPairs> {
    if vertices.len() < 2 {
        return None;
    }
    let positions: Vec<Vector4> = vertices.iter().map(Point4::to_vector).collect();
    let mut best: Option<(GoldenNumber, Vec<(usize, usize)>)> = None;
    if let Some(lattice) = integerize(&positions) {
        let pts = &lattice.vectors;
        let mut min = IntGolden::ZERO;
        let mut pairs = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let d = pts[i].sub(&pts[j]).norm2();
                let ord = if pairs.is_empty() { -1 } else { (d - min).signum() };
                if ord < 0 {
                    min = d;
                    pairs.clear();
                }
                if ord <= 0 {
                    pairs.push((i, j));
                }
            }
        }
        let s2 = GoldenNumber::from_rational(BigRational::from_integer(&lattice.scale * &lattice.scale));
        best = Some((min.to_golden().checked_div(&s2).ok()?, pairs));
    } else {
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let d = vertices[i].squared_distance(&vertices[j]);
                match &mut best {
                    Some((m, pairs)) if d == *m => pairs.push((i, j)),
                    Some((m, _)) if d > *m => {}
                    _ => best = Some((d, vec![(i, j)])),
                }
            }
        }
    }
    best.map(|(squared_distance, pairs)| ClosestPairs { squared_distance, pairs })
}

/// 0/1 vertex order of the tesseract projection table.
const TESSERACT_TABLE: [[i64; 4]; 16] = [
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
    [1, 1, 1, 0],
    [1, 1, 0, 1],
    [1, 0, 1, 1],
    [0, 1, 1, 1],
    [1, 1, 1, 1],
];

/// The tesseract in table order; `centered` shifts by −(½,½,½,½).
pub fn build_tesseract(centered: bool) -> Polytope {
    let half = GoldenNumber::from_ratios(1, 2, 0, 1);
    let vertices = TESSERACT_TABLE
        .iter()
        .map(|c| {
            let p = Point4::from_integers(*c);
            if centered {
                Point4(std::array::from_fn(|i| &p[i] - &half))
            } else {
                p
            }
        })
        .collect();
    Polytope {
        descriptor: PolytopeKind::Tesseract.descriptor(),
        vertices,
        frame: if centered { Frame::Canonical } else { Frame::UnitCube },
        scale: GoldenNumber::one(),
    }
}

/// All 24 permutations of four slots, each with its parity.
fn permutations() -> Vec<([usize; 4], bool)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    if distinct {
                        let inversions = (0..4)
                            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                            .filter(|&(i, j)| p[i] > p[j])
                            .count();
                        out.push((p, inversions % 2 == 0));
                    }
                }
            }
        }
    }
    out
}

/// Every sign change and every (or every even) permutation of `base`.
fn orbit(base: &[GoldenNumber; 4], even_only: bool, into: &mut BTreeSet<Point4>) {
    let perms = permutations();
    for mask in 0u8..16 {
        let signed: [GoldenNumber; 4] = std::array::from_fn(|i| {
            if mask & (1 << i) != 0 {
                -&base[i]
            } else {
                base[i].clone()
            }
        });
        for (perm, even) in &perms {
            if even_only && !even {
                continue;
            }
            into.insert(Point4(std::array::from_fn(|i| signed[perm[i]].clone())));
        }
    }
}

fn canonical(kind: PolytopeKind, set: BTreeSet<Point4>) -> Polytope {
    Polytope {
        descriptor: kind.descriptor(),
        vertices: set.into_iter().collect(),
        frame: Frame::Canonical,
        scale: GoldenNumber::one(),
    }
}

/// 120 vertices on the unit 3-sphere, lexicographically ordered.
pub fn build_600cell() -> Polytope {
    let g = GoldenNumber::from_ratios;
    let zero = GoldenNumber::zero();
    let half = g(1, 2, 0, 1);
    let mut set = BTreeSet::new();
    orbit(&[half.clone(), half.clone(), half.clone(), half.clone()], false, &mut set);
    orbit(&[GoldenNumber::one(), zero.clone(), zero.clone(), zero.clone()], false, &mut set);
    // (φ/2, 1/2, 1/(2φ), 0)
    orbit(&[g(1, 4, 1, 4), half, g(-1, 4, 1, 4), zero], true, &mut set);
    canonical(PolytopeKind::Cell600, set)
}

/// 600 vertices of squared norm 8, lexicographically ordered.
pub fn build_120cell() -> Polytope {
    let n = GoldenNumber::from_integer;
    let zero = GoldenNumber::zero();
    let one = GoldenNumber::one();
    let s5 = GoldenNumber::sqrt5();
    let phi = GoldenNumber::phi();
    let phi_inv = GoldenNumber::phi_inv();
    let phi2 = &phi * &phi;
    let phi_inv2 = &phi_inv * &phi_inv;

    let mut set = BTreeSet::new();
    orbit(&[zero.clone(), zero.clone(), n(2), n(2)], false, &mut set);
    orbit(&[one.clone(), one.clone(), one.clone(), s5.clone()], false, &mut set);
    orbit(&[phi_inv2.clone(), phi.clone(), phi.clone(), phi.clone()], false, &mut set);
    orbit(&[phi_inv.clone(), phi_inv.clone(), phi_inv.clone(), phi2.clone()], false, &mut set);
    orbit(&[zero.clone(), phi_inv2, one.clone(), phi2], true, &mut set);
    orbit(&[zero, phi_inv.clone(), phi.clone(), s5], true, &mut set);
    orbit(&[phi_inv, one, phi, n(2)], true, &mut set);
    canonical(PolytopeKind::Cell120, set)
}

/// Multiply every coordinate by `factor` (> 0).
pub fn rescale(p: &Polytope, factor: &GoldenNumber) -> Result<Polytope> {
    if factor.signum() <= 0 {
        return Err(Error::NonPositiveScale(factor.to_string()));
    }
    Ok(Polytope {
        descriptor: p.descriptor,
        vertices: p.vertices.iter().map(|v| v.scaled(factor)).collect(),
        frame: p.frame,
        scale: &p.scale * factor,
    })
}

/// Rescale so the edge length is exactly 1.
pub fn normalize_unit_edge(p: &Polytope) -> Result<Polytope> {
    let d2 = p
        .min_squared_distance()
        .ok_or_else(|| Error::Structural("fewer than two vertices".into()))?;
    let edge = d2.sqrt().ok_or_else(|| Error::NoExactSqrt(d2.to_string()))?;
    rescale(p, &edge.recip()?)
}
