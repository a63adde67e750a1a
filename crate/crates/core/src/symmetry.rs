//! Rotation-group order, orbits and stabilizers from incidence data, and the
//! pole-number identity relating them.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complexes::IncidenceComplex;
use crate::error::{Error, Result};

/// Number of vertex ⊂ edge ⊂ face ⊂ cell chains.
pub fn flag_count(c: &IncidenceComplex) -> usize {
    c.faces
        .iter()
        .zip(&c.face_cells)
        .map(|(f, cells)| 2 * f.len() * cells.len())
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryProfile {
    /// Order of the rotation group.
    pub n: u64,
    pub cell_count: u64,
    /// Orbit sizes: vertices, edges, faces.
    pub v: [u64; 3],
    /// Stabilizer orders, `n / v[i]`.
    pub n_stab: [u64; 3],
    /// Cells incident to a vertex, an edge, a face.
    pub alpha: [u64; 3],
}

pub fn symmetry_profile(c: &IncidenceComplex) -> Result<SymmetryProfile> {
    let flags = flag_count(c) as u64;
    if !flags.is_multiple_of(2) {
        return Err(Error::Structural(format!("odd flag count {flags}")));
    }
    let n = flags / 2;
    let [n0, n1, n2, n3] = c.counts().map(|k| k as u64);
    let v = [n0, n1, n2];
    let mut n_stab = [0; 3];
    for (s, &vi) in n_stab.iter_mut().zip(&v) {
        if vi == 0 || !n.is_multiple_of(vi) {
            return Err(Error::Structural(format!("group order {n} not divisible by orbit size {vi}")));
        }
        *s = n / vi;
    }
    let p = c.incidence_profile()?;
    Ok(SymmetryProfile {
        n,
        cell_count: n3,
        v,
        n_stab,
        alpha: [p.cells_per_vertex, p.cells_per_edge, p.cells_per_face].map(|k| k as u64),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleIdentity {
    pub left: BigRational,
    pub right: BigRational,
    pub holds: bool,
}

fn rat(k: u64) -> BigRational {
    BigRational::from_integer(k.into())
}

/// `2(n − N₃)` against `Σ vᵢ·nᵢ·(1 − αᵢ/nᵢ)`, both exact.
pub fn pole_identity(s: &SymmetryProfile) -> PoleIdentity {
    let left = rat(2) * (rat(s.n) - rat(s.cell_count));
    let mut right = BigRational::zero();
    for i in 0..3 {
        let ns = rat(s.n_stab[i]);
        let bracket = BigRational::one() - rat(s.alpha[i]) / &ns;
        right += rat(s.v[i]) * ns * bracket;
    }
    let holds = left == right;
    PoleIdentity { left, right, holds }
}
