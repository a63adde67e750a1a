//! Locating an unknown vertex from its distances to four known vertices.

use crate::error::{Error, Result};

/// Relative threshold below which the two roots are treated as one.
pub const TANGENCY_TOL: f64 = 1e-12;

const RANK_TOL: f64 = 1e-10;

/// Four spheres: the first three centers at distance `a`, the fourth at `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereSystem {
    pub centers: [[f64; 4]; 4],
    pub a: f64,
    pub b: f64,
}

impl SphereSystem {
    pub fn new(centers: [[f64; 4]; 4], a: f64, b: f64) -> Result<Self> {
        let s = SphereSystem { centers, a, b };
        s.check()?;
        Ok(s)
    }

    fn check(&self) -> Result<()> {
        if !self.centers.iter().flatten().all(|c| c.is_finite()) {
            return Err(Error::InvalidSystem("non-finite center coordinate".into()));
        }
        if !(self.a.is_finite() && self.a > 0.0) {
            return Err(Error::InvalidSystem(format!("a must be positive, got {}", self.a)));
        }
        if !(self.b.is_finite() && self.b > self.a) {
            return Err(Error::InvalidSystem(format!("b must exceed a, got a={} b={}", self.a, self.b)));
        }
        Ok(())
    }

    pub fn radii(&self) -> [f64; 4] {
        [self.a, self.a, self.a, self.b]
    }

    /// Relative residuals `(|x - cᵢ| - rᵢ) / rᵢ` for a candidate point.
    pub fn residuals(&self, x: &[f64; 4]) -> [f64; 4] {
        let r = self.radii();
        std::array::from_fn(|i| (norm(&sub(x, &self.centers[i])) - r[i]) / r[i])
    }
}

fn sub(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    std::array::from_fn(|i| a[i] - b[i])
}

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64; 4]) -> f64 {
    dot(a, a).sqrt()
}

/// Solution line of a 3×4 linear system: `base + t·direction` with
/// `direction` a unit kernel vector and `base` orthogonal to it.
fn solve_line(m: [[f64; 4]; 3], rhs: [f64; 3]) -> Result<([f64; 4], [f64; 4])> {
    let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return Err(Error::DegenerateConfiguration { rank: 0 });
    }
    let mut a = m;
    let mut b = rhs;
    let mut cols = [0usize, 1, 2, 3];
    for k in 0..3 {
        let (mut pr, mut pc, mut best) = (k, k, 0.0);
        for (r, row) in a.iter().enumerate().skip(k) {
            for c in k..4 {
                if row[cols[c]].abs() > best {
                    (pr, pc, best) = (r, c, row[cols[c]].abs());
                }
            }
        }
        if best <= RANK_TOL * scale {
            return Err(Error::DegenerateConfiguration { rank: k });
        }
        a.swap(k, pr);
        b.swap(k, pr);
        cols.swap(k, pc);
        for r in 0..3 {
            if r == k {
                continue;
            }
            let f = a[r][cols[k]] / a[k][cols[k]];
            if f != 0.0 {
                for c in 0..4 {
                    a[r][c] -= f * a[k][c];
                }
                b[r] -= f * b[k];
            }
        }
    }
    // Reduced form: a[k][cols[k]]·x_{cols[k]} + a[k][cols[3]]·x_{cols[3]} = b[k].
    let free = cols[3];
    let mut particular = [0.0; 4];
    let mut kernel = [0.0; 4];
    kernel[free] = 1.0;
    for k in 0..3 {
        let p = a[k][cols[k]];
        particular[cols[k]] = b[k] / p;
        kernel[cols[k]] = -a[k][free] / p;
    }
    let len = norm(&kernel);
    let dir = kernel.map(|v| v / len);
    let t = dot(&particular, &dir);
    let base = std::array::from_fn(|i| particular[i] - t * dir[i]);
    Ok((base, dir))
}

/// All real points at distances `(a, a, a, b)` from the four centers.
///
/// An empty vector means the spheres have no common point; a rank-deficient
/// set of centers is an error.
pub fn solve_vertex(s: &SphereSystem) -> Result<Vec<[f64; 4]>> {
    s.check()?;
    let c0 = s.centers[0];
    let r = s.radii();
    let mut m = [[0.0; 4]; 3];
    let mut rhs = [0.0; 3];
    for i in 0..3 {
        let d = sub(&s.centers[i + 1], &c0);
        m[i] = d.map(|v| 2.0 * v);
        rhs[i] = dot(&d, &d) - r[i + 1] * r[i + 1] + r[0] * r[0];
    }
    let (base, dir) = solve_line(m, rhs)?;
    let disc = r[0] * r[0] - dot(&base, &base);
    let rel = disc / (r[0] * r[0]);
    let at = |t: f64| -> [f64; 4] { std::array::from_fn(|i| c0[i] + base[i] + t * dir[i]) };
    if rel < -TANGENCY_TOL {
        Ok(Vec::new())
    } else if rel <= TANGENCY_TOL {
        Ok(vec![at(0.0)])
    } else {
        let h = disc.sqrt();
        Ok(vec![at(-h), at(h)])
    }
}
