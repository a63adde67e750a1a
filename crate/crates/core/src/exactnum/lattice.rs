//! Machine-integer elements of Z[sqrt5] for the hot exact predicates.
//!
//! A set of golden-field vectors is scaled by one positive common denominator
//! so that every component becomes `a + b√5` with integer `a`, `b`. Positive
//! scaling preserves zero tests and signs, so predicates evaluated here are
//! identical to those on the original exact values.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{GoldenNumber, Vector4};

/// Components are capped so that a generalized cross product of three
/// differences, dotted with a fourth, stays inside `i128`.
const COMPONENT_LIMIT: i128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntGolden {
    pub a: i128,
    pub b: i128,
}

impl IntGolden {
    pub const ZERO: IntGolden = IntGolden { a: 0, b: 0 };

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of `a + b√5`.
    pub fn signum(self) -> i8 {
        let sa = self.a.signum() as i8;
        let sb = self.b.signum() as i8;
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        let ord = match (self.a.checked_mul(self.a), self.b.checked_mul(self.b).and_then(|b2| b2.checked_mul(5))) {
            (Some(a2), Some(b2)) => a2.cmp(&b2),
            _ => {
                let a = BigInt::from(self.a);
                let b = BigInt::from(self.b);
                (&a * &a).cmp(&(&b * &b * 5))
            }
        };
        if ord == std::cmp::Ordering::Greater {
            sa
        } else {
            sb
        }
    }

    pub fn to_golden(self) -> GoldenNumber {
        GoldenNumber::new(BigInt::from(self.a).into(), BigInt::from(self.b).into())
    }
}

impl Add for IntGolden {
    type Output = IntGolden;
    fn add(self, r: IntGolden) -> IntGolden {
        IntGolden {
            a: self.a + r.a,
            b: self.b + r.b,
        }
    }
}

impl Sub for IntGolden {
    type Output = IntGolden;
    fn sub(self, r: IntGolden) -> IntGolden {
        IntGolden {
            a: self.a - r.a,
            b: self.b - r.b,
        }
    }
}

impl Mul for IntGolden {
    type Output = IntGolden;
    fn mul(self, r: IntGolden) -> IntGolden {
        IntGolden {
            a: self.a * r.a + 5 * self.b * r.b,
            b: self.a * r.b + self.b * r.a,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntVector4(pub [IntGolden; 4]);

impl IntVector4 {
    pub fn dot(&self, o: &IntVector4) -> IntGolden {
        (0..4).fold(IntGolden::ZERO, |acc, i| acc + self.0[i] * o.0[i])
    }

    pub fn sub(&self, o: &IntVector4) -> IntVector4 {
        IntVector4(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }

    pub fn norm2(&self) -> IntGolden {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn axis(k: usize) -> IntVector4 {
        let mut v = IntVector4::default();
        v.0[k] = IntGolden { a: 1, b: 0 };
        v
    }
}

fn det3(m: [[IntGolden; 3]; 3]) -> IntGolden {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Generalized cross product: orthogonal to `a`, `b`, `c`, and zero exactly
/// when they are linearly dependent.
pub fn cross3(a: &IntVector4, b: &IntVector4, c: &IntVector4) -> IntVector4 {
    let minor = |skip: usize| -> IntGolden {
        let cols: Vec<usize> = (0..4).filter(|&k| k != skip).collect();
        det3([a, b, c].map(|r| [r.0[cols[0]], r.0[cols[1]], r.0[cols[2]]]))
    };
    IntVector4(std::array::from_fn(|k| {
        let m = minor(k);
        if k % 2 == 0 {
            m
        } else {
            IntGolden::ZERO - m
        }
    }))
}

/// Vectors scaled by a common positive integer `scale`.
#[derive(Clone, Debug)]
pub struct ScaledVectors {
    pub scale: BigInt,
    pub vectors: Vec<IntVector4>,
}

/// Clear all denominators at once; `None` if a component leaves the safe range.
pub fn integerize(vectors: &[Vector4]) -> Option<ScaledVectors> {
    let mut scale = BigInt::one();
    for v in vectors {
        for c in v.coords() {
            scale = scale.lcm(c.rational_part().denom());
            scale = scale.lcm(c.surd_part().denom());
        }
    }
    let conv = |r: &num_rational::BigRational| -> Option<i128> {
        let n = (r.numer() * &scale / r.denom()).to_i128()?;
        (n.abs() < COMPONENT_LIMIT).then_some(n)
    };
    let vectors = vectors
        .iter()
        .map(|v| {
            let mut out = [IntGolden::ZERO; 4];
            for (o, c) in out.iter_mut().zip(v.coords()) {
                *o = IntGolden {
                    a: conv(c.rational_part())?,
                    b: conv(c.surd_part())?,
                };
            }
            Some(IntVector4(out))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(ScaledVectors { scale, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_matches_golden() {
        for (a, b) in [(7, -3), (2, -1), (-7, 3), (0, 0), (0, -1), (5, 0), (-9, 4), (9, -4)] {
            let x = IntGolden { a, b };
            assert_eq!(x.signum(), x.to_golden().signum(), "{a} {b}");
        }
        let huge = IntGolden {
            a: 1 << 100,
            b: -(1 << 99),
        };
        assert_eq!(huge.signum(), huge.to_golden().signum());
    }

    #[test]
    fn cross_product_is_orthogonal() {
        let g = |a, b| IntGolden { a, b };
        let a = IntVector4([g(1, 0), g(2, 1), g(0, 0), g(-3, 1)]);
        let b = IntVector4([g(0, 1), g(1, 0), g(4, 0), g(2, 0)]);
        let c = IntVector4([g(5, 0), g(0, 0), g(1, -1), g(1, 0)]);
        let n = cross3(&a, &b, &c);
        assert!(!n.is_zero());
        for v in [a, b, c] {
            assert!(n.dot(&v).is_zero());
        }
        assert!(cross3(&a, &b, &a).is_zero());
    }

    #[test]
    fn integerize_clears_denominators() {
        let phi = GoldenNumber::phi();
        let v = Vector4::new(phi.clone(), GoldenNumber::from_ratios(1, 3, 0, 1), GoldenNumber::zero(), phi);
        let s = integerize(std::slice::from_ref(&v)).unwrap();
        assert_eq!(s.scale, BigInt::from(6));
        let back = s.vectors[0].norm2().to_golden();
        assert_eq!(back, &v.norm2() * &GoldenNumber::from_integer(36));
    }
}
