use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use super::GoldenNumber;

/// An exact point of 4-space.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Point4(pub [GoldenNumber; 4]);

/// An exact displacement in 4-space.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Vector4(pub [GoldenNumber; 4]);

macro_rules! coords_common {
    ($t:ident) => {
        impl $t {
            pub fn new(x1: GoldenNumber, x2: GoldenNumber, x3: GoldenNumber, x4: GoldenNumber) -> Self {
                $t([x1, x2, x3, x4])
            }

            pub fn zero() -> Self {
                $t(std::array::from_fn(|_| GoldenNumber::zero()))
            }

            pub fn from_integers(c: [i64; 4]) -> Self {
                $t(c.map(GoldenNumber::from_integer))
            }

            pub fn coords(&self) -> &[GoldenNumber; 4] {
                &self.0
            }

            pub fn to_f64(&self) -> [f64; 4] {
                std::array::from_fn(|i| self.0[i].to_f64())
            }

            pub fn scaled(&self, factor: &GoldenNumber) -> Self {
                $t(std::array::from_fn(|i| &self.0[i] * factor))
            }
        }

        impl Index<usize> for $t {
            type Output = GoldenNumber;
            fn index(&self, i: usize) -> &GoldenNumber {
                &self.0[i]
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
            }
        }
    };
}

coords_common!(Point4);
coords_common!(Vector4);

impl Vector4 {
    pub fn dot(&self, other: &Vector4) -> GoldenNumber {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> GoldenNumber {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GoldenNumber::is_zero)
    }
}

impl Point4 {
    /// Position vector from the origin.
    pub fn to_vector(&self) -> Vector4 {
        Vector4(self.0.clone())
    }

    pub fn squared_distance(&self, other: &Point4) -> GoldenNumber {
        (self - other).norm2()
    }
}

impl<'a> Sub<&'a Point4> for &'a Point4 {
    type Output = Vector4;
    fn sub(self, rhs: &Point4) -> Vector4 {
        Vector4(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl<'a> Add<&'a Vector4> for &'a Point4 {
    type Output = Point4;
    fn add(self, rhs: &Vector4) -> Point4 {
        Point4(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<'a> Sub<&'a Vector4> for &'a Point4 {
    type Output = Point4;
    fn sub(self, rhs: &Vector4) -> Point4 {
        Point4(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl<'a> Add<&'a Vector4> for &'a Vector4 {
    type Output = Vector4;
    fn add(self, rhs: &Vector4) -> Vector4 {
        Vector4(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<'a> Sub<&'a Vector4> for &'a Vector4 {
    type Output = Vector4;
    fn sub(self, rhs: &Vector4) -> Vector4 {
        Vector4(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Vector4 {
    type Output = Vector4;
    fn neg(self) -> Vector4 {
        Vector4(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Neg for &Point4 {
    type Output = Point4;
    fn neg(self) -> Point4 {
        Point4(std::array::from_fn(|i| -&self.0[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_axes() {
        let e1 = Vector4::from_integers([1, 0, 0, 0]);
        let e2 = Vector4::from_integers([0, 1, 0, 0]);
        assert!(e1.dot(&e2).is_zero());
    }

    #[test]
    fn norm_of_a_120cell_vertex() {
        let one = GoldenNumber::one();
        let v = Vector4::new(one.clone(), one.clone(), one, GoldenNumber::sqrt5());
        assert_eq!(v.norm2(), GoldenNumber::from_integer(8));
    }

    #[test]
    fn point_difference() {
        let a = Point4::from_integers([1, 1, 1, 1]);
        let o = Point4::zero();
        let d = &a - &o;
        assert_eq!(d, Vector4::from_integers([1, 1, 1, 1]));
        assert_eq!(d.norm2(), GoldenNumber::from_integer(4));
        assert_eq!(&o + &d, a);
    }

    #[test]
    fn norm_is_zero_only_for_zero() {
        assert!(Vector4::zero().norm2().is_zero());
        let v = Vector4::new(
            GoldenNumber::phi_inv(),
            GoldenNumber::zero(),
            -GoldenNumber::phi(),
            GoldenNumber::zero(),
        );
        assert_eq!(v.norm2().signum(), 1);
    }
}
