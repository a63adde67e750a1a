//! Elements of the real quadratic field Q(sqrt5).
//!
//! Every canonical coordinate of the three supported polytopes lives in this
//! field, so squared distances, coplanarity and hyperplane sides can all be
//! decided without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `p + q·√5` with `p`, `q` arbitrary-precision rationals in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GoldenNumber {
    p: BigRational,
    q: BigRational,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl GoldenNumber {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        GoldenNumber { p, q }
    }

    /// `pn/pd + (qn/qd)·√5`.
    pub fn from_ratios(pn: i64, pd: i64, qn: i64, qd: i64) -> Self {
        GoldenNumber::new(ratio(pn, pd), ratio(qn, qd))
    }

    pub fn from_integer(n: i64) -> Self {
        GoldenNumber::from_ratios(n, 1, 0, 1)
    }

    pub fn from_rational(r: BigRational) -> Self {
        GoldenNumber::new(r, BigRational::zero())
    }

    pub fn zero() -> Self {
        GoldenNumber::default()
    }

    pub fn one() -> Self {
        GoldenNumber::from_integer(1)
    }

    pub fn sqrt5() -> Self {
        GoldenNumber::from_ratios(0, 1, 1, 1)
    }

    /// The golden ratio (1+√5)/2.
    pub fn phi() -> Self {
        GoldenNumber::from_ratios(1, 2, 1, 2)
    }

    /// 1/φ = φ − 1.
    pub fn phi_inv() -> Self {
        GoldenNumber::from_ratios(-1, 2, 1, 2)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.p
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Galois conjugate `p − q·√5`.
    pub fn conjugate(&self) -> Self {
        GoldenNumber::new(self.p.clone(), -self.q.clone())
    }

    /// Field norm `p² − 5q²`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - ratio(5, 1) * &self.q * &self.q
    }

    /// Exact sign of the real value, decided with integer arithmetic only.
    pub fn signum(&self) -> i8 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sp == sq || sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        // Opposite signs: the larger of p² and 5q² wins.
        match (&self.p * &self.p).cmp(&(ratio(5, 1) * &self.q * &self.q)) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => unreachable!("sqrt5 is irrational"),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(GoldenNumber::new(&c.p / &n, &c.q / &n))
    }

    pub fn checked_div(&self, rhs: &GoldenNumber) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Exact square root when it exists in the field.
    pub fn sqrt(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(GoldenNumber::zero());
        }
        // (a + b√5)² = (a² + 5b²) + 2ab√5
        // so a² is a root of t² − p·t + 5q²/4 = 0, i.e. (p ± √norm)/2.
        let disc = rational_sqrt(&self.norm())?;
        let two = ratio(2, 1);
        for a2 in [(&self.p + &disc) / &two, (&self.p - &disc) / &two] {
            let Some(a) = rational_sqrt(&a2) else {
                continue;
            };
            let b = if a.is_zero() {
                match rational_sqrt(&(&self.p / ratio(5, 1))) {
                    Some(b) => b,
                    None => continue,
                }
            } else {
                &self.q / (&a * &two)
            };
            let root = GoldenNumber::new(a, b).abs();
            if &root * &root == *self {
                return Some(root);
            }
        }
        None
    }

    /// Nearest `f64` to the exact value.
    pub fn to_f64(&self) -> f64 {
        if self.q.is_zero() {
            return self.p.to_f64().unwrap_or(f64::NAN);
        }
        let mut c = self.estimate_f64();
        if !c.is_finite() {
            return c;
        }
        // Walk to the float whose rounding interval contains the value.
        loop {
            let up = c.next_up();
            if self.cmp_rational(&midpoint(c, up)) == Ordering::Greater {
                c = up;
                continue;
            }
            let down = c.next_down();
            if self.cmp_rational(&midpoint(down, c)) == Ordering::Less {
                c = down;
                continue;
            }
            return c;
        }
    }

    fn estimate_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let s5 = 5f64.sqrt();
        if sign_of(&self.p) * sign_of(&self.q) < 0 {
            // Cancellation: use (p² − 5q²) / (p − q√5).
            let n = self.norm().to_f64().unwrap_or(f64::NAN);
            n / (p - q * s5)
        } else {
            p + q * s5
        }
    }

    fn cmp_rational(&self, r: &BigRational) -> Ordering {
        let d = GoldenNumber::new(&self.p - r, self.q.clone());
        d.signum().cmp(&0)
    }

    /// Fixed-point decimal with `digits` fractional digits, rounded
    /// half-to-even on the exact value.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10).pow(digits);
        let scaled = self * &GoldenNumber::from_rational(BigRational::from_integer(scale.clone()));
        let mut floor = BigInt::from(scaled.to_f64().floor() as i128);
        while scaled.cmp_rational(&BigRational::from_integer(floor.clone())) == Ordering::Less {
            floor -= 1;
        }
        while scaled.cmp_rational(&BigRational::from_integer(&floor + 1)) != Ordering::Less {
            floor += 1;
        }
        let half = BigRational::new(&floor * 2 + 1, BigInt::from(2));
        let rounded = match scaled.cmp_rational(&half) {
            Ordering::Greater => &floor + 1,
            Ordering::Less => floor,
            Ordering::Equal => {
                if floor.is_even() {
                    floor
                } else {
                    &floor + 1
                }
            }
        };
        format_fixed(&rounded, digits as usize)
    }
}

fn format_fixed(units: &BigInt, digits: usize) -> String {
    let negative = units.is_negative();
    let mut s = units.abs().to_string();
    if s.len() <= digits {
        s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
    }
    let split = s.len() - digits;
    let body = if digits == 0 {
        s
    } else {
        format!("{}.{}", &s[..split], &s[split..])
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn midpoint(a: f64, b: f64) -> BigRational {
    let ra = BigRational::from_float(a).expect("finite");
    let rb = BigRational::from_float(b).expect("finite");
    (ra + rb) / ratio(2, 1)
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<i64> for GoldenNumber {
    fn from(n: i64) -> Self {
        GoldenNumber::from_integer(n)
    }
}

impl From<BigRational> for GoldenNumber {
    fn from(r: BigRational) -> Self {
        GoldenNumber::from_rational(r)
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.p, -self.q)
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        -self.clone()
    }
}

impl<'a> Add<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl<'a> Sub<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl<'a> Mul<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        // (p + q√5)(r + s√5) = (pr + 5qs) + (ps + qr)√5
        let five = ratio(5, 1);
        GoldenNumber::new(
            &self.p * &rhs.p + five * &self.q * &rhs.q,
            &self.p * &rhs.q + &self.q * &rhs.p,
        )
    }
}

/// Panics on a zero divisor, like integer division; see [`GoldenNumber::checked_div`].
impl<'a> Div<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn div(self, rhs: &GoldenNumber) -> GoldenNumber {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $m(self, rhs: GoldenNumber) -> GoldenNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $m(self, rhs: &GoldenNumber) -> GoldenNumber {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<GoldenNumber> for &'a GoldenNumber {
            type Output = GoldenNumber;
            fn $m(self, rhs: GoldenNumber) -> GoldenNumber {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GoldenNumber> for GoldenNumber {
    fn add_assign(&mut self, rhs: &GoldenNumber) {
        self.p += &rhs.p;
        self.q += &rhs.q;
    }
}

impl SubAssign<&GoldenNumber> for GoldenNumber {
    fn sub_assign(&mut self, rhs: &GoldenNumber) {
        self.p -= &rhs.p;
        self.q -= &rhs.q;
    }
}

impl std::iter::Sum for GoldenNumber {
    fn sum<I: Iterator<Item = GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Exact form `p/q+r/s*sqrt5` (the sign joins the two halves).
impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.p)?;
        if !self.q.is_negative() {
            f.write_str("+")?;
        }
        write_ratio(f, &self.q)?;
        f.write_str("*sqrt5")
    }
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.strip_prefix('+').unwrap_or(n).parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for GoldenNumber {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) form as well as a bare rational.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseNumber(s.to_string());
        let t = s.trim();
        let Some(head) = t.strip_suffix("*sqrt5") else {
            return parse_ratio(t).map(GoldenNumber::from_rational).ok_or_else(bad);
        };
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .filter(|&i| !head[..i].ends_with('/'))
            .last()
            .ok_or_else(bad)?;
        let p = parse_ratio(&head[..split]).ok_or_else(bad)?;
        let q = parse_ratio(&head[split..]).ok_or_else(bad)?;
        Ok(GoldenNumber::new(p, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(pn: i64, pd: i64, qn: i64, qd: i64) -> GoldenNumber {
        GoldenNumber::from_ratios(pn, pd, qn, qd)
    }

    #[test]
    fn sqrt5_squared_is_five() {
        let s = GoldenNumber::sqrt5();
        assert_eq!(&s * &s, GoldenNumber::from_integer(5));
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = GoldenNumber::phi();
        assert_eq!(&phi * &phi, &phi + &GoldenNumber::one());
        assert_eq!(&phi * &phi, g(3, 2, 1, 2));
        assert_eq!(&phi * &GoldenNumber::phi_inv(), GoldenNumber::one());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(g(3, 1, -1, 1) * g(3, 1, 1, 1), GoldenNumber::from_integer(4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = GoldenNumber::one();
        assert!(matches!(
            one.checked_div(&GoldenNumber::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(GoldenNumber::zero().recip().is_err());
    }

    #[test]
    fn canonical_form_is_structural() {
        assert_eq!(g(2, 4, -3, -6), g(1, 2, 1, 2));
        assert_eq!(g(2, 4, -3, -6).rational_part().denom(), &BigInt::from(2));
    }

    #[test]
    fn signs() {
        assert_eq!(GoldenNumber::zero().signum(), 0);
        assert_eq!(g(7, 1, -3, 1).signum(), 1);
        assert_eq!(g(2, 1, -1, 1).signum(), -1);
        assert_eq!(g(-7, 1, 3, 1).signum(), -1);
        assert_eq!(g(0, 1, -1, 3).signum(), -1);
    }

    #[test]
    fn float_conversion() {
        assert_eq!(format!("{:.10}", GoldenNumber::phi().to_f64()), "1.6180339887");
        assert_eq!(GoldenNumber::one().to_f64(), 1.0);
        assert_eq!(format!("{:.10}", g(3, 1, -1, 1).to_f64()), "0.7639320225");
        assert_eq!(GoldenNumber::phi().to_f64(), (1.0 + 5f64.sqrt()) / 2.0);
    }

    #[test]
    fn decimal_rendering_rounds_half_even() {
        assert_eq!(GoldenNumber::phi().to_decimal(10), "1.6180339887");
        assert_eq!(g(-3, 1, 1, 1).to_decimal(10), "-0.7639320225");
        assert_eq!(GoldenNumber::zero().to_decimal(10), "0.0000000000");
        assert_eq!(g(1, 4, 0, 1).to_decimal(1), "0.2");
        assert_eq!(g(3, 4, 0, 1).to_decimal(1), "0.8");
        assert_eq!(g(-5, 2, 0, 1).to_decimal(0), "-2");
        assert_eq!(g(1, 20, 0, 1).to_decimal(10), "0.0500000000");
    }

    #[test]
    fn exact_square_roots() {
        let d = g(14, 1, -6, 1);
        assert_eq!(d.sqrt(), Some(g(3, 1, -1, 1)));
        assert_eq!(g(2, 1, -1, 1).sqrt(), None);
        assert_eq!(GoldenNumber::from_integer(5).sqrt(), Some(GoldenNumber::sqrt5()));
        assert_eq!(g(3, 2, 1, 2).sqrt(), Some(GoldenNumber::phi()));
        assert_eq!(GoldenNumber::from_integer(4).sqrt(), Some(GoldenNumber::from_integer(2)));
        assert_eq!(GoldenNumber::from_integer(2).sqrt(), None);
    }

    #[test]
    fn display_and_parse() {
        let x = g(-1, 2, -3, 4);
        assert_eq!(x.to_string(), "-1/2-3/4*sqrt5");
        assert_eq!(x.to_string().parse::<GoldenNumber>().unwrap(), x);
        assert_eq!(GoldenNumber::phi().to_string(), "1/2+1/2*sqrt5");
        assert_eq!("3/2".parse::<GoldenNumber>().unwrap(), g(3, 2, 0, 1));
        assert!("abc".parse::<GoldenNumber>().is_err());
        assert!("1/0+1/1*sqrt5".parse::<GoldenNumber>().is_err());
    }
}
