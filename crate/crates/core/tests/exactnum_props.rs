use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use polychora::exactnum::{rank_and_kernel, GoldenNumber, Vector4};
use proptest::prelude::*;

fn golden() -> impl Strategy<Value = GoldenNumber> {
    (-60i64..60, 1i64..20, -60i64..60, 1i64..20).prop_map(|(a, b, c, d)| GoldenNumber::from_ratios(a, b, c, d))
}

/// Sign of `a/b + (c/d)√5` by interval enclosure of √5 to 60 digits.
fn interval_sign(a: i64, b: i64, c: i64, d: i64) -> i8 {
    let x = BigInt::from(a) * d;
    let y = BigInt::from(c) * b;
    let ten = BigInt::from(10).pow(60);
    let lo = (BigInt::from(5) * &ten * &ten).sqrt();
    let hi: BigInt = &lo + 1;
    let base = &x * &ten;
    let v1: BigInt = &base + &y * &lo;
    let v2: BigInt = &base + &y * &hi;
    if x.is_zero() && y.is_zero() {
        0
    } else if v1.is_positive() && v2.is_positive() {
        1
    } else if v1.is_negative() && v2.is_negative() {
        -1
    } else {
        panic!("interval too wide for {a}/{b} + {c}/{d} sqrt5")
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms(x in golden(), y in golden(), z in golden()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &GoldenNumber::zero(), x.clone());
        prop_assert_eq!(&x * &GoldenNumber::one(), x.clone());
        prop_assert!((&x + &-&x).is_zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.recip().unwrap(), GoldenNumber::one());
        } else {
            prop_assert!(x.recip().is_err());
        }
    }

    #[test]
    fn sign_matches_interval_oracle(a in -1000i64..1000, b in 1i64..50, c in -1000i64..1000, d in 1i64..50) {
        let x = GoldenNumber::from_ratios(a, b, c, d);
        prop_assert_eq!(x.signum(), interval_sign(a, b, c, d));
    }

    #[test]
    fn to_f64_is_monotone(mut v in proptest::collection::vec(golden(), 3)) {
        v.sort();
        prop_assert!(v[0].to_f64() <= v[1].to_f64());
        prop_assert!(v[1].to_f64() <= v[2].to_f64());
    }

    #[test]
    fn display_round_trips(x in golden()) {
        prop_assert_eq!(x.to_string().parse::<GoldenNumber>().unwrap(), x);
    }
}

fn vector() -> impl Strategy<Value = Vector4> {
    proptest::array::uniform4(golden()).prop_map(|[a, b, c, d]| Vector4::new(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kernel_is_orthogonal_to_rows(rows in proptest::collection::vec(vector(), 0..4)) {
        let rk = rank_and_kernel(&rows);
        prop_assert_eq!(rk.rank + rk.kernel_basis.len(), 4);
        for k in &rk.kernel_basis {
            prop_assert!(!k.is_zero());
            for r in &rows {
                prop_assert!(r.dot(k).is_zero());
            }
        }
    }

    #[test]
    fn repeated_row_does_not_raise_rank(v in vector(), w in vector()) {
        let two = rank_and_kernel(&[v.clone(), w.clone()]).rank;
        let three = rank_and_kernel(&[v.clone(), w, v]).rank;
        prop_assert_eq!(two, three);
    }
}
