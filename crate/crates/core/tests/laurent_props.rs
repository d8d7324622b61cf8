use std::collections::BTreeMap;

use cluster_core::laurent::LaurentPoly;
use cluster_core::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

const NVARS: usize = 3;

fn poly(max_terms: usize, coeff: impl Strategy<Value = i64> + Clone) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, NVARS), coeff), 0..=max_terms)
        .prop_map(|terms| LaurentPoly::from_terms(NVARS, terms).unwrap())
}

fn small() -> impl Strategy<Value = LaurentPoly> {
    poly(6, -5i64..=5)
}

// Enough terms that products take the packed fixed-width paths.
fn wide() -> impl Strategy<Value = LaurentPoly> {
    poly(24, -1000i64..=1000)
}

// Exponent spans too wide for a dense array.
fn spread() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-300i32..=300, NVARS), -50i64..=50), 8..=24)
        .prop_map(|terms| LaurentPoly::from_terms(NVARS, terms).unwrap())
}

// Coefficients near 2^62 overflow every fixed-width accumulator.
fn huge() -> impl Strategy<Value = LaurentPoly> {
    poly(16, prop_oneof![Just(i64::MAX), Just(i64::MIN + 1), (1i64 << 61)..(1i64 << 62)])
}

fn naive_mul(a: &LaurentPoly, b: &LaurentPoly) -> BTreeMap<Vec<i32>, BigInt> {
    let mut out: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let e: Vec<i32> = ma.exponents().iter().zip(mb.exponents()).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn as_map(p: &LaurentPoly) -> BTreeMap<Vec<i32>, BigInt> {
    p.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

fn point() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((1i64..=7, 1i64..=5), NVARS)
        .prop_map(|v| v.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect())
}

proptest! {
    #[test]
    fn ring_laws(a in small(), b in small(), c in small()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(NVARS), a.clone());
    }

    #[test]
    fn products_match_naive_oracle(a in wide(), b in wide()) {
        prop_assert_eq!(as_map(&(&a * &b)), naive_mul(&a, &b));
    }

    #[test]
    fn sparse_products_match_naive_oracle(a in spread(), b in spread()) {
        prop_assert_eq!(as_map(&(&a * &b)), naive_mul(&a, &b));
        prop_assert_eq!(as_map(&a.pow(2)), naive_mul(&a, &a));
    }

    #[test]
    fn sparse_exact_div_round_trip(a in spread(), b in spread()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn overflow_falls_back_to_exact(a in huge(), b in huge()) {
        prop_assert_eq!(as_map(&(&a * &b)), naive_mul(&a, &b));
    }

    #[test]
    fn square_matches_product(a in wide()) {
        prop_assert_eq!(a.pow(2), &a * &a);
        prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn exact_div_round_trip(a in wide(), b in wide()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).exact_div(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn exact_div_round_trip_large(a in huge(), b in wide()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn adding_a_unit_breaks_divisibility(a in small(), b in small()) {
        prop_assume!(b.num_terms() >= 2 && !a.is_zero());
        // b * a + 1 has the same support span as b * a but cannot be a
        // multiple of a non-monomial b unless b divides 1.
        let n = &(&a * &b) + &LaurentPoly::one(NVARS);
        prop_assert_eq!(n.exact_div(&b), Err(Error::NonExactDivision));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in small(), b in small(), x in point()) {
        let ea = a.eval(&x).unwrap();
        let eb = b.eval(&x).unwrap();
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), ea + eb);
    }

    #[test]
    fn canonical_string_round_trips(a in small()) {
        let s = a.to_canonical_string();
        prop_assert_eq!(LaurentPoly::parse(&s, NVARS).unwrap(), a);
    }

    #[test]
    fn bounded_power_agrees_when_it_finishes(a in small(), e in 0u32..6) {
        let full = a.pow(e);
        if let Some(p) = a.pow_within(e, 500) {
            prop_assert_eq!(p, full);
        }
        prop_assert_eq!(a.pow_within(e, usize::MAX), Some(a.pow(e)));
    }
}

#[test]
fn non_exact_example() {
    let num = LaurentPoly::parse("x1 + x2", 2).unwrap();
    let den = LaurentPoly::parse("x1 + 1", 2).unwrap();
    assert_eq!(num.exact_div(&den), Err(Error::NonExactDivision));
    assert_eq!(num.exact_div(&LaurentPoly::zero(2)), Err(Error::DivisionByZero));
}
