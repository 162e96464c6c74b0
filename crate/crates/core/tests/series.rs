use kfgr::series::{
    lambda_factorize, lambda_reconstruct, macdonald_series, power_pow, Bivariate, BivariateZeta, CoefficientRing,
    ExponentSign, IntegerConfig, IntegerZeta, Integers, LambdaStructure, TruncSeries,
};
use num_bigint::BigInt;
use proptest::prelude::*;

const N: usize = 7;

fn z(v: &[i64], trunc: usize) -> TruncSeries<BigInt> {
    TruncSeries::new(&Integers, v.iter().map(|&x| BigInt::from(x)).collect(), trunc)
}

/// Coefficients of `prod_{r >= 1} (1 - t^r)^{-e}` by repeated multiplication
/// with geometric series, for `e >= 0`.
fn euler_product(e: usize, n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for _ in 0..e {
        for part in 1..=n {
            for m in part..=n {
                p[m] += p[m - part];
            }
        }
    }
    p
}

fn binomial(n: i64, k: usize) -> i64 {
    (0..k as i64).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn unit_series() -> impl Strategy<Value = TruncSeries<BigInt>> {
    prop::collection::vec(-4i64..=4, N).prop_map(|tail| {
        let mut v = vec![1];
        v.extend(tail);
        z(&v, N)
    })
}

#[test]
fn truncation_reduces_to_the_smaller_order() {
    let a = z(&[1, 1, 1, 1, 1], 4);
    let b = z(&[1, -1], 2);
    let p = a.mul(&Integers, &b).unwrap();
    assert_eq!(p.trunc(), 2);
    assert_eq!(p.coeffs(), z(&[1, 0, 0], 2).coeffs());
    assert_eq!(a.add(&Integers, &b).trunc(), 2);
}

#[test]
fn rendering() {
    assert_eq!(z(&[1, 2, 0, -1], 3).render(&Integers), "1 + 2*t - t^3 + O(t^4)");
}

#[test]
fn reciprocal_requires_a_unit_constant() {
    assert!(z(&[2, 1], 3).reciprocal(&Integers).is_err());
    let inv = z(&[1, -1], 5).reciprocal(&Integers).unwrap();
    assert_eq!(inv.coeffs(), z(&[1, 1, 1, 1, 1, 1], 5).coeffs());
}

#[test]
fn lambda_structures_on_integers() {
    // (1 - t)^-3 and (1 + t)^3
    let zeta = IntegerZeta.lambda(&BigInt::from(3), 5).unwrap();
    let expected: Vec<i64> = (0..=5).map(|k| binomial(k as i64 + 2, k)).collect();
    assert_eq!(zeta.coeffs(), z(&expected, 5).coeffs());
    let config = IntegerConfig.lambda(&BigInt::from(3), 5).unwrap();
    assert_eq!(config.coeffs(), z(&[1, 3, 3, 1, 0, 0], 5).coeffs());
    // negative exponents give the inverse series
    let inv = IntegerZeta.lambda(&BigInt::from(-3), 5).unwrap();
    assert_eq!(inv.coeffs(), z(&[1, -3, 3, -1, 0, 0], 5).coeffs());
}

#[test]
fn factorization_of_the_partition_series() {
    let p = euler_product(1, N);
    let b = lambda_factorize(&z(&p, N), &IntegerZeta).unwrap();
    assert_eq!(b, vec![BigInt::from(1); N]);
}

#[test]
fn macdonald_series_for_low_orders() {
    for e in [-2i64, 0, 1, 3] {
        let eb = BigInt::from(e);
        // k = 0 is the single factor (1 - t)^{-e}
        let k0 = macdonald_series(0, &eb, N, ExponentSign::Negative);
        let expected: Vec<i64> = (0..=N).map(|k| binomial(-e, k) * if k % 2 == 0 { 1 } else { -1 }).collect();
        assert_eq!(k0.coeffs(), z(&expected, N).coeffs(), "e = {e}");
    }
    for e in [1usize, 2, 3] {
        let k1 = macdonald_series(1, &BigInt::from(e), N, ExponentSign::Negative);
        assert_eq!(k1.coeffs(), z(&euler_product(e, N), N).coeffs(), "e = {e}");
    }
}

#[test]
fn bivariate_factorization_round_trips() {
    let r = Bivariate;
    let u = r.monomial(1, 1, 0);
    let v = r.monomial(1, 0, 1);
    let uv = r.add(&r.monomial(2, 1, 1), &r.neg(&v));
    let a = BivariateZeta.lambda(&r.add(&u, &v), 4).unwrap();
    let b = a.mul(&r, &BivariateZeta.lambda(&uv, 4).unwrap().substitute(&r, 2)).unwrap();
    let f = lambda_factorize(&b, &BivariateZeta).unwrap();
    assert_eq!(f[0], r.add(&u, &v));
    assert_eq!(f[1], uv);
    assert!(f[2..].iter().all(|c| r.is_zero(c)));
    assert_eq!(lambda_reconstruct(&f, &BivariateZeta, 4).unwrap(), b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn factorize_and_reconstruct_are_inverse(a in unit_series()) {
        let b = lambda_factorize(&a, &IntegerZeta).unwrap();
        prop_assert_eq!(b.len(), N);
        prop_assert_eq!(lambda_reconstruct(&b, &IntegerZeta, N).unwrap(), a.clone());
        let c = lambda_factorize(&a, &IntegerConfig).unwrap();
        prop_assert_eq!(lambda_reconstruct(&c, &IntegerConfig, N).unwrap(), a);
    }

    #[test]
    fn power_structure_axioms(a in unit_series(), b in unit_series(), m in -3i64..=3, n in -3i64..=3) {
        let (mb, nb) = (BigInt::from(m), BigInt::from(n));
        let l = IntegerZeta;
        let pow = |s: &TruncSeries<BigInt>, e: &BigInt| power_pow(s, e, &l).unwrap();
        // A^0 = 1 and A^1 = A
        prop_assert_eq!(pow(&a, &BigInt::from(0)), TruncSeries::one(&Integers, N));
        prop_assert_eq!(pow(&a, &BigInt::from(1)), a.clone());
        // (AB)^m = A^m B^m
        let ab = a.mul(&Integers, &b).unwrap();
        prop_assert_eq!(pow(&ab, &mb), pow(&a, &mb).mul(&Integers, &pow(&b, &mb)).unwrap());
        // A^(m+n) = A^m A^n
        prop_assert_eq!(pow(&a, &(&mb + &nb)), pow(&a, &mb).mul(&Integers, &pow(&a, &nb)).unwrap());
        // A^(mn) = (A^n)^m
        prop_assert_eq!(pow(&a, &(&mb * &nb)), pow(&pow(&a, &nb), &mb));
        // (1 - t)^-m
        let geometric = z(&[1; N + 1], N);
        prop_assert_eq!(pow(&geometric, &mb), l.lambda(&mb, N).unwrap());
        // integer exponents agree with repeated multiplication
        prop_assert_eq!(pow(&a, &mb), a.int_pow(&Integers, &mb).unwrap());
    }

    #[test]
    fn substitution_is_a_ring_map(a in unit_series(), b in unit_series(), k in 1usize..4) {
        let lhs = a.mul(&Integers, &b).unwrap().substitute(&Integers, k);
        let rhs = a.substitute(&Integers, k).mul(&Integers, &b.substitute(&Integers, k)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let inv = a.reciprocal(&Integers).unwrap();
        prop_assert_eq!(a.mul(&Integers, &inv).unwrap(), TruncSeries::one(&Integers, N));
    }
}
