use std::sync::Arc;

use kfgr::class_ring::{chi_k_gset, ClassRing, RElement};
use kfgr::groups::{cyclic, dihedral, klein_four, symmetric, Group, GroupClassId};
use kfgr::gsets::GSet;
use num_bigint::BigInt;
use proptest::prelude::*;

/// `chi^(k)(X, G)` as `|G|^-1` times the number of pairwise commuting
/// `(k+1)`-tuples of group elements together with a point they all fix.
fn chi_brute(x: &GSet, k: usize) -> BigInt {
    let g = x.group();
    let mut count = 0u64;
    let mut tuple = Vec::new();
    extend(g, x, k + 1, &mut tuple, &mut count);
    assert_eq!(count % g.order() as u64, 0);
    BigInt::from(count / g.order() as u64)
}

fn extend(g: &Group, x: &GSet, len: usize, tuple: &mut Vec<usize>, count: &mut u64) {
    if tuple.len() == len {
        *count += (0..x.size()).filter(|&p| tuple.iter().all(|&h| x.act(h, p) == p)).count() as u64;
        return;
    }
    for h in g.elements() {
        if tuple.iter().all(|&t| g.commute(t, h)) {
            tuple.push(h);
            extend(g, x, len, tuple, count);
            tuple.pop();
        }
    }
}

fn pool() -> Vec<GSet> {
    let s3 = Arc::new(symmetric(3).unwrap());
    let v = Arc::new(klein_four().unwrap());
    let d8 = Arc::new(dihedral(8).unwrap());
    vec![
        GSet::point(s3.clone()),
        GSet::regular(s3.clone()),
        GSet::natural(s3.clone()).unwrap(),
        GSet::point(v.clone()),
        GSet::regular(v).disjoint_union(&GSet::point(Arc::new(klein_four().unwrap()))).unwrap(),
        GSet::natural(d8.clone()).unwrap(),
        GSet::point(d8),
    ]
}

#[test]
fn classes_of_basic_gsets() {
    let ring = ClassRing::default();
    let s3 = Arc::new(symmetric(3).unwrap());
    let t_s3 = ring.generator(&s3).unwrap();
    let t_c2 = ring.generator(&cyclic(2).unwrap()).unwrap();
    assert_eq!(ring.class_of(&GSet::point(s3.clone())).unwrap(), t_s3);
    assert_eq!(ring.class_of(&GSet::regular(s3.clone())).unwrap(), RElement::one());
    assert_eq!(ring.class_of(&GSet::natural(s3.clone()).unwrap()).unwrap(), t_c2);
    let u = GSet::natural(s3.clone()).unwrap().disjoint_union(&GSet::point(s3.clone())).unwrap();
    assert_eq!(ring.class_of(&u).unwrap(), &t_c2 + &t_s3);
    assert_eq!(ring.render_element(&(&t_c2 - &ring.generator(&s3).unwrap().scale(&BigInt::from(2)))), "-2*T[S3] + T[C2]");
}

#[test]
fn trivial_group_is_the_unit() {
    let ring = ClassRing::default();
    assert_eq!(ring.class_id(&cyclic(1).unwrap()).unwrap(), GroupClassId::TRIVIAL);
    let a = ring.generator(&symmetric(3).unwrap()).unwrap();
    assert_eq!(ring.multiply(&a, &RElement::one()).unwrap(), a);
    let c6 = ring.generator(&cyclic(6).unwrap()).unwrap();
    let c2 = ring.generator(&cyclic(2).unwrap()).unwrap();
    let c3 = ring.generator(&cyclic(3).unwrap()).unwrap();
    assert_eq!(ring.multiply(&c2, &c3).unwrap(), c6);
}

#[test]
fn inertia_of_s3_is_sum_of_centralizers() {
    let ring = ClassRing::default();
    let t = |g: Group| ring.generator(&g).unwrap();
    let a = ring.alpha(&t(symmetric(3).unwrap())).unwrap();
    let expected = &(&t(symmetric(3).unwrap()) + &t(cyclic(2).unwrap())) + &t(cyclic(3).unwrap());
    assert_eq!(a, expected);
    // an abelian group has |G| classes, each with centralizer G
    assert_eq!(ring.alpha(&t(klein_four().unwrap())).unwrap(), t(klein_four().unwrap()).scale(&BigInt::from(4)));
}

#[test]
fn higher_euler_characteristics_match_commuting_tuple_counts() {
    let ring = ClassRing::default();
    for x in pool() {
        let class = ring.class_of(&x).unwrap();
        for k in 0..=2 {
            let expected = chi_brute(&x, k);
            assert_eq!(chi_k_gset(&x, k), expected, "chi_{k} of a G-set of size {}", x.size());
            assert_eq!(ring.chi_k(&class, k).unwrap(), expected);
        }
    }
}

#[test]
fn chi_un_counts_orbits_by_isotropy() {
    let ring = ClassRing::default();
    for x in pool() {
        let u = ring.chi_un(&x).unwrap();
        assert_eq!(ring.euler0(&u), BigInt::from(x.quotient_size()));
        // chi_un agrees with the class of X in the ring
        assert_eq!(u, ring.class_of(&x).unwrap());
    }
}

#[test]
fn zeta_of_the_unit_has_symmetric_group_coefficients() {
    let ring = ClassRing::default();
    let z = ring.kapranov_zeta(&RElement::one(), 4).unwrap();
    for n in 1..=4 {
        let s = ring.generator(&symmetric(n).unwrap()).unwrap();
        assert_eq!(z.coeff(n), &s, "t^{n}");
    }
    let e = ring.kapranov_zeta_euler0(&RElement::integer(3), 5).unwrap();
    // (1 - t)^-3
    let expected: Vec<BigInt> = (0..=5).map(|n| BigInt::from((n + 1) * (n + 2) / 2)).collect();
    assert_eq!(e.coeffs(), expected.as_slice());
}

#[test]
fn zeta_of_a_gset_agrees_with_zeta_of_its_class() {
    let ring = ClassRing::default();
    let s3 = Arc::new(symmetric(3).unwrap());
    let z2 = Arc::new(cyclic(2).unwrap());
    for x in [GSet::natural(s3.clone()).unwrap(), GSet::regular(z2.clone()).disjoint_union(&GSet::point(z2)).unwrap()] {
        let from_set = ring.zeta_of_gset(&x, 2).unwrap();
        let from_class = ring.kapranov_zeta(&ring.class_of(&x).unwrap(), 2).unwrap();
        assert_eq!(from_set.first_mismatch(&from_class), None);
    }
}

fn element(ring: &ClassRing, coeffs: &[i64]) -> RElement {
    let gens = [cyclic(1), cyclic(2), cyclic(3), symmetric(3)];
    let mut out = RElement::zero();
    for (c, g) in coeffs.iter().zip(gens) {
        out = &out + &ring.generator(&g.unwrap()).unwrap().scale(&BigInt::from(*c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ring_axioms(a in prop::collection::vec(-2i64..=2, 4), b in prop::collection::vec(-2i64..=2, 4), c in prop::collection::vec(-2i64..=2, 4)) {
        let ring = ClassRing::default();
        let (a, b, c) = (element(&ring, &a), element(&ring, &b), element(&ring, &c));
        let ab = ring.multiply(&a, &b).unwrap();
        prop_assert_eq!(&ab, &ring.multiply(&b, &a).unwrap());
        prop_assert_eq!(ring.multiply(&ab, &c).unwrap(), ring.multiply(&a, &ring.multiply(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(
            ring.multiply(&a, &(&b + &c)).unwrap(),
            &ab + &ring.multiply(&a, &c).unwrap()
        );
        prop_assert_eq!(ring.euler0(&ab), ring.euler0(&a) * ring.euler0(&b));
    }

    #[test]
    fn inertia_and_euler_characteristics_are_ring_maps(a in prop::collection::vec(-2i64..=2, 4), b in prop::collection::vec(-2i64..=2, 4)) {
        let ring = ClassRing::default();
        let (a, b) = (element(&ring, &a), element(&ring, &b));
        let ab = ring.multiply(&a, &b).unwrap();
        prop_assert_eq!(ring.alpha(&(&a + &b)).unwrap(), &ring.alpha(&a).unwrap() + &ring.alpha(&b).unwrap());
        prop_assert_eq!(ring.alpha(&ab).unwrap(), ring.multiply(&ring.alpha(&a).unwrap(), &ring.alpha(&b).unwrap()).unwrap());
        for k in 0..=2 {
            prop_assert_eq!(ring.chi_k(&ab, k).unwrap(), ring.chi_k(&a, k).unwrap() * ring.chi_k(&b, k).unwrap());
        }
    }
}
