use std::sync::Arc;

use kfgr::groups::{cyclic, dihedral, symmetric, Group, Registry};
use kfgr::gsets::GSet;
use proptest::prelude::*;

fn pool() -> Vec<GSet> {
    let s3 = Arc::new(symmetric(3).unwrap());
    let z4 = Arc::new(cyclic(4).unwrap());
    let d8 = Arc::new(dihedral(8).unwrap());
    let nat = GSet::natural(s3.clone()).unwrap();
    vec![
        GSet::point(s3.clone()),
        GSet::regular(s3.clone()),
        nat.clone(),
        nat.disjoint_union(&GSet::regular(s3.clone())).unwrap(),
        GSet::trivial(z4.clone(), 3),
        GSet::regular(z4),
        GSet::natural(d8.clone()).unwrap(),
        GSet::point(d8),
    ]
}

fn falling(m: usize, n: usize) -> usize {
    (0..n).map(|i| m - i).product()
}

#[test]
fn burnside_counts_orbits() {
    for x in pool() {
        let g = x.group();
        let fixed: usize = g.elements().map(|h| x.fixed_points(h).len()).sum();
        assert_eq!(fixed % g.order(), 0);
        assert_eq!(x.quotient_size(), fixed / g.order());
        assert_eq!(x.orbits().len(), x.quotient_size());
    }
}

#[test]
fn orbit_stabilizer() {
    for x in pool() {
        let g = x.group();
        for orbit in x.orbits() {
            let stab = x.stabilizer_elements(orbit[0]);
            assert_eq!(orbit.len() * stab.len(), g.order());
            assert!(stab.iter().all(|&h| x.act(h, orbit[0]) == orbit[0]));
        }
    }
}

#[test]
fn actions_compose() {
    for x in pool() {
        let g = x.group();
        for a in g.elements() {
            for b in g.elements() {
                for p in 0..x.size() {
                    assert_eq!(x.act(g.mul(a, b), p), x.act(a, x.act(b, p)));
                }
            }
        }
    }
}

#[test]
fn wreath_powers_have_size_m_to_the_n() {
    for x in pool().into_iter().filter(|x| x.group().order() <= 6 && x.size() <= 6) {
        for n in 1..=2 {
            let w = x.power_with_wreath(n).unwrap();
            let g = w.gset();
            assert_eq!(g.size(), x.size().pow(n as u32));
            assert_eq!(g.group().order(), x.group().order().pow(n as u32) * (1..=n).product::<usize>());
            for p in 0..g.size() {
                assert_eq!(w.tuple(p).len(), n);
            }
        }
    }
}

#[test]
fn configuration_gset_keeps_tuples_in_distinct_orbits() {
    let z2 = Arc::new(cyclic(2).unwrap());
    // two free orbits and a fixed point: 5 points in 3 orbits
    let x = GSet::regular(z2.clone())
        .disjoint_union(&GSet::regular(z2.clone()))
        .unwrap()
        .disjoint_union(&GSet::point(z2))
        .unwrap();
    let orbit_sizes = [2usize, 2, 1];
    for n in 1..=3 {
        let c = x.configuration_gset(n).unwrap();
        // sum over injective choices of n orbits of the product of their sizes
        let mut expected = 0;
        let k = orbit_sizes.len();
        for code in 0..k.pow(n as u32) {
            let picks: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
            let distinct = (0..n).all(|i| (i + 1..n).all(|j| picks[i] != picks[j]));
            if distinct {
                expected += picks.iter().map(|&o| orbit_sizes[o]).product::<usize>();
            }
        }
        assert_eq!(c.gset().size(), expected, "n = {n}");
    }
    assert_eq!(x.configuration_gset(4).unwrap().gset().size(), 0);
}

#[test]
fn configuration_gset_of_trivial_action_is_injective_tuples() {
    let e = Arc::new(cyclic(1).unwrap());
    let x = GSet::trivial(e, 4);
    for n in 1..=4 {
        assert_eq!(x.configuration_gset(n).unwrap().gset().size(), falling(4, n));
    }
}

#[test]
fn induction_has_index_times_size_points() {
    let s3 = Arc::new(symmetric(3).unwrap());
    let r = Registry::new();
    for gens in [vec![1usize], vec![]] {
        let elements = s3.closure(&gens);
        let sub = s3.subgroup(&elements);
        let h = Arc::new(sub.group.clone());
        for x in [GSet::point(h.clone()), GSet::regular(h.clone())] {
            let ind = x.induce(&s3, &sub.embedding).unwrap();
            assert_eq!(ind.size(), x.size() * s3.order() / h.order());
            // inducing up preserves the number of orbits
            assert_eq!(ind.quotient_size(), x.quotient_size());
            // the point induces to the coset space S3/H, the regular set to the regular set
            if x.size() == h.order() {
                assert!(ind.equivalent(&GSet::regular(s3.clone()), &r).unwrap());
            }
        }
    }
}

#[test]
fn equivalence_distinguishes_isotropy() {
    let s3 = Arc::new(symmetric(3).unwrap());
    let r = Registry::new();
    let nat = GSet::natural(s3.clone()).unwrap();
    let three_points = GSet::trivial(s3.clone(), 3);
    assert!(!nat.equivalent(&three_points, &r).unwrap());
    assert!(nat.equivalent(&GSet::natural(s3).unwrap(), &r).unwrap());
}

fn small_group(which: usize) -> Group {
    match which {
        0 => cyclic(3),
        1 => symmetric(3),
        2 => cyclic(4),
        _ => dihedral(8),
    }
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disjoint_union_adds_orbits_and_fixed_points(a in 0usize..4, b in 0usize..4, which in 0usize..4) {
        let g = Arc::new(small_group(which));
        let make = |k: usize| match k {
            0 => GSet::point(g.clone()),
            1 => GSet::regular(g.clone()),
            2 => GSet::trivial(g.clone(), 2),
            _ => GSet::regular(g.clone()).disjoint_union(&GSet::point(g.clone())).unwrap(),
        };
        let (x, y) = (make(a), make(b));
        let u = x.disjoint_union(&y).unwrap();
        prop_assert_eq!(u.size(), x.size() + y.size());
        prop_assert_eq!(u.quotient_size(), x.quotient_size() + y.quotient_size());
        for h in g.elements() {
            prop_assert_eq!(u.fixed_points(h).len(), x.fixed_points(h).len() + y.fixed_points(h).len());
        }
    }
}
