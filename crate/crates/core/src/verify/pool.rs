use std::sync::Arc;

use crate::groups::{cyclic, dihedral, direct_product, symmetric, Group};
use crate::gsets::GSet;

/// The default group pool with report names, restricted to `order <= max_order`.
pub fn pool_groups(max_order: usize) -> Vec<(String, Arc<Group>)> {
    let z2 = cyclic(2).expect("small group");
    let groups = vec![
        ("e", cyclic(1)),
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z2xZ2", direct_product(&z2, &z2)),
        ("S3", symmetric(3)),
        ("Z6", cyclic(6)),
        ("D8", dihedral(8)),
        ("S4", symmetric(4)),
    ];
    groups
        .into_iter()
        .map(|(n, g)| (n.to_string(), Arc::new(g.expect("pool group builds"))))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

pub(crate) fn pool_group(name: &str) -> Arc<Group> {
    pool_groups(usize::MAX)
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g)
        .expect("known pool group")
}

/// The default G-set pool: a point and the regular action for every pool
/// group, the swap action of Z2, S3 on three points, and disjoint unions.
pub fn pool_gsets(max_order: usize) -> Vec<(String, GSet)> {
    let mut out = Vec::new();
    for (name, g) in pool_groups(max_order) {
        out.push((format!("pt/{name}"), GSet::point(g.clone())));
        if g.order() > 1 {
            out.push((format!("reg/{name}"), GSet::regular(g)));
        }
    }
    let z2 = pool_group("Z2");
    let swap = GSet::build(z2.clone(), &[vec![1, 0]]).expect("swap action");
    out.push(("swap/Z2".into(), swap.clone()));
    out.push((
        "swap+pt/Z2".into(),
        swap.disjoint_union(&GSet::point(z2)).expect("same group"),
    ));
    if max_order >= 6 {
        let s3 = pool_group("S3");
        let nat = GSet::natural(s3.clone()).expect("permutation group");
        out.push(("nat/S3".into(), nat.clone()));
        out.push((
            "nat+pt/S3".into(),
            nat.disjoint_union(&GSet::point(s3.clone())).expect("same group"),
        ));
        out.push((
            "nat+reg/S3".into(),
            nat.disjoint_union(&GSet::regular(s3)).expect("same group"),
        ));
    }
    out
}
