//! Finite G-sets: orbits, isotropy, induction and wreath powers.

use std::sync::Arc;

use kfgr::groups::{cyclic, symmetric, Registry};
use kfgr::gsets::GSet;
use kfgr::io::parse_gset;

fn main() -> kfgr::Result<()> {
    let registry = Registry::new();
    let s3 = Arc::new(symmetric(3)?);

    // S3 on {0, 1, 2} given by generator permutations in JSON
    let nat = parse_gset(r#"{"group": "S3", "action": [[1, 0, 2], [1, 2, 0]]}"#)?;
    let x = nat.disjoint_union(&GSet::point(nat.group().clone()))?;
    println!("points {}, orbits {:?}", x.size(), x.orbits());
    for (h, points) in x.isotropy_strata(&registry)? {
        println!("  isotropy {} on points {points:?}", registry.name(h));
    }

    // induce the regular action of C3 up to S3
    let c3 = s3.subgroup(&s3.closure(&[s3.generators()[1]]));
    let ind = GSet::regular(Arc::new(c3.group.clone())).induce(&s3, &c3.embedding)?;
    println!("induced from C3: {} points, regular: {}", ind.size(), ind.equivalent(&GSet::regular(s3.clone()), &registry)?);

    // X^2 with the action of Z2 wr S2
    let swap = GSet::regular(Arc::new(cyclic(2)?));
    let sq = swap.power_with_wreath(2)?;
    println!("(Z2 on 2 points)^2: {} points, group order {}", sq.gset().size(), sq.gset().group().order());
    let conf = swap.disjoint_union(&GSet::point(swap.group().clone()))?.configuration_gset(2)?;
    println!("configuration pairs in distinct orbits: {}", conf.gset().size());
    Ok(())
}
