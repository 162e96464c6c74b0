//! Kapranov zeta functions of G-sets and their Euler characteristic images.

use std::sync::Arc;

use kfgr::class_ring::{ClassRing, RElement};
use kfgr::groups::{cyclic, symmetric};
use kfgr::gsets::GSet;
use kfgr::series::Integers;

fn main() -> kfgr::Result<()> {
    let ring = ClassRing::default();

    let z = ring.kapranov_zeta(&RElement::one(), 4)?;
    println!("zeta_1 = {}", z.render(&ring));

    let swap = GSet::regular(Arc::new(cyclic(2)?));
    let zs = ring.zeta_of_gset(&swap, 3)?;
    println!("zeta of Z2 on 2 points = {}", zs.render(&ring));
    let euler = zs.map_coefficients(|c| Ok(ring.euler0(c)))?;
    println!("  euler0 image = {}", euler.render(&Integers));

    // beyond the table cap the euler0 image is still available
    let t_s3 = ring.generator(&symmetric(3)?)?;
    println!("euler0(zeta_T[S3]) = {}", ring.kapranov_zeta_euler0(&t_s3, 8)?.render(&Integers));

    let conf = ring.config_lambda_series(&swap.disjoint_union(&GSet::point(swap.group().clone()))?, 3)?;
    println!("configuration series = {}", conf.render(&ring));
    Ok(())
}
