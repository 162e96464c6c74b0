//! Arithmetic with classes T[G] and the inertia maps.

use std::sync::Arc;

use kfgr::class_ring::{chi_k_gset, ClassRing};
use kfgr::groups::{cyclic, symmetric};
use kfgr::gsets::GSet;

fn main() -> kfgr::Result<()> {
    let ring = ClassRing::default();
    let s3 = Arc::new(symmetric(3)?);
    let t_s3 = ring.generator(&s3)?;
    let t_c2 = ring.generator(&cyclic(2)?)?;

    let x = GSet::natural(s3.clone())?.disjoint_union(&GSet::point(s3.clone()))?;
    let class = ring.class_of(&x)?;
    println!("[X] = {}", ring.render_element(&class));
    println!("T[S3] * T[C2] = {}", ring.render_element(&ring.multiply(&t_s3, &t_c2)?));

    let mut a = t_s3.clone();
    for k in 1..=3 {
        a = ring.alpha(&a)?;
        println!("alpha^{k}(T[S3]) = {}", ring.render_element(&a));
    }
    for k in 0..=3 {
        println!("chi^({k})(X) = {} = {}", ring.chi_k(&class, k)?, chi_k_gset(&x, k));
    }
    for r in 1..=3 {
        println!("alpha_{r}(T[S3]) = {}", ring.render_element(&ring.alpha_r(&t_s3, r)?));
    }
    Ok(())
}
