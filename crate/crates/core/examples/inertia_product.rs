//! The higher inertia maps alpha_r respect sums but not products for r >= 2.

use kfgr::class_ring::{ClassRing, RElement};
use kfgr::groups::{cyclic, symmetric};

fn main() -> kfgr::Result<()> {
    let ring = ClassRing::default();
    let one = RElement::one();
    let t_s3 = ring.generator(&symmetric(3)?)?;
    let t_c2 = ring.generator(&cyclic(2)?)?;
    for r in 1..=3 {
        let prod = ring.multiply(&t_s3, &t_c2)?;
        let lhs = ring.alpha_r(&prod, r)?;
        let rhs = ring.multiply(&ring.alpha_r(&t_s3, r)?, &ring.alpha_r(&t_c2, r)?)?;
        let sum = ring.alpha_r(&(&t_s3 + &t_c2), r)?;
        let split = &ring.alpha_r(&t_s3, r)? + &ring.alpha_r(&t_c2, r)?;
        println!("r = {r}");
        println!("  alpha_r(1)           = {}", ring.render_element(&ring.alpha_r(&one, r)?));
        println!("  additive             : {}", sum == split);
        println!("  alpha_r(ab)          = {}", ring.render_element(&lhs));
        println!("  alpha_r(a)alpha_r(b) = {}", ring.render_element(&rhs));
    }
    Ok(())
}
