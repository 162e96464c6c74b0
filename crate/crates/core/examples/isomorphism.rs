//! Isomorphism search between permutation and product presentations.

use kfgr::groups::{are_isomorphic, are_isomorphic_with_budget, cyclic, dihedral, direct_product, is_homomorphism, symmetric};

fn main() -> kfgr::Result<()> {
    let pairs = [
        ("C2 x C3", direct_product(&cyclic(2)?, &cyclic(3)?)?, "C6", cyclic(6)?),
        ("S3 x C2", direct_product(&symmetric(3)?, &cyclic(2)?)?, "D12", dihedral(12)?),
        ("C4 x C2", direct_product(&cyclic(4)?, &cyclic(2)?)?, "D8", dihedral(8)?),
    ];
    for (na, a, nb, b) in &pairs {
        match are_isomorphic(a, b)? {
            Some(phi) => println!("{na} ~ {nb}, map checked: {}", is_homomorphism(a, b, &phi)),
            None => println!("{na} and {nb} are not isomorphic"),
        }
    }

    // a search that runs out of budget reports that, never a false negative
    let s4 = symmetric(4)?;
    match are_isomorphic_with_budget(&s4, &s4, 0) {
        Err(e) => println!("budget 0: {e}"),
        Ok(r) => println!("budget 0: {:?}", r.is_some()),
    }
    Ok(())
}
