//! Generating series of chi^(k) over symmetric powers compared with the
//! closed product formula.

use std::sync::Arc;

use kfgr::class_ring::chi_k_gset;
use kfgr::groups::cyclic;
use kfgr::gsets::GSet;
use kfgr::series::{macdonald_series, ExponentSign, Integers, TruncSeries};
use num_bigint::BigInt;

fn main() -> kfgr::Result<()> {
    let swap = GSet::regular(Arc::new(cyclic(2)?));
    let x = swap.disjoint_union(&GSet::point(swap.group().clone()))?;
    let n = 3;
    for k in 0..=2 {
        let e = chi_k_gset(&x, k);
        let mut coeffs = vec![BigInt::from(1)];
        for m in 1..=n {
            coeffs.push(chi_k_gset(x.power_with_wreath(m)?.gset(), k));
        }
        let direct = TruncSeries::new(&Integers, coeffs, n);
        let formula = macdonald_series(k, &e, n, ExponentSign::Negative);
        let flipped = macdonald_series(k, &e, n, ExponentSign::Positive);
        println!("k = {k}, chi^(k)(X) = {e}");
        println!("  direct  {}", direct.render(&Integers));
        println!("  formula {}", formula.render(&Integers));
        println!("  positive exponent first differs at t^{:?}", direct.first_mismatch(&flipped));
    }
    Ok(())
}
