//! Power structures over the integers and Z[u, v].

use kfgr::series::{lambda_factorize, power_pow, Bivariate, BivariateZeta, CoefficientRing, IntegerConfig, IntegerZeta, Integers, TruncSeries};
use num_bigint::BigInt;

fn main() -> kfgr::Result<()> {
    let n = 8;
    let ints = |v: &[i64]| TruncSeries::new(&Integers, v.iter().map(|&x| BigInt::from(x)).collect(), n);

    // 1 + t + t^2 + ... raised to m in both power structures
    let geometric = ints(&[1; 9]);
    for m in [-1i64, 2, 3] {
        let m = BigInt::from(m);
        println!("zeta:   (1/(1-t))^{m} = {}", power_pow(&geometric, &m, &IntegerZeta)?.render(&Integers));
        println!("config: (1/(1-t))^{m} = {}", power_pow(&geometric, &m, &IntegerConfig)?.render(&Integers));
    }

    // the partition series factors as prod (1 - t^k)^-1
    let partitions = ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22]);
    let b = lambda_factorize(&partitions, &IntegerZeta)?;
    println!("exponents of the partition series: {}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));

    let r = Bivariate;
    let a = TruncSeries::new(&r, vec![r.one(), r.add(&r.monomial(1, 1, 0), &r.monomial(1, 0, 1))], 4);
    let cube = power_pow(&a, &r.from_integer(&BigInt::from(3)), &BivariateZeta)?;
    println!("(1 + (u+v) t)^3 over Z[u,v] = {}", cube.render(&r));
    Ok(())
}
