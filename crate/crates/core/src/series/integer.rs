use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lambda::binomial_series;
use super::ring::Integers;
use super::trunc::TruncSeries;

/// Sign convention for the exponents in [`macdonald_series`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExponentSign {
    #[default]
    Negative,
    Positive,
}

impl ExponentSign {
    pub fn value(self) -> i64 {
        match self {
            ExponentSign::Negative => -1,
            ExponentSign::Positive => 1,
        }
    }

    pub fn from_value(v: i64) -> Option<ExponentSign> {
        match v {
            -1 => Some(ExponentSign::Negative),
            1 => Some(ExponentSign::Positive),
            _ => None,
        }
    }
}

/// `A(t)^m` over the integers by the configuration-space count: the
/// coefficient of `t^k` sums, over `(k_i)` with `sum i k_i = k`,
/// `prod a_i^{k_i} * m(m-1)...(m-K+1) / prod k_i!` where `K = sum k_i`.
pub fn geometric_pow_int(a: &TruncSeries<BigInt>, m: &BigInt) -> crate::Result<TruncSeries<BigInt>> {
    if !a.coeff(0).is_one() {
        return Err(crate::Error::NonUnitConstant);
    }
    let n = a.trunc();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut parts = vec![0usize; n + 1];
    for (k, c) in coeffs.iter_mut().enumerate() {
        *c = partitions_sum(a, m, k, 1, &mut parts);
    }
    Ok(TruncSeries::new(&Integers, coeffs, n))
}

/// Sum over multiplicity vectors of `remaining` using parts `>= part`.
fn partitions_sum(a: &TruncSeries<BigInt>, m: &BigInt, remaining: usize, part: usize, parts: &mut [usize]) -> BigInt {
    if remaining == 0 {
        return term(a, m, parts);
    }
    if part > remaining {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    let mut k = 0;
    while k * part <= remaining {
        parts[part] = k;
        total += partitions_sum(a, m, remaining - k * part, part + 1, parts);
        k += 1;
    }
    parts[part] = 0;
    total
}

fn term(a: &TruncSeries<BigInt>, m: &BigInt, parts: &[usize]) -> BigInt {
    let mut prod = BigInt::one();
    let mut big_k = 0usize;
    let mut denom = BigInt::one();
    for (i, &k) in parts.iter().enumerate().skip(1) {
        if k == 0 {
            continue;
        }
        prod *= num_traits::pow(a.coeff(i).clone(), k);
        big_k += k;
        denom *= factorial(k);
    }
    let mut falling = BigInt::one();
    for j in 0..big_k {
        falling *= m - j;
    }
    prod * falling / denom
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// The product over `r_1, ..., r_k >= 1` with `r_1 ... r_k <= trunc` of
/// `(1 - t^{r_1 ... r_k})^{sign * e * r_2 r_3^2 ... r_k^{k-1}}`.
///
/// For `k = 0` this is `(1 - t)^{sign * e}`.
pub fn macdonald_series(k: usize, e: &BigInt, trunc: usize, sign: ExponentSign) -> TruncSeries<BigInt> {
    let s = BigInt::from(sign.value());
    if k == 0 {
        return binomial_series(&(&s * e), -1, trunc);
    }
    // total exponent weight per product r_1...r_k
    let mut weights: BTreeMap<usize, BigInt> = BTreeMap::new();
    collect_weights(k, 0, 1, BigInt::one(), trunc, &mut weights);
    let mut acc = TruncSeries::one(&Integers, trunc);
    for (p, w) in weights {
        let exp = &s * e * w;
        let factor = binomial_series(&exp, -1, trunc / p);
        let factor = TruncSeries::new(&Integers, factor.coeffs().to_vec(), trunc).substitute(&Integers, p);
        acc = acc.mul(&Integers, &factor).expect("integer multiplication");
    }
    acc
}

fn collect_weights(k: usize, i: usize, product: usize, weight: BigInt, trunc: usize, out: &mut BTreeMap<usize, BigInt>) {
    if i == k {
        *out.entry(product).or_default() += weight;
        return;
    }
    let mut r = 1;
    while product * r <= trunc {
        let w = &weight * num_traits::pow(BigInt::from(r), i);
        collect_weights(k, i + 1, product * r, w, trunc, out);
        r += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64], n: usize) -> TruncSeries<BigInt> {
        TruncSeries::new(&Integers, v.iter().map(|&x| BigInt::from(x)).collect(), n)
    }

    #[test]
    fn geometric_pow_examples() {
        let p = geometric_pow_int(&z(&[1, 1], 4), &BigInt::from(3)).unwrap();
        assert_eq!(p, z(&[1, 3, 3, 1], 4));
        let p = geometric_pow_int(&z(&[1, 2, 3], 2), &BigInt::from(2)).unwrap();
        assert_eq!(p.coeff(2), &BigInt::from(10));
        let p = geometric_pow_int(&z(&[1, 1], 4), &BigInt::from(-1)).unwrap();
        assert_eq!(p, z(&[1, -1, 1, -1, 1], 4));
    }

    #[test]
    fn macdonald_small_cases() {
        let one = BigInt::from(1);
        assert_eq!(macdonald_series(0, &one, 3, ExponentSign::Negative), z(&[1, 1, 1, 1], 3));
        let p = macdonald_series(1, &one, 6, ExponentSign::Negative);
        assert_eq!(p, z(&[1, 1, 2, 3, 5, 7, 11], 6));
        let m2 = macdonald_series(2, &one, 2, ExponentSign::Negative);
        assert_eq!(m2, z(&[1, 1, 4], 2));
        let plus = macdonald_series(1, &one, 2, ExponentSign::Positive);
        assert_eq!(plus, z(&[1, -1, -1], 2));
    }
}
