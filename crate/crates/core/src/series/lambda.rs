use num_bigint::BigInt;

use super::ring::{BiPoly, Bivariate, CoefficientRing, Integers};
use super::trunc::TruncSeries;
use crate::error::Result;

type Elem<L> = <<L as LambdaStructure>::Ring as CoefficientRing>::Elem;

/// An additive-to-multiplicative map `a -> lambda_a(t) = 1 + a t + ...`.
pub trait LambdaStructure {
    type Ring: CoefficientRing;

    fn ring(&self) -> &Self::Ring;

    fn lambda(&self, a: &Elem<Self>, trunc: usize) -> Result<TruncSeries<Elem<Self>>>;
}

/// The exponents `b_1..b_N` with `A(t) = prod_k lambda_{b_k}(t^k)` mod `t^{N+1}`.
/// Index `k - 1` of the result holds `b_k`.
pub fn lambda_factorize<L: LambdaStructure>(a: &TruncSeries<Elem<L>>, lambda: &L) -> Result<Vec<Elem<L>>> {
    let ring = lambda.ring();
    if *a.coeff(0) != ring.one() {
        return Err(crate::Error::NonUnitConstant);
    }
    let n = a.trunc();
    let mut rest = a.clone();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let b = rest.coeff(k).clone();
        if !ring.is_zero(&b) {
            let factor = lambda.lambda(&b, n / k)?;
            let factor = TruncSeries::new(ring, factor.coeffs().to_vec(), n).substitute(ring, k);
            rest = rest.mul(ring, &factor.reciprocal(ring)?)?;
        }
        out.push(b);
    }
    Ok(out)
}

/// `prod_k lambda_{b_k}(t^k)` truncated at `trunc`.
pub fn lambda_reconstruct<L: LambdaStructure>(
    exponents: &[Elem<L>],
    lambda: &L,
    trunc: usize,
) -> Result<TruncSeries<Elem<L>>> {
    let ring = lambda.ring();
    let mut acc = TruncSeries::one(ring, trunc);
    for (i, b) in exponents.iter().enumerate() {
        let k = i + 1;
        if k > trunc || ring.is_zero(b) {
            continue;
        }
        let factor = lambda.lambda(b, trunc / k)?;
        let factor = TruncSeries::new(ring, factor.coeffs().to_vec(), trunc).substitute(ring, k);
        acc = acc.mul(ring, &factor)?;
    }
    Ok(acc)
}

/// `A(t)^m` in the power structure induced by `lambda`.
pub fn power_pow<L: LambdaStructure>(a: &TruncSeries<Elem<L>>, m: &Elem<L>, lambda: &L) -> Result<TruncSeries<Elem<L>>> {
    let ring = lambda.ring();
    let scaled = lambda_factorize(a, lambda)?
        .iter()
        .map(|b| ring.mul(m, b))
        .collect::<Result<Vec<_>>>()?;
    lambda_reconstruct(&scaled, lambda, a.trunc())
}

/// `(1 + sign * t)^e` over the integers, for any integer `e`.
pub fn binomial_series(e: &BigInt, sign: i32, trunc: usize) -> TruncSeries<BigInt> {
    let mut coeffs = Vec::with_capacity(trunc + 1);
    let mut c = BigInt::from(1);
    for i in 0..=trunc {
        coeffs.push(c.clone());
        // C(e, i+1) = C(e, i) * (e - i) / (i + 1)
        c = c * (e - i) * sign / (i + 1);
    }
    TruncSeries::new(&Integers, coeffs, trunc)
}

/// `lambda_n = (1 - t)^{-n}` on the integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegerZeta;

impl LambdaStructure for IntegerZeta {
    type Ring = Integers;
    fn ring(&self) -> &Integers {
        &Integers
    }
    fn lambda(&self, a: &BigInt, trunc: usize) -> Result<TruncSeries<BigInt>> {
        Ok(binomial_series(&-a, -1, trunc))
    }
}

/// `lambda_n = (1 + t)^n` on the integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegerConfig;

impl LambdaStructure for IntegerConfig {
    type Ring = Integers;
    fn ring(&self) -> &Integers {
        &Integers
    }
    fn lambda(&self, a: &BigInt, trunc: usize) -> Result<TruncSeries<BigInt>> {
        Ok(binomial_series(a, 1, trunc))
    }
}

/// On `Z[u, v]`: a monomial `w` goes to `1/(1 - w t)`, extended
/// additively-to-multiplicatively, so `lambda_a = prod_w (1 - w t)^{-c_w}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BivariateZeta;

impl LambdaStructure for BivariateZeta {
    type Ring = Bivariate;
    fn ring(&self) -> &Bivariate {
        &Bivariate
    }
    fn lambda(&self, a: &BiPoly, trunc: usize) -> Result<TruncSeries<BiPoly>> {
        let r = Bivariate;
        let mut acc = TruncSeries::one(&r, trunc);
        for (&(i, j), c) in a {
            let coeffs = binomial_series(&-c, -1, trunc)
                .coeffs()
                .iter()
                .enumerate()
                .map(|(p, b)| r.monomial(b.clone(), i * p as u32, j * p as u32))
                .collect();
            acc = acc.mul(&r, &TruncSeries::new(&r, coeffs, trunc))?;
        }
        Ok(acc)
    }
}
