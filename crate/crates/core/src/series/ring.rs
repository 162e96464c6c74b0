use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::Result;

/// An exact commutative ring with unit.
///
/// Multiplication is fallible because some rings (the class ring) classify
/// products through an isomorphism search that may hit a resource limit.
pub trait CoefficientRing {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, n: &BigInt) -> Self::Elem;
    /// Short name used in JSON output.
    fn tag(&self) -> &'static str;
    fn render(&self, a: &Self::Elem) -> String;
    fn to_json(&self, a: &Self::Elem) -> Value;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// `n * a` by doubling, without going through ring multiplication.
    fn scale(&self, n: &BigInt, a: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = if n.is_negative() { self.neg(a) } else { a.clone() };
        let mut k = n.abs();
        while !k.is_zero() {
            if (&k & BigInt::one()).is_one() {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }
}

pub(crate) fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl CoefficientRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        Ok(a * b)
    }
    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn tag(&self) -> &'static str {
        "Z"
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn to_json(&self, a: &BigInt) -> Value {
        bigint_json(a)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn scale(&self, n: &BigInt, a: &BigInt) -> BigInt {
        n * a
    }
}

/// Polynomial in `u`, `v` with integer coefficients, keyed by exponent pair.
/// Zero coefficients are never stored.
pub type BiPoly = BTreeMap<(u32, u32), BigInt>;

/// `Z[u, v]`, standing in for the image of a Grothendieck ring under a
/// two-variable polynomial invariant.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bivariate;

impl Bivariate {
    pub fn monomial(&self, c: impl Into<BigInt>, i: u32, j: u32) -> BiPoly {
        let c = c.into();
        let mut p = BiPoly::new();
        if !c.is_zero() {
            p.insert((i, j), c);
        }
        p
    }
}

impl CoefficientRing for Bivariate {
    type Elem = BiPoly;

    fn zero(&self) -> BiPoly {
        BiPoly::new()
    }
    fn one(&self) -> BiPoly {
        self.monomial(1, 0, 0)
    }
    fn add(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        let mut out = a.clone();
        for (k, c) in b {
            let e = out.entry(*k).or_default();
            *e += c;
            if e.is_zero() {
                out.remove(k);
            }
        }
        out
    }
    fn neg(&self, a: &BiPoly) -> BiPoly {
        a.iter().map(|(k, c)| (*k, -c)).collect()
    }
    fn mul(&self, a: &BiPoly, b: &BiPoly) -> Result<BiPoly> {
        let mut out = BiPoly::new();
        for ((i1, j1), c1) in a {
            for ((i2, j2), c2) in b {
                *out.entry((i1 + i2, j1 + j2)).or_default() += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
    fn from_integer(&self, n: &BigInt) -> BiPoly {
        self.monomial(n.clone(), 0, 0)
    }
    fn tag(&self) -> &'static str {
        "Z[u,v]"
    }
    fn render(&self, a: &BiPoly) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = a
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let mono = [("u", i), ("v", j)]
                    .iter()
                    .filter(|(_, e)| *e > 0)
                    .map(|(x, e)| if *e == 1 { x.to_string() } else { format!("{x}^{e}") })
                    .collect::<Vec<_>>()
                    .join("*");
                match (mono.is_empty(), c.is_one(), (-c).is_one()) {
                    (true, _, _) => c.to_string(),
                    (false, true, _) => mono,
                    (false, _, true) => format!("-{mono}"),
                    _ => format!("{c}*{mono}"),
                }
            })
            .collect();
        terms.join(" + ").replace("+ -", "- ")
    }
    fn to_json(&self, a: &BiPoly) -> Value {
        Value::Array(
            a.iter()
                .map(|(&(i, j), c)| serde_json::json!({"u": i, "v": j, "coeff": bigint_json(c)}))
                .collect(),
        )
    }
    fn is_zero(&self, a: &BiPoly) -> bool {
        a.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scale_by_doubling() {
        let r = Bivariate;
        let uv = r.monomial(1, 1, 1);
        assert_eq!(r.scale(&BigInt::from(-5), &uv), r.monomial(-5, 1, 1));
        assert_eq!(r.scale(&BigInt::zero(), &uv), r.zero());
    }

    #[test]
    fn bivariate_product_cancels() {
        let r = Bivariate;
        let a = r.add(&r.monomial(1, 1, 0), &r.one());
        let b = r.add(&r.monomial(1, 1, 0), &r.monomial(-1, 0, 0));
        let p = r.mul(&a, &b).unwrap();
        assert_eq!(p, r.add(&r.monomial(1, 2, 0), &r.monomial(-1, 0, 0)));
        assert_eq!(r.render(&p), "u^2 - 1");
    }
}
