use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use super::ring::CoefficientRing;
use crate::error::{Error, Result};

/// Power series `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
///
/// The ring is passed to each operation rather than stored, so series over the
/// class ring stay plain data. Binary operations on series of different
/// truncation orders truncate to the smaller one.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> TruncSeries<E> {
    /// Pads with zeros or drops terms so that exactly `c_0..=c_trunc` remain.
    pub fn new<R: CoefficientRing<Elem = E>>(ring: &R, mut coeffs: Vec<E>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, ring.zero());
        TruncSeries { coeffs }
    }

    pub fn one<R: CoefficientRing<Elem = E>>(ring: &R, trunc: usize) -> Self {
        Self::new(ring, vec![ring.one()], trunc)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &E {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn truncate_to(&self, trunc: usize) -> Self {
        assert!(trunc <= self.trunc(), "cannot extend a truncated series");
        TruncSeries {
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    pub fn add<R: CoefficientRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let n = self.trunc().min(other.trunc());
        TruncSeries {
            coeffs: (0..=n).map(|i| ring.add(&self.coeffs[i], &other.coeffs[i])).collect(),
        }
    }

    pub fn neg<R: CoefficientRing<Elem = E>>(&self, ring: &R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect(),
        }
    }

    pub fn sub<R: CoefficientRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul<R: CoefficientRing<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        let n = self.trunc().min(other.trunc());
        let mut out = vec![ring.zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if ring.is_zero(b) {
                    continue;
                }
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b)?);
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Multiplicative inverse; needs `c_0 = 1`.
    pub fn reciprocal<R: CoefficientRing<Elem = E>>(&self, ring: &R) -> Result<Self> {
        if self.coeffs[0] != ring.one() {
            return Err(Error::NonUnitConstant);
        }
        let n = self.trunc();
        let mut out = vec![ring.one()];
        for k in 1..=n {
            let mut acc = ring.zero();
            for i in 1..=k {
                if ring.is_zero(&self.coeffs[i]) || ring.is_zero(&out[k - i]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&self.coeffs[i], &out[k - i])?);
            }
            out.push(ring.neg(&acc));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `A(t^k)` for `k >= 1`.
    pub fn substitute<R: CoefficientRing<Elem = E>>(&self, ring: &R, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let n = self.trunc();
        let mut out = vec![ring.zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            out[i * k] = c.clone();
        }
        TruncSeries { coeffs: out }
    }

    /// `A^m` for any integer `m`; negative powers go through the reciprocal.
    pub fn int_pow<R: CoefficientRing<Elem = E>>(&self, ring: &R, m: &BigInt) -> Result<Self> {
        let base = if m.sign() == num_bigint::Sign::Minus {
            self.reciprocal(ring)?
        } else {
            self.clone()
        };
        let mut e = num_traits::Signed::abs(m);
        let mut acc = Self::one(ring, self.trunc());
        let mut sq = base;
        let zero = BigInt::from(0);
        while e > zero {
            if (&e & BigInt::one()).is_one() {
                acc = acc.mul(ring, &sq)?;
            }
            e >>= 1;
            if e > zero {
                sq = sq.mul(ring, &sq)?;
            }
        }
        Ok(acc)
    }

    /// Applies a ring homomorphism to every coefficient.
    pub fn map_coefficients<F, E2>(&self, mut f: F) -> Result<TruncSeries<E2>>
    where
        F: FnMut(&E) -> Result<E2>,
    {
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().map(&mut f).collect::<Result<_>>()?,
        })
    }

    /// Lowest index where the two series differ, comparing up to the smaller
    /// truncation order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.trunc().min(other.trunc());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    pub fn render<R: CoefficientRing<Elem = E>>(&self, ring: &R) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let mut s = ring.render(c);
            if i > 0 {
                if s.contains(' ') {
                    s = format!("({s})");
                }
                s = match (s.as_str(), i) {
                    ("1", 1) => "t".into(),
                    ("1", _) => format!("t^{i}"),
                    ("-1", 1) => "-t".into(),
                    ("-1", _) => format!("-t^{i}"),
                    (_, 1) => format!("{s}*t"),
                    _ => format!("{s}*t^{i}"),
                };
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&s);
        }
        if out.is_empty() {
            out.push('0');
        }
        let mut out = out.replace(" + -", " - ");
        let _ = write!(out, " + O(t^{})", self.trunc() + 1);
        out
    }

    pub fn to_json<R: CoefficientRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "ring": ring.tag(),
            "trunc": self.trunc(),
            "coeffs": self.coeffs.iter().map(|c| ring.to_json(c)).collect::<Vec<_>>(),
        })
    }
}
