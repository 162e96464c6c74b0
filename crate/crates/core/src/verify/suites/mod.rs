mod algebra;
mod identities;
mod structure;

pub(super) use algebra::{axioms, homomorphism};
pub(super) use identities::{alpha_zeta, macdonald};
pub(super) use structure::{induction, oracle, wreath_structure};

use num_bigint::BigInt;
use serde_json::Value;

use crate::class_ring::{ClassRing, RElement};
use crate::series::{Integers, TruncSeries};

fn int_series(coeffs: &[i64], trunc: usize) -> TruncSeries<BigInt> {
    TruncSeries::new(&Integers, coeffs.iter().map(|&c| BigInt::from(c)).collect(), trunc)
}

fn render_z(s: &TruncSeries<BigInt>) -> Value {
    Value::from(s.render(&Integers))
}

/// `|G|^n * n!`, saturating.
fn wreath_order(base: usize, n: usize) -> u128 {
    crate::limits::saturating_pow(base, n).saturating_mul(crate::limits::factorial(n))
}

/// Largest `n <= want` such that every wreath power `G_n` of the classes in
/// `a` has order at most `max_order`.
fn feasible_trunc(ring: &ClassRing, a: &RElement, want: usize, max_order: usize) -> usize {
    let orders: Vec<usize> = a.terms().keys().map(|&id| ring.registry().order(id)).collect();
    (0..=want)
        .rev()
        .find(|&n| n == 0 || orders.iter().all(|&m| wreath_order(m, n) <= max_order as u128))
        .unwrap_or(0)
}
