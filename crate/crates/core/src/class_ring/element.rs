use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::groups::GroupClassId;

/// A finite integer combination of generators `T^[G]`, keyed by class id.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RElement {
    terms: BTreeMap<GroupClassId, BigInt>,
}

impl RElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `T^[e]`, the class of a point with the trivial group.
    pub fn one() -> Self {
        Self::generator(GroupClassId::TRIVIAL)
    }

    pub fn generator(id: GroupClassId) -> Self {
        Self::term(id, BigInt::one())
    }

    pub fn term(id: GroupClassId, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(id, &coeff.into());
        out
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::term(GroupClassId::TRIVIAL, n)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupClassId, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (id, c) in terms {
            out.add_term(id, &c);
        }
        out
    }

    pub fn add_term(&mut self, id: GroupClassId, coeff: &BigInt) {
        let e = self.terms.entry(id).or_default();
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&id);
        }
    }

    pub fn terms(&self) -> &BTreeMap<GroupClassId, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, id: GroupClassId) -> BigInt {
        self.terms.get(&id).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        RElement {
            terms: self.terms.iter().map(|(&id, c)| (id, c * n)).collect(),
        }
    }

    /// Sum of coefficients: the number of orbits of any finite G-set with
    /// this class.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &RElement {
    type Output = RElement;
    fn add(self, rhs: &RElement) -> RElement {
        let mut out = self.clone();
        for (&id, c) in &rhs.terms {
            out.add_term(id, c);
        }
        out
    }
}

impl Neg for &RElement {
    type Output = RElement;
    fn neg(self) -> RElement {
        RElement {
            terms: self.terms.iter().map(|(&id, c)| (id, -c)).collect(),
        }
    }
}

impl Sub for &RElement {
    type Output = RElement;
    fn sub(self, rhs: &RElement) -> RElement {
        self + &(-rhs)
    }
}
