//! The ring of classes of finite G-sets: the free abelian group on
//! isomorphism classes of finite groups `T^[G]`, with `T^[G] T^[H] = T^[G x H]`.

mod element;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use element::RElement;

use crate::error::Result;
use crate::groups::{adjoined_root_extension, direct_product, wreath_product, Group, GroupClassId, Registry};
use crate::gsets::GSet;
use crate::series::{bigint_json, CoefficientRing, LambdaStructure, TruncSeries};

/// Ring operations on [`RElement`]s backed by a shared [`Registry`].
///
/// Products of generators, inertia images and wreath classes are memoized.
pub struct ClassRing {
    registry: Arc<Registry>,
    products: Mutex<HashMap<(GroupClassId, GroupClassId), GroupClassId>>,
    alpha: Mutex<HashMap<(GroupClassId, usize), RElement>>,
    wreath: Mutex<HashMap<(GroupClassId, usize), GroupClassId>>,
}

impl Default for ClassRing {
    fn default() -> Self {
        Self::new(Arc::new(Registry::new()))
    }
}

impl ClassRing {
    pub fn new(registry: Arc<Registry>) -> Self {
        ClassRing {
            registry,
            products: Mutex::default(),
            alpha: Mutex::default(),
            wreath: Mutex::default(),
        }
    }

    pub fn registry(&self) -> &Arc<Registry> {
        &self.registry
    }

    pub fn class_id(&self, g: &Group) -> Result<GroupClassId> {
        self.registry.canonical_class(g)
    }

    /// `T^[G]`.
    pub fn generator(&self, g: &Group) -> Result<RElement> {
        Ok(RElement::generator(self.class_id(g)?))
    }

    fn product_id(&self, a: GroupClassId, b: GroupClassId) -> Result<GroupClassId> {
        if a == GroupClassId::TRIVIAL {
            return Ok(b);
        }
        if b == GroupClassId::TRIVIAL {
            return Ok(a);
        }
        let key = (a.min(b), a.max(b));
        if let Some(&id) = self.products.lock().unwrap().get(&key) {
            return Ok(id);
        }
        let g = direct_product(&self.registry.representative(key.0), &self.registry.representative(key.1))?;
        let id = self.registry.canonical_class(&g)?;
        self.products.lock().unwrap().insert(key, id);
        Ok(id)
    }

    pub fn multiply(&self, a: &RElement, b: &RElement) -> Result<RElement> {
        let mut out = RElement::zero();
        for (&x, cx) in a.terms() {
            for (&y, cy) in b.terms() {
                out.add_term(self.product_id(x, y)?, &(cx * cy));
            }
        }
        Ok(out)
    }

    /// Sum over orbits of the class of a point stabilizer.
    pub fn class_of(&self, x: &GSet) -> Result<RElement> {
        let mut out = RElement::zero();
        for (_, id) in x.orbit_signature(&self.registry)? {
            out.add_term(id, &BigInt::one());
        }
        Ok(out)
    }

    /// `chi^(0)`: the Euler characteristic of the orbit space.
    pub fn euler0(&self, a: &RElement) -> BigInt {
        a.coefficient_sum()
    }

    /// The inertia map: `T^[G] -> sum over classes [g] of T^[C_G(g)]`.
    pub fn alpha(&self, a: &RElement) -> Result<RElement> {
        self.alpha_r(a, 1)
    }

    /// `T^[G] -> sum over classes [g] of T^[C_G(g)<a>]` with `a^r = g`,
    /// extended linearly.
    pub fn alpha_r(&self, a: &RElement, r: usize) -> Result<RElement> {
        let mut out = RElement::zero();
        for (&id, c) in a.terms() {
            let image = self.alpha_r_generator(id, r)?;
            for (&k, d) in image.terms() {
                out.add_term(k, &(c * d));
            }
        }
        Ok(out)
    }

    fn alpha_r_generator(&self, id: GroupClassId, r: usize) -> Result<RElement> {
        if let Some(v) = self.alpha.lock().unwrap().get(&(id, r)) {
            return Ok(v.clone());
        }
        let g = self.registry.representative(id);
        let mut out = RElement::zero();
        for x in g.conjugacy_classes().representatives() {
            let cent = g.centralizer(x);
            let class = if r == 1 {
                self.class_id(&cent.group)?
            } else {
                let local = cent.locate(x).expect("element lies in its centralizer");
                self.class_id(&adjoined_root_extension(&cent.group, local, r)?)?
            };
            out.add_term(class, &BigInt::one());
        }
        self.alpha.lock().unwrap().insert((id, r), out.clone());
        Ok(out)
    }

    /// `alpha` applied `k` times.
    pub fn alpha_pow(&self, a: &RElement, k: usize) -> Result<RElement> {
        (0..k).try_fold(a.clone(), |acc, _| self.alpha(&acc))
    }

    /// `chi^(k) = chi^(0) ∘ alpha^k`.
    pub fn chi_k(&self, a: &RElement, k: usize) -> Result<BigInt> {
        Ok(self.euler0(&self.alpha_pow(a, k)?))
    }

    /// The universal Euler characteristic: for each isotropy class `H`, the
    /// number of orbits in the `H`-stratum times `T^[H]`.
    pub fn chi_un(&self, x: &GSet) -> Result<RElement> {
        let mut out = RElement::zero();
        for (id, points) in x.isotropy_strata(&self.registry)? {
            out.add_term(id, &BigInt::from(x.restrict(&points).quotient_size()));
        }
        Ok(out)
    }

    /// `[(X^<g>, C_G(g)<a>)]` summed over classes, `a` acting trivially.
    pub fn alpha_r_gset(&self, x: &GSet, r: usize) -> Result<RElement> {
        let g = x.group();
        let mut out = RElement::zero();
        for h in g.conjugacy_classes().representatives() {
            let cent = g.centralizer(h);
            let local = cent.locate(h).expect("element lies in its centralizer");
            let ext = Arc::new(adjoined_root_extension(&cent.group, local, r)?);
            let m = cent.group.order();
            // (c, i) sits at index i*|C| + c and acts through c
            let proj: Vec<usize> = ext.elements().map(|e| cent.embedding[e % m]).collect();
            let fixed = x.fixed_points(h);
            let set = x.pullback(ext, &proj).restrict(&fixed);
            out = &out + &self.class_of(&set)?;
        }
        Ok(out)
    }

    fn wreath_class(&self, id: GroupClassId, n: usize) -> Result<GroupClassId> {
        if let Some(&w) = self.wreath.lock().unwrap().get(&(id, n)) {
            return Ok(w);
        }
        let w = wreath_product(&self.registry.representative(id), n)?;
        let wid = self.class_id(w.group())?;
        self.wreath.lock().unwrap().insert((id, n), wid);
        Ok(wid)
    }

    /// `1 + sum_n T^[G_n] t^n` for the wreath powers `G_n = G^n ⋊ S_n`.
    pub fn zeta_of_generator(&self, id: GroupClassId, trunc: usize) -> Result<TruncSeries<RElement>> {
        let mut coeffs = vec![RElement::one()];
        for n in 1..=trunc {
            coeffs.push(RElement::generator(self.wreath_class(id, n)?));
        }
        Ok(TruncSeries::new(self, coeffs, trunc))
    }

    /// The Kapranov zeta function, extended from generators to all of the ring
    /// by `zeta_{a+b} = zeta_a zeta_b` and `zeta_{-a} = 1/zeta_a`.
    pub fn kapranov_zeta(&self, a: &RElement, trunc: usize) -> Result<TruncSeries<RElement>> {
        let mut acc = TruncSeries::one(self, trunc);
        for (&id, c) in a.terms() {
            acc = acc.mul(self, &self.zeta_of_generator(id, trunc)?.int_pow(self, c)?)?;
        }
        Ok(acc)
    }

    /// `euler0` of the Kapranov zeta function. Every coefficient of
    /// `zeta_{T^[G]}` is a single generator, so its image is `1/(1 - t)`
    /// without building the wreath powers.
    pub fn kapranov_zeta_euler0(&self, a: &RElement, trunc: usize) -> Result<TruncSeries<BigInt>> {
        use crate::series::Integers;
        let geometric = TruncSeries::new(&Integers, vec![BigInt::one(); trunc + 1], trunc);
        let mut acc = TruncSeries::one(&Integers, trunc);
        for c in a.terms().values() {
            acc = acc.mul(&Integers, &geometric.int_pow(&Integers, c)?)?;
        }
        Ok(acc)
    }

    /// `1 + sum_n [(X^n, G_n)] t^n` computed from the G-set itself.
    pub fn zeta_of_gset(&self, x: &GSet, trunc: usize) -> Result<TruncSeries<RElement>> {
        let mut coeffs = vec![RElement::one()];
        for n in 1..=trunc {
            coeffs.push(self.class_of(x.power_with_wreath(n)?.gset())?);
        }
        Ok(TruncSeries::new(self, coeffs, trunc))
    }

    /// `1 + sum_n [(X^n \ Δ_G, G_n)] t^n`, where `Δ_G` is the set of tuples
    /// with two coordinates in one orbit.
    pub fn config_lambda_series(&self, x: &GSet, trunc: usize) -> Result<TruncSeries<RElement>> {
        let orbits = x.quotient_size();
        let mut coeffs = vec![RElement::one()];
        for n in 1..=trunc.min(orbits) {
            coeffs.push(self.class_of(x.configuration_gset(n)?.gset())?);
        }
        Ok(TruncSeries::new(self, coeffs, trunc))
    }

    /// Renders `a1*T[name1] + a2*T[name2] + ...` in class id order.
    pub fn render_element(&self, a: &RElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = a
            .terms()
            .iter()
            .map(|(&id, c)| {
                let name = format!("T[{}]", self.registry.name(id));
                if c.is_one() {
                    name
                } else if (-c).is_one() {
                    format!("-{name}")
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }

    pub fn element_json(&self, a: &RElement) -> Value {
        let terms: Vec<Value> = a
            .terms()
            .iter()
            .map(|(&id, c)| json!({"class": id.0, "name": self.registry.name(id), "coeff": bigint_json(c)}))
            .collect();
        json!({ "terms": terms })
    }
}

impl CoefficientRing for ClassRing {
    type Elem = RElement;

    fn zero(&self) -> RElement {
        RElement::zero()
    }
    fn one(&self) -> RElement {
        RElement::one()
    }
    fn add(&self, a: &RElement, b: &RElement) -> RElement {
        a + b
    }
    fn neg(&self, a: &RElement) -> RElement {
        -a
    }
    fn mul(&self, a: &RElement, b: &RElement) -> Result<RElement> {
        self.multiply(a, b)
    }
    fn from_integer(&self, n: &BigInt) -> RElement {
        RElement::integer(n.clone())
    }
    fn tag(&self) -> &'static str {
        "R"
    }
    fn render(&self, a: &RElement) -> String {
        self.render_element(a)
    }
    fn to_json(&self, a: &RElement) -> Value {
        self.element_json(a)
    }
    fn is_zero(&self, a: &RElement) -> bool {
        a.is_zero()
    }
    fn scale(&self, n: &BigInt, a: &RElement) -> RElement {
        a.scale(n)
    }
}

/// `chi^(k)` of a G-set by the fixed-point recursion
/// `chi^(k)(X, G) = sum over [g] of chi^(k-1)(X^<g>, C_G(g))`.
pub fn chi_k_gset(x: &GSet, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::from(x.quotient_size());
    }
    if x.is_empty() {
        return BigInt::zero();
    }
    x.group()
        .conjugacy_classes()
        .representatives()
        .map(|g| chi_k_gset(&x.fixed_point_gset(g), k - 1))
        .sum()
}

/// The Kapranov zeta lambda-structure on the class ring.
pub struct KapranovLambda<'a>(pub &'a ClassRing);

impl LambdaStructure for KapranovLambda<'_> {
    type Ring = ClassRing;
    fn ring(&self) -> &ClassRing {
        self.0
    }
    fn lambda(&self, a: &RElement, trunc: usize) -> Result<TruncSeries<RElement>> {
        self.0.kapranov_zeta(a, trunc)
    }
}

/// The configuration-space lambda-structure: `T^[G] -> 1 + T^[G] t`, the
/// series of a point with group `G`, extended additively-to-multiplicatively.
pub struct ConfigLambda<'a>(pub &'a ClassRing);

impl LambdaStructure for ConfigLambda<'_> {
    type Ring = ClassRing;
    fn ring(&self) -> &ClassRing {
        self.0
    }
    fn lambda(&self, a: &RElement, trunc: usize) -> Result<TruncSeries<RElement>> {
        let ring = self.0;
        let mut acc = TruncSeries::one(ring, trunc);
        for (&id, c) in a.terms() {
            let base = TruncSeries::new(ring, vec![RElement::one(), RElement::generator(id)], trunc);
            acc = acc.mul(ring, &base.int_pow(ring, c)?)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, klein_four, symmetric};

    fn ring() -> ClassRing {
        ClassRing::default()
    }

    #[test]
    fn products_of_generators() {
        let r = ring();
        let z2 = r.generator(&cyclic(2).unwrap()).unwrap();
        let z3 = r.generator(&cyclic(3).unwrap()).unwrap();
        let z6 = r.generator(&cyclic(6).unwrap()).unwrap();
        assert_eq!(r.multiply(&z2, &z3).unwrap(), z6);
        assert_eq!(r.multiply(&z2, &RElement::one()).unwrap(), z2);
        let lhs = r.multiply(&(&z2 - &RElement::one()), &(&z2 + &RElement::one())).unwrap();
        let v4 = r.generator(&klein_four().unwrap()).unwrap();
        assert_eq!(lhs, &v4 - &RElement::one());
    }

    #[test]
    fn inertia_images() {
        let r = ring();
        let s3 = r.generator(&symmetric(3).unwrap()).unwrap();
        let expect = [symmetric(3), cyclic(2), cyclic(3)]
            .into_iter()
            .map(|g| r.generator(&g.unwrap()).unwrap())
            .fold(RElement::zero(), |a, b| &a + &b);
        assert_eq!(r.alpha(&s3).unwrap(), expect);
        assert_eq!(r.chi_k(&s3, 1).unwrap(), BigInt::from(3));
        assert_eq!(r.chi_k(&s3, 2).unwrap(), BigInt::from(8));

        let z2 = r.generator(&cyclic(2).unwrap()).unwrap();
        let a2 = r.alpha_r(&z2, 2).unwrap();
        let expect = &r.generator(&klein_four().unwrap()).unwrap() + &r.generator(&cyclic(4).unwrap()).unwrap();
        assert_eq!(a2, expect);
        let z3 = r.generator(&cyclic(3).unwrap()).unwrap();
        assert_eq!(r.alpha_r(&RElement::one(), 3).unwrap(), z3);
    }

    #[test]
    fn classes_of_gsets() {
        let r = ring();
        let s3 = Arc::new(symmetric(3).unwrap());
        let nat = GSet::natural(s3.clone()).unwrap();
        let z2 = r.generator(&cyclic(2).unwrap()).unwrap();
        assert_eq!(r.class_of(&nat).unwrap(), z2);
        assert_eq!(r.chi_un(&nat).unwrap(), z2);
        assert_eq!(r.class_of(&GSet::regular(s3.clone())).unwrap(), RElement::one());
        assert_eq!(chi_k_gset(&GSet::point(s3), 1), BigInt::from(3));
        let swap = GSet::build(Arc::new(cyclic(2).unwrap()), &[vec![1, 0]]).unwrap();
        assert_eq!(chi_k_gset(&swap, 1), BigInt::from(1));
    }

    #[test]
    fn alpha_r_on_gsets_matches_ring_map() {
        let r = ring();
        let s3 = Arc::new(symmetric(3).unwrap());
        for x in [GSet::point(s3.clone()), GSet::natural(s3.clone()).unwrap(), GSet::regular(s3)] {
            let a = r.class_of(&x).unwrap();
            for k in 1..=3 {
                assert_eq!(r.alpha_r_gset(&x, k).unwrap(), r.alpha_r(&a, k).unwrap());
            }
        }
    }

    #[test]
    fn zeta_and_config_series() {
        let r = ring();
        let e = Arc::new(cyclic(1).unwrap());
        let z = r.kapranov_zeta(&RElement::one(), 3).unwrap();
        assert_eq!(z.coeff(3), &r.generator(&symmetric(3).unwrap()).unwrap());
        let c = r.config_lambda_series(&GSet::point(e.clone()), 3).unwrap();
        assert_eq!(c, TruncSeries::new(&r, vec![RElement::one(), RElement::one()], 3));
        let two = r.config_lambda_series(&GSet::trivial(e, 2), 3).unwrap();
        assert_eq!(two.coeff(1), &RElement::integer(2));
        assert_eq!(two.coeff(2), &RElement::one());
        assert!(r.kapranov_zeta(&RElement::zero(), 3).unwrap() == TruncSeries::one(&r, 3));
    }

    #[test]
    fn rendering() {
        let r = ring();
        let z2 = r.generator(&cyclic(2).unwrap()).unwrap();
        let a = &z2.scale(&BigInt::from(3)) - &RElement::one();
        assert_eq!(r.render_element(&a), "-T[e] + 3*T[C2]");
        assert_eq!(r.element_json(&z2)["terms"][0]["name"], "C2");
    }
}
