//! Wreath-product structure, induction invariance and oracle agreement.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::json;

use super::wreath_order;
use crate::class_ring::{chi_k_gset, ClassRing};
use crate::error::Result;
use crate::groups::{adjoined_root_extension, are_isomorphic, cyclic, direct_product, wreath_product, Group, WreathType};
use crate::gsets::GSet;
use crate::verify::oracle::commuting_tuple_sum;
use crate::verify::pool::{pool_group, pool_groups, pool_gsets};
use crate::verify::{Outcome, Recorder, SuiteOptions};

/// Exhaustive type and fixed-set checks stay below this wreath order.
const EXHAUSTIVE_ORDER: usize = 400;

/// `prod over (r, [c]) of (C_G(c)<a_{r,c}>)_{m_r(c)}` for a wreath type.
fn centralizer_model(base: &Group, ty: &WreathType) -> Result<Group> {
    let classes = base.conjugacy_classes();
    let mut acc = cyclic(1)?;
    for (&(r, class), &m) in &ty.counts {
        let c = classes.representative(class);
        let cent = base.centralizer(c);
        let local = cent.locate(c).expect("element lies in its centralizer");
        let ext = Arc::new(adjoined_root_extension(&cent.group, local, r)?);
        let w = wreath_product(&ext, m)?;
        acc = direct_product(&acc, w.group())?;
    }
    Ok(acc)
}

fn type_json(ty: &WreathType) -> serde_json::Value {
    json!(ty.counts.iter().map(|(&(r, c), &m)| json!({"r": r, "class": c, "m": m})).collect::<Vec<_>>())
}

pub(crate) fn wreath_structure(opts: &SuiteOptions, rec: &mut Recorder) {
    let bases = ["Z2", "Z3", "S3"];
    for name in bases {
        let base = pool_group(name);
        for n in [2usize, 3] {
            let order = wreath_order(base.order(), n);
            let params = json!({ "group": name, "n": n, "order": order.to_string() });
            if order <= opts.max_order as u128 {
                rec.record(
                    format!("wreath_structure/centralizers/{name}_{n}"),
                    format!("every centralizer in ({name})_{n} is the product of wreath powers of root extensions given by its type"),
                    params.clone(),
                    || {
                        let w = wreath_product(&base, n)?;
                        let g = w.group();
                        for x in g.conjugacy_classes().representatives() {
                            let ty = w.type_of_index(x);
                            let model = centralizer_model(&base, &ty)?;
                            let cent = g.centralizer(x).group;
                            if cent.order() != model.order() || are_isomorphic(&cent, &model)?.is_none() {
                                return Ok(Outcome::Fail(json!({
                                    "element": w.decode(x),
                                    "type": type_json(&ty),
                                    "centralizer_order": cent.order(),
                                    "model_order": model.order(),
                                })));
                            }
                        }
                        Ok(Outcome::Pass)
                    },
                );
            }
            if order <= EXHAUSTIVE_ORDER.min(opts.max_order) as u128 {
                rec.record(
                    format!("wreath_structure/types/{name}_{n}"),
                    format!("two elements of ({name})_{n} are conjugate iff they have the same type"),
                    params.clone(),
                    || {
                        let w = wreath_product(&base, n)?;
                        let classes = w.group().conjugacy_classes();
                        let mut owner: BTreeMap<WreathType, usize> = BTreeMap::new();
                        for (ci, class) in classes.classes().iter().enumerate() {
                            let ty = w.type_of_index(class[0]);
                            if let Some(&y) = class.iter().find(|&&y| w.type_of_index(y) != ty) {
                                return Ok(Outcome::Fail(json!({
                                    "reason": "conjugate elements with different types",
                                    "a": w.decode(class[0]),
                                    "b": w.decode(y),
                                })));
                            }
                            if let Some(&other) = owner.get(&ty) {
                                return Ok(Outcome::Fail(json!({
                                    "reason": "non-conjugate elements with the same type",
                                    "a": w.decode(classes.representative(other)),
                                    "b": w.decode(class[0]),
                                    "type": type_json(&ty),
                                })));
                            }
                            owner.insert(ty, ci);
                        }
                        Ok(Outcome::Pass)
                    },
                );
            }
        }
    }
    for (xname, x) in pool_gsets(opts.max_order) {
        let Some(gname) = bases.iter().find(|b| xname.ends_with(&format!("/{b}"))) else {
            continue;
        };
        for n in [2usize, 3] {
            if wreath_order(x.group().order(), n) > EXHAUSTIVE_ORDER.min(opts.max_order) as u128 {
                continue;
            }
            rec.record(
                format!("wreath_structure/fixed_sets/{xname}_{n}"),
                format!("|(X^{n})^<w>| = prod |X^<c>|^m_r(c) for every w in ({gname})_{n}"),
                json!({ "gset": xname, "n": n }),
                || {
                    let power = x.power_with_wreath(n)?;
                    let w = power.wreath();
                    let base = w.base();
                    let classes = base.conjugacy_classes();
                    for el in w.group().elements() {
                        let ty = w.type_of_index(el);
                        let formula: usize = ty
                            .counts
                            .iter()
                            .map(|(&(_, c), &m)| x.fixed_points(classes.representative(c)).len().pow(m as u32))
                            .product();
                        let actual = power.gset().fixed_points(el).len();
                        if actual != formula {
                            return Ok(Outcome::Fail(json!({
                                "element": w.decode(el),
                                "fixed": actual,
                                "formula": formula,
                            })));
                        }
                    }
                    Ok(Outcome::Pass)
                },
            );
        }
    }
}

/// Subgroup generated by the first element of the given order, with a swap
/// action on two points when the subgroup has order 2.
fn embedded(parent: &Arc<Group>, order: usize) -> (Arc<Group>, Vec<usize>) {
    let x = parent
        .elements()
        .find(|&x| parent.element_order(x) == order)
        .expect("element of the requested order");
    let sub = parent.subgroup(&parent.closure(&[x]));
    (Arc::new(sub.group), sub.embedding)
}

pub(crate) fn induction(_opts: &SuiteOptions, ring: &ClassRing, rec: &mut Recorder) {
    let embeddings = [("Z2<S3", "S3", 2), ("Z3<S3", "S3", 3), ("Z2<Z4", "Z4", 2)];
    for (ename, parent, order) in embeddings {
        let h = pool_group(parent);
        let (g, emb) = embedded(&h, order);
        let mut sets = vec![("pt", GSet::point(g.clone())), ("reg", GSet::regular(g.clone()))];
        if g.order() == 2 {
            let id = g.identity();
            sets.push(("swap", GSet::from_fn(g.clone(), 2, move |a, p| if a == id { p } else { 1 - p })));
        }
        for (xname, x) in sets {
            let params = json!({ "embedding": ename, "gset": xname });
            let ind = x.induce(&h, &emb);
            rec.record(
                format!("induction/class/{ename}/{xname}"),
                format!("the induced {parent}-set has the same class as {xname}"),
                params.clone(),
                || {
                    let ind = ind.as_ref().map_err(|e| crate::Error::Precondition(e.to_string()))?;
                    let (a, b) = (ring.class_of(ind)?, ring.class_of(&x)?);
                    Ok(Outcome::expect(a == b, || {
                        json!({ "induced": ring.render_element(&a), "original": ring.render_element(&b) })
                    }))
                },
            );
            rec.record(
                format!("induction/chi/{ename}/{xname}"),
                "chi^(k) of the induced set equals chi^(k) of the original, k <= 3",
                params,
                || {
                    let ind = ind.as_ref().map_err(|e| crate::Error::Precondition(e.to_string()))?;
                    for k in 0..=3 {
                        let (a, b) = (chi_k_gset(ind, k), chi_k_gset(&x, k));
                        let via_ring = ring.chi_k(&ring.class_of(ind)?, k)?;
                        if a != b || via_ring != b {
                            return Ok(Outcome::Fail(json!({
                                "k": k,
                                "induced": a.to_string(),
                                "original": b.to_string(),
                                "ring": via_ring.to_string(),
                            })));
                        }
                    }
                    Ok(Outcome::Pass)
                },
            );
        }
    }
}

pub(crate) fn oracle(opts: &SuiteOptions, ring: &ClassRing, rec: &mut Recorder) {
    for (name, x) in pool_gsets(opts.max_order) {
        let top = if x.group().order() <= 8 { 3 } else { 2 };
        for k in 0..=top {
            rec.record(
                format!("oracle/triple/{name}/k{k}"),
                format!("chi^({k}) by recursion, by euler0(alpha^{k}(class)) and by commuting tuples agree"),
                json!({ "gset": name, "k": k }),
                || {
                    let rec_value = chi_k_gset(&x, k);
                    let ring_value = ring.chi_k(&ring.class_of(&x)?, k)?;
                    let sum = commuting_tuple_sum(&x, k + 1);
                    let order = x.group().order() as u128;
                    let oracle_value = BigInt::from(sum / order);
                    let ok = sum.is_multiple_of(order) && rec_value == ring_value && ring_value == oracle_value;
                    Ok(Outcome::expect(ok, || {
                        json!({
                            "recursion": rec_value.to_string(),
                            "ring": ring_value.to_string(),
                            "tuple_sum": sum.to_string(),
                            "group_order": order.to_string(),
                        })
                    }))
                },
            );
        }
        rec.record(
            format!("oracle/chi_un/{name}"),
            "the isotropy-stratified class equals the orbit-stabilizer class",
            json!({ "gset": name }),
            || {
                let (a, b) = (ring.chi_un(&x)?, ring.class_of(&x)?);
                Ok(Outcome::expect(a == b, || {
                    json!({ "chi_un": ring.render_element(&a), "class": ring.render_element(&b) })
                }))
            },
        );
        rec.record(
            format!("oracle/diagram_gset/{name}"),
            "chi^(k)(chi_un(X)) = chi^(k)(X) by recursion, k <= 3",
            json!({ "gset": name }),
            || {
                let u = ring.chi_un(&x)?;
                for k in 0..=3 {
                    let (a, b) = (ring.chi_k(&u, k)?, chi_k_gset(&x, k));
                    if a != b {
                        return Ok(Outcome::Fail(json!({ "k": k, "ring": a.to_string(), "recursion": b.to_string() })));
                    }
                }
                Ok(Outcome::Pass)
            },
        );
    }
    for (name, g) in pool_groups(opts.max_order) {
        rec.record(
            format!("oracle/diagram_ring/{name}"),
            format!("chi^(k)(T[{name}]) = euler0(alpha^k(T[{name}])), k <= 3"),
            json!({ "group": name }),
            || {
                let a = ring.generator(&g)?;
                let pt = GSet::point(g.clone());
                for k in 0..=3 {
                    let composite = ring.euler0(&ring.alpha_pow(&a, k)?);
                    let direct = chi_k_gset(&pt, k);
                    if composite != direct {
                        return Ok(Outcome::Fail(json!({
                            "k": k,
                            "euler0_alpha_k": composite.to_string(),
                            "recursion": direct.to_string(),
                        })));
                    }
                }
                Ok(Outcome::Pass)
            },
        );
    }
}
