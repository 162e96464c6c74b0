//! Power-structure axioms and ring-homomorphism batteries.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::int_series;
use crate::class_ring::{ClassRing, RElement};
use crate::error::Result;
use crate::series::{
    geometric_pow_int, lambda_factorize, lambda_reconstruct, power_pow, BiPoly, Bivariate, BivariateZeta,
    CoefficientRing, IntegerConfig, IntegerZeta, Integers, LambdaStructure, TruncSeries,
};
use crate::verify::pool::pool_groups;
use crate::verify::{Outcome, Recorder, SuiteOptions};

type Elem<L> = <<L as LambdaStructure>::Ring as CoefficientRing>::Elem;

struct Case<E> {
    a: TruncSeries<E>,
    b: TruncSeries<E>,
    m: E,
    n: E,
    k: usize,
}

fn random_int_series(rng: &mut ChaCha8Rng, trunc: usize) -> TruncSeries<BigInt> {
    let mut c = vec![BigInt::from(1)];
    c.extend((0..trunc).map(|_| BigInt::from(rng.gen_range(-3..=3))));
    TruncSeries::new(&Integers, c, trunc)
}

fn random_poly(rng: &mut ChaCha8Rng) -> BiPoly {
    let r = Bivariate;
    (0..rng.gen_range(0..=2)).fold(r.zero(), |acc, _| {
        let m = r.monomial(rng.gen_range(-2..=2), rng.gen_range(0..=1), rng.gen_range(0..=1));
        r.add(&acc, &m)
    })
}

fn random_bi_series(rng: &mut ChaCha8Rng, trunc: usize) -> TruncSeries<BiPoly> {
    let mut c = vec![Bivariate.one()];
    c.extend((0..trunc).map(|_| random_poly(rng)));
    TruncSeries::new(&Bivariate, c, trunc)
}

/// Runs every case and reports the first one where `prop` fails.
fn battery<L: LambdaStructure>(
    rec: &mut Recorder,
    id: String,
    statement: &str,
    lambda: &L,
    cases: &[Case<Elem<L>>],
    prop: impl Fn(&L, &Case<Elem<L>>) -> Result<Option<(TruncSeries<Elem<L>>, TruncSeries<Elem<L>>)>>,
) {
    let ring = lambda.ring();
    rec.record(id, statement, json!({ "cases": cases.len() }), || {
        for (i, case) in cases.iter().enumerate() {
            if let Some((lhs, rhs)) = prop(lambda, case)? {
                return Ok(Outcome::Fail(json!({
                    "case": i,
                    "A": case.a.render(ring),
                    "B": case.b.render(ring),
                    "m": ring.render(&case.m),
                    "n": ring.render(&case.n),
                    "k": case.k,
                    "lhs": lhs.render(ring),
                    "rhs": rhs.render(ring),
                })));
            }
        }
        Ok(Outcome::Pass)
    });
}

fn differ<E: Clone + PartialEq + std::fmt::Debug>(lhs: TruncSeries<E>, rhs: TruncSeries<E>) -> Option<(TruncSeries<E>, TruncSeries<E>)> {
    (lhs != rhs).then_some((lhs, rhs))
}

fn power_axioms<L: LambdaStructure>(rec: &mut Recorder, tag: &str, lambda: &L, cases: &[Case<Elem<L>>]) {
    let ring = lambda.ring();
    let id = |s: &str| format!("axioms/{tag}/{s}");
    battery(rec, id("1-zero"), "A^0 = 1", lambda, cases, |l, c| {
        let p = power_pow(&c.a, &ring.zero(), l)?;
        Ok(differ(p, TruncSeries::one(ring, c.a.trunc())))
    });
    battery(rec, id("2-one"), "A^1 = A", lambda, cases, |l, c| {
        Ok(differ(power_pow(&c.a, &ring.one(), l)?, c.a.clone()))
    });
    battery(rec, id("3-product"), "(AB)^m = A^m B^m", lambda, cases, |l, c| {
        let lhs = power_pow(&c.a.mul(ring, &c.b)?, &c.m, l)?;
        let rhs = power_pow(&c.a, &c.m, l)?.mul(ring, &power_pow(&c.b, &c.m, l)?)?;
        Ok(differ(lhs, rhs))
    });
    battery(rec, id("4-sum"), "A^(m+n) = A^m A^n", lambda, cases, |l, c| {
        let lhs = power_pow(&c.a, &ring.add(&c.m, &c.n), l)?;
        let rhs = power_pow(&c.a, &c.m, l)?.mul(ring, &power_pow(&c.a, &c.n, l)?)?;
        Ok(differ(lhs, rhs))
    });
    battery(rec, id("5-composite"), "A^(mn) = (A^n)^m", lambda, cases, |l, c| {
        let lhs = power_pow(&c.a, &ring.mul(&c.m, &c.n)?, l)?;
        let rhs = power_pow(&power_pow(&c.a, &c.n, l)?, &c.m, l)?;
        Ok(differ(lhs, rhs))
    });
    battery(rec, id("6-linear-term"), "(1 + a_1 t + ...)^m = 1 + m a_1 t + ...", lambda, cases, |l, c| {
        let p = power_pow(&c.a, &c.m, l)?.truncate_to(1);
        let expect = TruncSeries::new(ring, vec![ring.one(), ring.mul(&c.m, c.a.coeff(1))?], 1);
        Ok(differ(p, expect))
    });
    battery(rec, id("7-substitution"), "A(t^k)^m = (A^m)(t^k)", lambda, cases, |l, c| {
        let lhs = power_pow(&c.a.substitute(ring, c.k), &c.m, l)?;
        let rhs = power_pow(&c.a, &c.m, l)?.substitute(ring, c.k);
        Ok(differ(lhs, rhs))
    });
    battery(rec, id("lambda-additive"), "lambda_(m+n) = lambda_m lambda_n", lambda, cases, |l, c| {
        let t = c.a.trunc();
        let lhs = l.lambda(&ring.add(&c.m, &c.n), t)?;
        let rhs = l.lambda(&c.m, t)?.mul(ring, &l.lambda(&c.n, t)?)?;
        Ok(differ(lhs, rhs))
    });
    battery(rec, id("lambda-linear-term"), "lambda_m = 1 + m t + ...", lambda, cases, |l, c| {
        let s = l.lambda(&c.m, c.a.trunc())?;
        let expect = TruncSeries::new(ring, vec![ring.one(), c.m.clone()], 1);
        Ok(differ(s.truncate_to(1), expect))
    });
    battery(rec, id("factorize-reconstruct"), "prod lambda_(b_k)(t^k) recovers A", lambda, cases, |l, c| {
        let b = lambda_factorize(&c.a, l)?;
        Ok(differ(lambda_reconstruct(&b, l, c.a.trunc())?, c.a.clone()))
    });
    battery(rec, id("reconstruct-factorize"), "factorizing prod lambda_(b_k)(t^k) recovers b", lambda, cases, |l, c| {
        // reuse the coefficients of B as an exponent sequence
        let b: Vec<_> = c.b.coeffs()[1..].to_vec();
        let s = lambda_reconstruct(&b, l, c.b.trunc())?;
        let back = lambda_factorize(&s, l)?;
        if back == b {
            return Ok(None);
        }
        let as_series = |v: &[Elem<L>]| {
            let mut x = vec![ring.zero()];
            x.extend(v.iter().cloned());
            TruncSeries::new(ring, x, v.len())
        };
        Ok(Some((as_series(&back), as_series(&b))))
    });
}

/// Power-structure axioms over the integers and over `Z[u, v]`, and agreement
/// of the four integer power operations.
pub(crate) fn axioms(opts: &SuiteOptions, rec: &mut Recorder) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let trunc = opts.trunc.unwrap_or(6).max(1);
    let int_cases: Vec<Case<BigInt>> = (0..opts.cases)
        .map(|_| Case {
            a: random_int_series(&mut rng, trunc),
            b: random_int_series(&mut rng, trunc),
            m: BigInt::from(rng.gen_range(-3..=3)),
            n: BigInt::from(rng.gen_range(-3..=3)),
            k: rng.gen_range(1..=3),
        })
        .collect();
    power_axioms(rec, "Z-zeta", &IntegerZeta, &int_cases);
    power_axioms(rec, "Z-config", &IntegerConfig, &int_cases);
    let bi_cases: Vec<Case<BiPoly>> = (0..opts.cases)
        .map(|_| Case {
            a: random_bi_series(&mut rng, trunc),
            b: random_bi_series(&mut rng, trunc),
            m: random_poly(&mut rng),
            n: random_poly(&mut rng),
            k: rng.gen_range(1..=3),
        })
        .collect();
    power_axioms(rec, "Zuv-zeta", &BivariateZeta, &bi_cases);

    let wide = opts.trunc.unwrap_or(8);
    let series: Vec<TruncSeries<BigInt>> = (0..opts.cases).map(|_| random_int_series(&mut rng, wide)).collect();
    rec.record(
        "axioms/Z/same-power-structure",
        "geometric power = integer power = power from either integer lambda-structure",
        json!({ "cases": series.len(), "m": [-5, 5], "trunc": wide }),
        || {
            for a in &series {
                for m in -5..=5 {
                    let m = BigInt::from(m);
                    let geo = geometric_pow_int(a, &m)?;
                    let others = [
                        ("int_pow", a.int_pow(&Integers, &m)?),
                        ("zeta", power_pow(a, &m, &IntegerZeta)?),
                        ("config", power_pow(a, &m, &IntegerConfig)?),
                    ];
                    for (name, s) in others {
                        if s != geo {
                            return Ok(Outcome::Fail(json!({
                                "A": a.render(&Integers),
                                "m": m.to_string(),
                                "geometric": geo.render(&Integers),
                                name: s.render(&Integers),
                            })));
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        },
    );
    rec.record(
        "axioms/Z/factorization-examples",
        "(1-t)^-2 has exponents (2,0,...) and 1+t has exponents (1,-1,0,...) for the zeta structure",
        json!({ "trunc": 6 }),
        || {
            let a = lambda_factorize(&int_series(&[1], 6).mul(&Integers, &IntegerZeta.lambda(&BigInt::from(2), 6)?)?, &IntegerZeta)?;
            let b = lambda_factorize(&int_series(&[1, 1], 6), &IntegerZeta)?;
            let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
            Ok(Outcome::expect(
                a == ints(&[2, 0, 0, 0, 0, 0]) && b == ints(&[1, -1, 0, 0, 0, 0]),
                || json!({ "first": format!("{a:?}"), "second": format!("{b:?}") }),
            ))
        },
    );
}

fn random_element(rng: &mut ChaCha8Rng, gens: &[RElement]) -> RElement {
    let terms = rng.gen_range(1..=2);
    (0..terms).fold(RElement::zero(), |acc, _| {
        let g = &gens[rng.gen_range(0..gens.len())];
        let c = [-2, -1, 1, 2][rng.gen_range(0..4)];
        &acc + &g.scale(&BigInt::from(c))
    })
}

enum Map {
    Euler0,
    Alpha(usize),
    Chi(usize),
}

impl Map {
    fn name(&self) -> String {
        match self {
            Map::Euler0 => "euler0".into(),
            Map::Alpha(1) => "alpha".into(),
            Map::Alpha(r) => format!("alpha_{r}"),
            Map::Chi(k) => format!("chi_{k}"),
        }
    }

    /// Image in the class ring; integer-valued maps land on multiples of `T^[e]`.
    fn apply(&self, ring: &ClassRing, a: &RElement) -> Result<RElement> {
        Ok(match self {
            Map::Euler0 => RElement::integer(ring.euler0(a)),
            Map::Alpha(r) => ring.alpha_r(a, *r)?,
            Map::Chi(k) => RElement::integer(ring.chi_k(a, *k)?),
        })
    }
}

/// Ring-homomorphism properties of euler0, alpha, alpha_r and chi^(k) on
/// random pairs of pool-generated elements.
pub(crate) fn homomorphism(opts: &SuiteOptions, ring: &ClassRing, rec: &mut Recorder) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let gens: Vec<RElement> = match pool_groups(opts.max_order)
        .iter()
        .map(|(_, g)| ring.generator(g))
        .collect::<Result<_>>()
    {
        Ok(g) => g,
        Err(e) => {
            rec.record("homomorphism/pool", "pool groups classify", Value::Null, || Err(e));
            return;
        }
    };
    let pairs: Vec<(RElement, RElement)> = (0..opts.cases)
        .map(|_| (random_element(&mut rng, &gens), random_element(&mut rng, &gens)))
        .collect();
    let maps = [
        Map::Euler0,
        Map::Alpha(1),
        Map::Alpha(2),
        Map::Alpha(3),
        Map::Chi(1),
        Map::Chi(2),
    ];
    let show = |a: &RElement| Value::from(ring.render_element(a));
    for map in &maps {
        let name = map.name();
        rec.record(
            format!("homomorphism/{name}/additive"),
            format!("{name}(a + b) = {name}(a) + {name}(b)"),
            json!({ "pairs": pairs.len(), "seed": opts.seed }),
            || {
                for (a, b) in &pairs {
                    let lhs = map.apply(ring, &(a + b))?;
                    let rhs = &map.apply(ring, a)? + &map.apply(ring, b)?;
                    if lhs != rhs {
                        return Ok(Outcome::Fail(json!({"a": show(a), "b": show(b), "lhs": show(&lhs), "rhs": show(&rhs)})));
                    }
                }
                Ok(Outcome::Pass)
            },
        );
        rec.record(
            format!("homomorphism/{name}/multiplicative"),
            format!("{name}(a b) = {name}(a) {name}(b)"),
            json!({ "pairs": pairs.len(), "seed": opts.seed }),
            || {
                let breaks = |a: &RElement, b: &RElement| -> Result<Option<Value>> {
                    let lhs = map.apply(ring, &ring.multiply(a, b)?)?;
                    let rhs = ring.multiply(&map.apply(ring, a)?, &map.apply(ring, b)?)?;
                    Ok((lhs != rhs).then(|| json!({"a": show(a), "b": show(b), "lhs": show(&lhs), "rhs": show(&rhs)})))
                };
                let mut failures = 0;
                let mut skipped = 0;
                let mut first = None;
                for (a, b) in &pairs {
                    match breaks(a, b) {
                        Ok(Some(w)) => {
                            failures += 1;
                            first.get_or_insert(w);
                        }
                        Ok(None) => {}
                        Err(e) if e.is_resource_limit() => skipped += 1,
                        Err(e) => return Err(e),
                    }
                }
                let Some(first) = first else {
                    if skipped > 0 {
                        return Ok(Outcome::Indeterminate(json!({ "pairs_over_capacity": skipped })));
                    }
                    return Ok(Outcome::Pass);
                };
                // smallest counterexample among pairs of single generators
                let mut minimal = Value::Null;
                'search: for (i, a) in gens.iter().enumerate() {
                    for b in &gens[..=i] {
                        if let Ok(Some(w)) = breaks(a, b) {
                            minimal = w;
                            break 'search;
                        }
                    }
                }
                Ok(Outcome::Fail(json!({
                    "failing_pairs": failures,
                    "pairs_over_capacity": skipped,
                    "minimal": minimal,
                    "first_random": { "a": first["a"], "b": first["b"] },
                })))
            },
        );
        rec.record(
            format!("homomorphism/{name}/unit"),
            format!("{name}(T[e]) = T[e]"),
            Value::Null,
            || {
                let img = map.apply(ring, &RElement::one())?;
                Ok(Outcome::expect(img == RElement::one(), || json!({ "image": show(&img) })))
            },
        );
    }
}
