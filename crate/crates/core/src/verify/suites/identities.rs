//! Series identities: the inertia product formula, Macdonald-type formulas,
//! and the Euler-characteristic images of the zeta and configuration series.

use num_bigint::BigInt;
use serde_json::json;

use super::{feasible_trunc, int_series, render_z, wreath_order};
use crate::class_ring::{ClassRing, RElement};
use crate::error::Result;
use crate::gsets::GSet;
use crate::series::{binomial_series, macdonald_series, power_pow, IntegerConfig, TruncSeries};
use crate::verify::pool::{pool_group, pool_groups, pool_gsets};
use crate::verify::{Outcome, Recorder, SuiteOptions};

/// `alpha(zeta_a(t)) = prod_{r=1..N} zeta_{alpha_r(a)}(t^r)`.
///
/// The left side applies `alpha` to each coefficient `T^[G_n]`, i.e. sums the
/// classes of all centralizers in the wreath power, with no use of the
/// description of its conjugacy classes.
pub(crate) fn alpha_zeta(opts: &SuiteOptions, ring: &ClassRing, rec: &mut Recorder) {
    let swap = GSet::build(pool_group("Z2"), &[vec![1, 0]]).expect("swap action");
    let cases: Vec<(&str, Result<RElement>, usize)> = vec![
        ("T[e]", ring.generator(&pool_group("e")), 5),
        ("T[Z2]", ring.generator(&pool_group("Z2")), 4),
        ("T[Z3]", ring.generator(&pool_group("Z3")), 3),
        ("T[S3]", ring.generator(&pool_group("S3")), 3),
        ("class(swap-Z2)", ring.class_of(&swap), 3),
    ];
    for (i, (name, a, default_n)) in cases.into_iter().enumerate() {
        let n = opts.trunc.unwrap_or(default_n);
        rec.record(
            format!("alpha_zeta/{i}-{name}"),
            format!("alpha(zeta_a(t)) = prod_r zeta_(alpha_r(a))(t^r) for a = {name}"),
            json!({ "a": name, "trunc": n, "max_order": opts.max_order }),
            || {
                let a = a?;
                let largest = a.terms().keys().map(|&id| ring.registry().order(id)).max().unwrap_or(1);
                if wreath_order(largest, n) > opts.max_order as u128 {
                    return Ok(Outcome::Indeterminate(json!({
                        "reason": "wreath power exceeds max order",
                        "order": wreath_order(largest, n).to_string(),
                    })));
                }
                let zeta = ring.kapranov_zeta(&a, n)?;
                let lhs = zeta.map_coefficients(|c| ring.alpha(c))?;
                let mut rhs = TruncSeries::one(ring, n);
                for r in 1..=n {
                    let z = ring.kapranov_zeta(&ring.alpha_r(&a, r)?, n / r)?;
                    let z = TruncSeries::new(ring, z.coeffs().to_vec(), n).substitute(ring, r);
                    rhs = rhs.mul(ring, &z)?;
                }
                Ok(match lhs.first_mismatch(&rhs) {
                    None => Outcome::Pass,
                    Some(k) => Outcome::Fail(json!({
                        "degree": k,
                        "lhs": ring.render_element(lhs.coeff(k)),
                        "rhs": ring.render_element(rhs.coeff(k)),
                    })),
                })
            },
        );
    }
}

pub(crate) fn macdonald(opts: &SuiteOptions, ring: &ClassRing, rec: &mut Recorder) {
    let geometric_n = opts.trunc.unwrap_or(8);
    for (name, g) in pool_groups(opts.max_order) {
        rec.record(
            format!("macdonald/euler0-zeta/{name}"),
            format!("euler0 maps zeta_(T[{name}]) to 1/(1-t)"),
            json!({ "group": name, "trunc": geometric_n }),
            || {
                let a = ring.generator(&g)?;
                let expect = binomial_series(&BigInt::from(-1), -1, geometric_n);
                let image = ring.kapranov_zeta_euler0(&a, geometric_n)?;
                if image != expect {
                    return Ok(Outcome::Fail(json!({ "image": render_z(&image), "expected": render_z(&expect) })));
                }
                // the coefficients that fit under the order cap, built explicitly
                let built = feasible_trunc(ring, &a, geometric_n, opts.max_order);
                let zeta = ring.kapranov_zeta(&a, built)?;
                let direct = zeta.map_coefficients(|c| Ok(ring.euler0(c)))?;
                Ok(match direct.first_mismatch(&expect.truncate_to(built)) {
                    None => Outcome::Pass,
                    Some(k) => Outcome::Fail(json!({ "degree": k, "explicit": render_z(&direct), "built_to": built })),
                })
            },
        );
    }
    let gsets = pool_gsets(opts.max_order);
    let config_n = opts.trunc.unwrap_or(6);
    for (name, x) in &gsets {
        rec.record(
            format!("macdonald/euler0-config/{name}"),
            format!("euler0 maps the configuration series of {name} to (1+t)^chi(X/G)"),
            json!({ "gset": name, "trunc": config_n }),
            || {
                let s = ring.config_lambda_series(x, config_n)?;
                let image = s.map_coefficients(|c| Ok(ring.euler0(c)))?;
                let expect = binomial_series(&BigInt::from(x.quotient_size()), 1, config_n);
                Ok(Outcome::expect(image == expect, || {
                    json!({ "image": render_z(&image), "expected": render_z(&expect) })
                }))
            },
        );
    }
    for (name, x) in &gsets {
        let ks: &[usize] = if name == "pt/e" { &[0, 1, 2, 3] } else { &[0, 1, 2] };
        for &k in ks {
            let default_n = if k <= 1 { 6 } else { 4 };
            rec.record(
                format!("macdonald/chi-zeta/k{k}/{name}"),
                format!("chi^({k}) maps zeta of {name} to the product formula"),
                json!({ "gset": name, "k": k, "sign": opts.sign.value(), "requested_trunc": opts.trunc }),
                || {
                    let a = ring.class_of(x)?;
                    let n = match opts.trunc {
                        Some(n) => n,
                        None => feasible_trunc(ring, &a, default_n, opts.max_order),
                    };
                    let e = ring.chi_k(&a, k)?;
                    let zeta = ring.kapranov_zeta(&a, n)?;
                    let image = zeta.map_coefficients(|c| ring.chi_k(c, k))?;
                    let expect = macdonald_series(k, &e, n, opts.sign);
                    Ok(match image.first_mismatch(&expect) {
                        None => Outcome::Pass,
                        Some(d) => Outcome::Fail(json!({
                            "degree": d,
                            "trunc": n,
                            "chi": e.to_string(),
                            "image": render_z(&image),
                            "formula": render_z(&expect),
                        })),
                    })
                },
            );
        }
    }
    rec.record(
        "macdonald/config-not-power/pt-Z2",
        "chi^(1) maps the configuration series of a point with Z2 to 1 + 2t, which is not (1+t)^2",
        json!({ "trunc": 4 }),
        || {
            let x = GSet::point(pool_group("Z2"));
            let image = ring.config_lambda_series(&x, 4)?.map_coefficients(|c| ring.chi_k(c, 1))?;
            let power = power_pow(&int_series(&[1, 1], 4), &BigInt::from(2), &IntegerConfig)?;
            let expect_image = int_series(&[1, 2], 4);
            Ok(Outcome::expect(image == expect_image && image != power, || {
                json!({ "image": render_z(&image), "power": render_z(&power) })
            }))
        },
    );
    rec.record(
        "macdonald/config-not-power/search",
        "some pool G-set has chi^(1)(config series) different from (1+t)^chi^(1)",
        json!({ "trunc": 4 }),
        || {
            for (_, x) in &gsets {
                let a = ring.class_of(x)?;
                let chi = ring.chi_k(&a, 1)?;
                let image = ring.config_lambda_series(x, 4)?.map_coefficients(|c| ring.chi_k(c, 1))?;
                let power = power_pow(&int_series(&[1, 1], 4), &chi, &IntegerConfig)?;
                if image != power {
                    return Ok(Outcome::Pass);
                }
            }
            Ok(Outcome::Fail(json!({ "reason": "every pool G-set satisfied the identity" })))
        },
    );
}
