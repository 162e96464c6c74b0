use std::collections::BTreeMap;

use super::{cyclic, GroupClassId, Registry};
use super::Group;
use crate::error::{Error, Result};
use crate::limits::{KRULL_SCHMIDT_CAP, NORMAL_SUBGROUP_LIMIT};

/// Multiset of directly indecomposable factors of `g`, as sorted class ids.
///
/// Abelian groups split into cyclic groups of prime-power order read off from
/// the counts of elements killed by `p^j`. Other groups are split by searching
/// for a pair of normal subgroups `N`, `M` with `N ∩ M = 1`, `|N||M| = |G|`
/// and `[N, M] = 1`, recursing on both. The trivial group has no factors.
pub fn indecomposable_factors(registry: &Registry, g: &Group) -> Result<Vec<GroupClassId>> {
    if g.order() > KRULL_SCHMIDT_CAP {
        return Err(Error::Capacity {
            what: "direct decomposition group order",
            needed: g.order() as u128,
            cap: KRULL_SCHMIDT_CAP as u128,
        });
    }
    let mut out = Vec::new();
    collect(registry, g, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn collect(registry: &Registry, g: &Group, out: &mut Vec<GroupClassId>) -> Result<()> {
    if g.order() == 1 {
        return Ok(());
    }
    if g.is_abelian() {
        for q in abelian_cyclic_factors(g) {
            out.push(registry.canonical_class(&cyclic(q)?)?);
        }
        return Ok(());
    }
    match split(g)? {
        Some((n, m)) => {
            collect(registry, &g.subgroup(&n).group, out)?;
            collect(registry, &g.subgroup(&m).group, out)?;
        }
        None => out.push(registry.canonical_class(g)?),
    }
    Ok(())
}

/// Prime-power orders of the cyclic factors of an abelian group.
fn abelian_cyclic_factors(g: &Group) -> Vec<usize> {
    let n = g.order();
    let orders = g.element_orders();
    let mut factors = Vec::new();
    for p in prime_factors(n) {
        // omega[j] = #{x : x^(p^j) = e} restricted to the p-part
        let mut omega = vec![1usize];
        let mut pj = 1;
        loop {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj % o as usize == 0).count();
            omega.push(count);
            if count == *omega.iter().rev().nth(1).unwrap() {
                omega.pop();
                break;
            }
        }
        // log_p(omega[j] / omega[j-1]) = number of cyclic factors of order >= p^j
        let at_least: Vec<usize> = omega.windows(2).map(|w| ilog(w[1] / w[0], p)).collect();
        for (j, &c) in at_least.iter().enumerate() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            for _ in 0..(c - next) {
                factors.push(p.pow(j as u32 + 1));
            }
        }
    }
    factors
}

fn ilog(mut x: usize, p: usize) -> usize {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Normal subgroups as sorted element lists, built by closing normal subgroups
/// under joins with single conjugacy classes.
fn normal_subgroups(g: &Group) -> Result<Vec<Vec<usize>>> {
    let classes = g.conjugacy_classes();
    let mut found: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut trivial = vec![g.identity()];
    trivial.sort_unstable();
    found.insert(trivial.clone(), ());
    let mut frontier = vec![trivial];
    while let Some(n) = frontier.pop() {
        let mut member = vec![false; g.order()];
        for &x in &n {
            member[x] = true;
        }
        for class in classes.classes() {
            if member[class[0]] {
                continue;
            }
            let mut seeds = n.clone();
            seeds.extend_from_slice(class);
            let mut joined = g.closure(&seeds);
            joined.sort_unstable();
            if !found.contains_key(&joined) {
                if found.len() >= NORMAL_SUBGROUP_LIMIT {
                    return Err(Error::Capacity {
                        what: "normal subgroup count",
                        needed: found.len() as u128 + 1,
                        cap: NORMAL_SUBGROUP_LIMIT as u128,
                    });
                }
                found.insert(joined.clone(), ());
                frontier.push(joined);
            }
        }
    }
    let mut all: Vec<Vec<usize>> = found.into_keys().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(all)
}

fn split(g: &Group) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let order = g.order();
    let normals = normal_subgroups(g)?;
    let proper: Vec<&Vec<usize>> = normals.iter().filter(|n| n.len() > 1 && n.len() < order).collect();
    for n in &proper {
        let gens_n = g.subgroup(n).group.generators().iter().map(|&i| n[i]).collect::<Vec<_>>();
        for m in &proper {
            if n.len() * m.len() != order {
                continue;
            }
            let disjoint = m.iter().filter(|x| n.binary_search(x).is_ok()).count() == 1;
            if disjoint && m.iter().all(|&y| gens_n.iter().all(|&x| g.commute(x, y))) {
                return Ok(Some(((*n).clone(), (*m).clone())));
            }
        }
    }
    Ok(None)
}
