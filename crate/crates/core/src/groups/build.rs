use std::collections::HashMap;

use super::{Group, PermProvenance};
use crate::error::{Error, Result};
use crate::limits::{self, order_cap};
use crate::perm;

/// Closure of permutation generators on `{0, .., degree-1}`.
///
/// Elements are numbered breadth-first from the identity (index 0), extending
/// each element by the generators in input order. The stored generators keep
/// the input order, one slot per input permutation.
pub fn build_group(generators: &[Vec<usize>], degree: usize) -> Result<Group> {
    if degree == 0 {
        return Err(Error::InvalidGroup("degree must be positive".into()));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.len() != degree || !perm::is_permutation(g) {
            return Err(Error::InvalidGroup(format!(
                "generator {i} is not a permutation of {degree} points"
            )));
        }
    }
    let cap = order_cap();
    let k = generators.len();
    let mut elements: Vec<Vec<usize>> = vec![perm::identity(degree)];
    let mut index: HashMap<Vec<usize>, u32> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    // right[x * k + s] = x * generators[s]
    let mut right: Vec<u32> = Vec::new();
    // parent links of the BFS tree: element = parent * generator
    let mut tree: Vec<(u32, u32)> = vec![(0, u32::MAX)];
    let mut i = 0;
    while i < elements.len() {
        for (s, g) in generators.iter().enumerate() {
            let y = perm::compose(&elements[i], g);
            let idx = match index.get(&y) {
                Some(&idx) => idx,
                None => {
                    let idx = elements.len() as u32;
                    if elements.len() + 1 > cap {
                        return Err(Error::Capacity {
                            what: "group order",
                            needed: (elements.len() + 1) as u128,
                            cap: cap as u128,
                        });
                    }
                    index.insert(y.clone(), idx);
                    elements.push(y);
                    tree.push((i as u32, s as u32));
                    idx
                }
            };
            right.push(idx);
        }
        i += 1;
    }
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        let row = &mut table[a * n..(a + 1) * n];
        row[0] = a as u32;
        for b in 1..n {
            let (p, s) = tree[b];
            let prev = row[p as usize] as usize;
            row[b] = right[prev * k + s as usize];
        }
    }
    let gens = generators.iter().map(|g| index[g] as usize).collect();
    Ok(Group::from_parts(n, table, Some(gens)).with_provenance(PermProvenance {
        degree,
        generators: generators.to_vec(),
    }))
}

/// Cyclic group of order `n` generated by the `n`-cycle.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Precondition("cyclic group order must be positive".into()));
    }
    limits::check_order("group order", n as u128)?;
    let gens = if n == 1 { vec![] } else { vec![perm::long_cycle(n)] };
    Ok(build_group(&gens, n)?.with_label(format!("C{n}")))
}

/// Symmetric group on `n` points, generated by `(0 1)` and the `n`-cycle.
pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Precondition("symmetric group degree must be positive".into()));
    }
    limits::check_order("group order", limits::factorial(n))?;
    let gens = match n {
        1 => vec![],
        2 => vec![perm::transposition(2, 0, 1)],
        _ => vec![perm::transposition(n, 0, 1), perm::long_cycle(n)],
    };
    Ok(build_group(&gens, n)?.with_label(format!("S{n}")))
}

/// Dihedral group of the given (even) order `2m`, acting on an `m`-gon.
/// Order 4 gives the Klein four-group on 4 points.
pub fn dihedral(order: usize) -> Result<Group> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::Precondition(format!("dihedral order {order} must be even and positive")));
    }
    limits::check_order("group order", order as u128)?;
    let m = order / 2;
    let group = match m {
        1 => build_group(&[perm::transposition(2, 0, 1)], 2)?,
        2 => klein_four()?,
        _ => {
            let rotation = perm::long_cycle(m);
            let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
            build_group(&[rotation, reflection], m)?
        }
    };
    Ok(group.with_label(format!("D{order}")))
}

pub fn klein_four() -> Result<Group> {
    let a = vec![1, 0, 3, 2];
    let b = vec![2, 3, 0, 1];
    Ok(build_group(&[a, b], 4)?.with_label("C2xC2"))
}

/// Direct product with componentwise multiplication; element `(a, b)` has
/// index `a * |B| + b`.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    limits::check_order("direct product order", na as u128 * nb as u128)?;
    let n = na * nb;
    let ea = a.identity();
    let eb = b.identity();
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
        }
    }
    let mut gens: Vec<usize> = a.generators().iter().map(|&g| g * nb + eb).collect();
    gens.extend(b.generators().iter().map(|&g| ea * nb + g));
    let mut group = Group::from_parts(n, table, Some(gens));
    if let (Some(pa), Some(pb)) = (a.provenance(), b.provenance()) {
        let degree = pa.degree + pb.degree;
        let mut generators = Vec::new();
        for g in &pa.generators {
            let mut p: Vec<usize> = g.clone();
            p.extend(pa.degree..degree);
            generators.push(p);
        }
        for g in &pb.generators {
            let mut p: Vec<usize> = (0..pa.degree).collect();
            p.extend(g.iter().map(|&x| x + pa.degree));
            generators.push(p);
        }
        group = group.with_provenance(PermProvenance { degree, generators });
    }
    if let (Some(la), Some(lb)) = (a.label(), b.label()) {
        group = group.with_label(format!("{la}x{lb}"));
    }
    Ok(group)
}

/// Parses builtin names: `e`, `C<n>` (or `Z<n>`), `S<n>`, `D<2n>`, `V4`, and
/// `x`-separated direct products of those such as `C2xS3`.
pub fn parse_builtin(name: &str) -> Result<Group> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let mut acc = parse_single(parts[0])?;
        for p in &parts[1..] {
            acc = direct_product(&acc, &parse_single(p)?)?;
        }
        return Ok(acc.with_label(name.to_string()));
    }
    parse_single(name)
}

fn parse_single(name: &str) -> Result<Group> {
    let bad = || Error::Parse(format!("unknown builtin group '{name}'"));
    if name == "V4" {
        return klein_four();
    }
    if name == "e" {
        return cyclic(1);
    }
    let (kind, digits) = name.split_at(name.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
    let n: usize = digits.parse().map_err(|_| bad())?;
    match kind {
        "C" | "Z" => cyclic(n),
        "S" => symmetric(n),
        "D" => dihedral(n),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_from_one_transposition() {
        let g = build_group(&[vec![1, 0]], 2).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.generators(), &[1]);
    }

    #[test]
    fn s3_from_transposition_and_three_cycle() {
        let g = build_group(&[vec![1, 0, 2], vec![1, 2, 0]], 3).unwrap();
        assert_eq!(g.order(), 6);
        g.validate().unwrap();
        assert!(!g.is_abelian());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = build_group(&[], 1).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn rejects_non_permutation() {
        assert!(build_group(&[vec![0, 0]], 2).is_err());
        assert!(build_group(&[vec![0, 1, 2]], 2).is_err());
    }

    #[test]
    fn capacity_error_above_cap() {
        // S8 has order 40320, well above any sane cap.
        assert!(matches!(symmetric(8), Err(Error::Capacity { .. })));
    }

    #[test]
    fn standard_groups() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.conjugacy_classes().len(), 3);
        let p = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
        p.validate().unwrap();
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert_eq!(dihedral(2).unwrap().order(), 2);
    }

    #[test]
    fn builtin_names() {
        assert_eq!(parse_builtin("C5").unwrap().order(), 5);
        assert_eq!(parse_builtin("S4").unwrap().order(), 24);
        assert_eq!(parse_builtin("D8").unwrap().order(), 8);
        assert_eq!(parse_builtin("C2xS3").unwrap().order(), 12);
        assert!(parse_builtin("Q8").is_err());
        assert!(parse_builtin("").is_err());
    }

    #[test]
    fn product_provenance_is_disjoint_union() {
        let p = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        let prov = p.provenance().unwrap();
        assert_eq!(prov.degree, 5);
        let rebuilt = build_group(&prov.generators, prov.degree).unwrap();
        assert_eq!(rebuilt.order(), 6);
    }
}
