use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Group;
use crate::error::{Error, Result};
use crate::limits::{self, factorial, saturating_pow};
use crate::perm;

/// An element `(g, s)` of `G^n ⋊ S_n`.
///
/// It acts on `X^n` by applying `g_i` to coordinate `i` and then moving
/// coordinate `i` to position `s(i)`. Consequently
/// `(g, s) * (h, t) = ((g_{t(i)} h_i)_i, s ∘ t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathElement {
    pub base: Vec<usize>,
    pub perm: Vec<usize>,
}

/// Conjugacy invariant of a wreath element: `m_r(c)` counts the `r`-cycles of
/// the permutation whose cycle product lies in conjugacy class `c` of the base
/// group (classes indexed as in [`Group::conjugacy_classes`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathType {
    pub counts: BTreeMap<(usize, usize), usize>,
}

impl WreathType {
    /// `Σ r · m_r(c)`, which equals the wreath arity.
    pub fn weight(&self) -> usize {
        self.counts.iter().map(|(&(r, _), &m)| r * m).sum()
    }

    pub fn count(&self, r: usize, class: usize) -> usize {
        self.counts.get(&(r, class)).copied().unwrap_or(0)
    }
}

/// `G_n = G^n ⋊ S_n` together with the element codec.
///
/// Index of `(g, s)` is `rank(s) · |G|^n + Σ_i g_i |G|^i`, where `rank` is the
/// lexicographic rank; the identity is index 0.
#[derive(Clone, Debug)]
pub struct WreathProduct {
    base: Arc<Group>,
    arity: usize,
    perms: Vec<Vec<usize>>,
    perm_rank: HashMap<Vec<usize>, usize>,
    base_size: usize,
    group: Arc<Group>,
}

pub fn wreath_product(base: &Arc<Group>, n: usize) -> Result<WreathProduct> {
    if n == 0 {
        return Err(Error::Precondition("wreath arity must be positive".into()));
    }
    let m = base.order();
    let order = saturating_pow(m, n).saturating_mul(factorial(n));
    limits::check_order("wreath product order", order)?;
    let order = order as usize;
    let base_size = m.pow(n as u32);
    let perms = perm::all_permutations(n);
    let perm_rank: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let nperm = perms.len();
    let mut perm_mul = vec![0usize; nperm * nperm];
    for (i, s) in perms.iter().enumerate() {
        for (j, t) in perms.iter().enumerate() {
            perm_mul[i * nperm + j] = perm_rank[&perm::compose(s, t)];
        }
    }
    let digits: Vec<Vec<usize>> = (0..base_size).map(|code| decode_base(code, m, n)).collect();
    let mut powers = vec![1usize; n];
    for i in 1..n {
        powers[i] = powers[i - 1] * m;
    }
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (xs, xg) = (x / base_size, x % base_size);
        let gx = &digits[xg];
        for y in 0..order {
            let (ys, yg) = (y / base_size, y % base_size);
            let t = &perms[ys];
            let gy = &digits[yg];
            let mut code = 0;
            for i in 0..n {
                code += base.mul(gx[t[i]], gy[i]) * powers[i];
            }
            table[x * order + y] = (perm_mul[xs * nperm + ys] * base_size + code) as u32;
        }
    }
    let e = base.identity();
    let mut gens = Vec::new();
    for &g in base.generators() {
        let mut v = vec![e; n];
        v[0] = g;
        gens.push(encode_parts(&v, 0, m, base_size));
    }
    if n >= 2 {
        gens.push(perm_rank[&perm::transposition(n, 0, 1)] * base_size + encode_parts(&vec![e; n], 0, m, 0));
    }
    if n >= 3 {
        gens.push(perm_rank[&perm::long_cycle(n)] * base_size + encode_parts(&vec![e; n], 0, m, 0));
    }
    let mut group = Group::from_parts(order, table, Some(gens));
    if base.order() == 1 {
        group = group.with_label(format!("S{n}"));
    } else if let Some(l) = base.label() {
        group = group.with_label(format!("{l}wrS{n}"));
    }
    Ok(WreathProduct {
        base: base.clone(),
        arity: n,
        perms,
        perm_rank,
        base_size,
        group: Arc::new(group),
    })
}

fn decode_base(mut code: usize, m: usize, n: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(n);
    for _ in 0..n {
        v.push(code % m);
        code /= m;
    }
    v
}

fn encode_parts(base: &[usize], perm_rank: usize, m: usize, base_size: usize) -> usize {
    let code = base.iter().rev().fold(0, |acc, &g| acc * m + g);
    perm_rank * base_size + code
}

impl WreathProduct {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn base(&self) -> &Arc<Group> {
        &self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn encode(&self, w: &WreathElement) -> Result<usize> {
        if w.base.len() != self.arity || w.base.iter().any(|&g| g >= self.base.order()) {
            return Err(Error::Precondition("wreath base vector does not match the arity".into()));
        }
        let rank = self
            .perm_rank
            .get(&w.perm)
            .ok_or_else(|| Error::Precondition("wreath permutation is not a bijection of the arity".into()))?;
        Ok(encode_parts(&w.base, *rank, self.base.order(), self.base_size))
    }

    pub fn decode(&self, x: usize) -> WreathElement {
        WreathElement {
            base: decode_base(x % self.base_size, self.base.order(), self.arity),
            perm: self.perms[x / self.base_size].clone(),
        }
    }

    /// Cycle products `g_{i_r} ⋯ g_{i_1}` of the cycles `(i_1 .. i_r)` of the
    /// permutation, with `s(i_j) = i_{j+1}`; returned as `(cycle, product)`.
    pub fn cycle_products(&self, w: &WreathElement) -> Vec<(Vec<usize>, usize)> {
        perm::cycles(&w.perm)
            .into_iter()
            .map(|cycle| {
                let product = cycle
                    .iter()
                    .fold(self.base.identity(), |acc, &i| self.base.mul(w.base[i], acc));
                (cycle, product)
            })
            .collect()
    }

    pub fn wreath_type(&self, w: &WreathElement) -> WreathType {
        let classes = self.base.conjugacy_classes();
        let mut t = WreathType::default();
        for (cycle, product) in self.cycle_products(w) {
            *t.counts.entry((cycle.len(), classes.class_index(product))).or_default() += 1;
        }
        t
    }

    pub fn type_of_index(&self, x: usize) -> WreathType {
        self.wreath_type(&self.decode(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{are_isomorphic, cyclic, dihedral, symmetric};

    #[test]
    fn orders() {
        let s3 = Arc::new(symmetric(3).unwrap());
        assert_eq!(wreath_product(&s3, 2).unwrap().group().order(), 72);
        let e = Arc::new(cyclic(1).unwrap());
        let w = wreath_product(&e, 3).unwrap();
        assert_eq!(w.group().order(), 6);
        assert!(are_isomorphic(w.group(), &symmetric(3).unwrap()).unwrap().is_some());
    }

    #[test]
    fn z2_wreath_2_is_dihedral() {
        let z2 = Arc::new(cyclic(2).unwrap());
        let w = wreath_product(&z2, 2).unwrap();
        w.group().validate().unwrap();
        assert!(are_isomorphic(w.group(), &dihedral(8).unwrap()).unwrap().is_some());
    }

    #[test]
    fn codec_round_trip_and_identity() {
        let z3 = Arc::new(cyclic(3).unwrap());
        let w = wreath_product(&z3, 2).unwrap();
        for x in w.group().elements() {
            assert_eq!(w.encode(&w.decode(x)).unwrap(), x);
        }
        let id = w.decode(0);
        assert_eq!(id.perm, vec![0, 1]);
        assert_eq!(id.base, vec![0, 0]);
        assert!(w.encode(&WreathElement { base: vec![0], perm: vec![0] }).is_err());
    }

    #[test]
    fn multiplication_rule() {
        let z3 = Arc::new(cyclic(3).unwrap());
        let w = wreath_product(&z3, 2).unwrap();
        let g = w.group();
        for x in [5, 11, 13] {
            for y in [3, 7, 17] {
                let (a, b) = (w.decode(x), w.decode(y));
                let base: Vec<usize> = (0..2).map(|i| z3.mul(a.base[b.perm[i]], b.base[i])).collect();
                let expected = WreathElement { base, perm: perm::compose(&a.perm, &b.perm) };
                assert_eq!(w.decode(g.mul(x, y)), expected);
            }
        }
    }

    #[test]
    fn type_of_identity_and_swap() {
        let z2 = Arc::new(cyclic(2).unwrap());
        let w = wreath_product(&z2, 2).unwrap();
        let t = w.type_of_index(0);
        assert_eq!(t.count(1, 0), 2);
        assert_eq!(t.weight(), 2);
        // base = (g, e), perm = swap: one 2-cycle with product g
        let x = w.encode(&WreathElement { base: vec![1, 0], perm: vec![1, 0] }).unwrap();
        let t = w.type_of_index(x);
        let g_class = z2.conjugacy_classes().class_index(1);
        assert_eq!(t.counts.len(), 1);
        assert_eq!(t.count(2, g_class), 1);
    }
}
