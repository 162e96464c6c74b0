//! Finite groups as dense multiplication tables.
//!
//! Every [`Group`] carries its Cayley table, a list of stored generators, and
//! lazily computed conjugacy data. Groups are immutable once built and cheap to
//! share behind an [`Arc`](std::sync::Arc).

mod build;
mod extension;
mod iso;
mod krull_schmidt;
mod registry;
mod wreath;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{self, TABLE_CAP};

pub use build::{build_group, cyclic, dihedral, direct_product, klein_four, parse_builtin, symmetric};
pub use extension::adjoined_root_extension;
pub use iso::{are_isomorphic, are_isomorphic_with_budget, is_homomorphism};
pub use krull_schmidt::indecomposable_factors;
pub use registry::{GroupClassId, Registry, RegistrySnapshot};
pub use wreath::{wreath_product, WreathElement, WreathProduct, WreathType};

const NONE: u32 = u32::MAX;

/// Ranking of a candidate search generator: larger generated subgroup first, then
/// smaller invariant bucket, then smaller index.
type SearchScore = (std::cmp::Reverse<usize>, usize, usize);

/// Permutation generators a group was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermProvenance {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

/// Conjugacy classes, each sorted ascending; the representative is the first entry.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    class_of: Vec<u32>,
    classes: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn representatives(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().map(|c| c[0])
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn class_index(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.classes[class].len()
    }
}

/// Isomorphism invariant used to bucket groups before any search.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    /// (element order, multiplicity), sorted.
    pub element_orders: Vec<(u32, u32)>,
    /// (class size, representative order), sorted with repetition.
    pub classes: Vec<(usize, u32)>,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelian: bool,
    /// Multiset of per-element invariants, see [`ElementInvariant`].
    pub element_invariants: Vec<(ElementInvariant, u32)>,
}

/// Per-element data preserved by every isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementInvariant {
    pub order: u32,
    pub class_size: u32,
    /// Number of `y` with `y * y == x`.
    pub square_roots: u32,
}

#[derive(Clone, Debug, Default)]
struct Cache {
    orders: OnceLock<Vec<u32>>,
    classes: OnceLock<ConjugacyClasses>,
    fingerprint: OnceLock<Fingerprint>,
    invariants: OnceLock<Vec<ElementInvariant>>,
    search_generators: OnceLock<Vec<usize>>,
    word_tree: OnceLock<Vec<(u32, u32)>>,
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    identity: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
    provenance: Option<PermProvenance>,
    label: Option<String>,
    cache: Cache,
}

/// A subgroup materialized as a standalone [`Group`] with its inclusion map.
///
/// `embedding[i]` is the parent index of subgroup element `i`; the embedding is
/// strictly increasing, so the subgroup identity is index 0 whenever the parent
/// identity is.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: Group,
    pub embedding: Vec<usize>,
}

impl Subgroup {
    /// Subgroup index of a parent element, if it lies in the subgroup.
    pub fn locate(&self, parent_element: usize) -> Option<usize> {
        self.embedding.binary_search(&parent_element).ok()
    }
}

impl Group {
    /// Builds a group from a full multiplication table given as rows, validating
    /// closure, identity, the Latin-square property and associativity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        limits::check_order("group order", n as u128)?;
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!("entry {x} out of range")));
                }
                table.push(x as u32);
            }
        }
        let identity = find_identity(n, &table)
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let group = Group::assemble(n, identity, table, None);
        group.validate()?;
        Ok(group)
    }

    /// Trusted constructor for tables produced by this crate.
    pub(crate) fn from_parts(order: usize, table: Vec<u32>, generators: Option<Vec<usize>>) -> Group {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(order * order <= TABLE_CAP);
        let identity = find_identity(order, &table).expect("trusted table has an identity");
        Group::assemble(order, identity, table, generators)
    }

    fn assemble(order: usize, identity: usize, table: Vec<u32>, generators: Option<Vec<usize>>) -> Group {
        let mut inverses = vec![NONE; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            if let Some(y) = row.iter().position(|&v| v as usize == identity) {
                inverses[x] = y as u32;
            }
        }
        let mut group = Group {
            order,
            identity,
            table,
            inverses,
            generators: Vec::new(),
            provenance: None,
            label: None,
            cache: Cache::default(),
        };
        group.generators = match generators {
            Some(g) => g,
            None => group.greedy_generators(),
        };
        group
    }

    pub(crate) fn with_provenance(mut self, provenance: PermProvenance) -> Group {
        self.provenance = Some(provenance);
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = Some(label.into());
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn provenance(&self) -> Option<&PermProvenance> {
        self.provenance.as_ref()
    }

    /// Stored generators. They may repeat or include the identity when the
    /// group came from user-supplied permutations.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g * x * g^-1`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Full structural validation: Latin square, two-sided identity, inverses,
    /// and associativity (every triple up to order 128, 10^4 seeded random
    /// triples above).
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if self.table.len() != n * n {
            return Err(Error::InvalidGroup("table size mismatch".into()));
        }
        let e = self.identity;
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(Error::InvalidGroup(format!("{e} is not a two-sided identity")));
            }
        }
        let mut seen = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                let v = self.mul(x, y);
                if v >= n || seen[v] == 2 * x + 1 {
                    return Err(Error::InvalidGroup(format!("row {x} is not a permutation")));
                }
                seen[v] = 2 * x + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for y in 0..n {
            for x in 0..n {
                let v = self.mul(x, y);
                if seen[v] == y + 1 {
                    return Err(Error::InvalidGroup(format!("column {y} is not a permutation")));
                }
                seen[v] = y + 1;
            }
        }
        for x in 0..n {
            let i = self.inverses[x];
            if i == NONE || self.mul(x, i as usize) != e || self.mul(i as usize, x) != e {
                return Err(Error::InvalidGroup(format!("element {x} has no inverse")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= 128 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidGroup(format!("({a},{b},{c}) is not associative")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..10_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidGroup(format!("({a},{b},{c}) is not associative")));
                }
            }
        }
        Ok(())
    }

    /// Elements of the subgroup generated by `gens`, in breadth-first order from
    /// the identity.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut elems = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems
    }

    /// Ascending scan keeping every element not yet generated.
    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut size = 1;
        for x in 0..self.order {
            if size == self.order {
                break;
            }
            if !member[x] {
                gens.push(x);
                let sub = self.closure(&gens);
                size = sub.len();
                for y in sub {
                    member[y] = true;
                }
            }
        }
        gens
    }

    /// Materializes a subgroup from a closed set of elements.
    pub fn subgroup(&self, elements: &[usize]) -> Subgroup {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let m = elems.len();
        let mut pos = vec![NONE; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i as u32;
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                let p = pos[self.mul(a, b)];
                debug_assert!(p != NONE, "subgroup elements are not closed");
                table.push(p);
            }
        }
        Subgroup {
            group: Group::from_parts(m, table, None),
            embedding: elems,
        }
    }

    pub fn element_orders(&self) -> &[u32] {
        self.cache.orders.get_or_init(|| {
            (0..self.order)
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != self.identity {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders()[x] as usize
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.cache.classes.get_or_init(|| {
            let n = self.order;
            let mut class_of = vec![NONE; n];
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for x in 0..n {
                if class_of[x] != NONE {
                    continue;
                }
                let id = classes.len() as u32;
                class_of[x] = id;
                let mut members = vec![x];
                let mut i = 0;
                while i < members.len() {
                    let y = members[i];
                    for &s in &self.generators {
                        let z = self.conjugate(s, y);
                        if class_of[z] == NONE {
                            class_of[z] = id;
                            members.push(z);
                        }
                    }
                    i += 1;
                }
                members.sort_unstable();
                classes.push(members);
            }
            ConjugacyClasses { class_of, classes }
        })
    }

    pub fn centralizer_elements(&self, x: usize) -> Vec<usize> {
        (0..self.order).filter(|&g| self.commute(g, x)).collect()
    }

    /// `C_G(x)` as a standalone group with its embedding.
    pub fn centralizer(&self, x: usize) -> Subgroup {
        self.subgroup(&self.centralizer_elements(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| self.generators.iter().all(|&s| self.commute(x, s)))
            .collect()
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = seeds.iter().copied().filter(|&x| x != self.identity).collect();
        gens.sort_unstable();
        gens.dedup();
        loop {
            let elems = self.closure(&gens);
            let mut member = vec![false; self.order];
            for &x in &elems {
                member[x] = true;
            }
            let missing = gens
                .iter()
                .flat_map(|&s| self.generators.iter().map(move |&g| (g, s)))
                .map(|(g, s)| self.conjugate(g, s))
                .find(|&c| !member[c]);
            match missing {
                Some(c) => gens.push(c),
                None => return elems,
            }
        }
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut commutators = Vec::new();
        for &a in &self.generators {
            for &b in &self.generators {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                commutators.push(c);
            }
        }
        self.normal_closure(&commutators)
    }

    pub fn element_invariants(&self) -> &[ElementInvariant] {
        self.cache.invariants.get_or_init(|| {
            let orders = self.element_orders();
            let classes = self.conjugacy_classes();
            let mut roots = vec![0u32; self.order];
            for y in 0..self.order {
                roots[self.mul(y, y)] += 1;
            }
            (0..self.order)
                .map(|x| ElementInvariant {
                    order: orders[x],
                    class_size: classes.class_size(classes.class_index(x)) as u32,
                    square_roots: roots[x],
                })
                .collect()
        })
    }

    pub fn fingerprint(&self) -> &Fingerprint {
        self.cache.fingerprint.get_or_init(|| {
            let orders = self.element_orders();
            let classes = self.conjugacy_classes();
            let mut element_orders = std::collections::BTreeMap::<u32, u32>::new();
            for &o in orders {
                *element_orders.entry(o).or_default() += 1;
            }
            let mut class_data: Vec<(usize, u32)> = classes
                .classes()
                .iter()
                .map(|c| (c.len(), orders[c[0]]))
                .collect();
            class_data.sort_unstable();
            let mut inv = std::collections::BTreeMap::<ElementInvariant, u32>::new();
            for &i in self.element_invariants() {
                *inv.entry(i).or_default() += 1;
            }
            Fingerprint {
                order: self.order,
                element_orders: element_orders.into_iter().collect(),
                classes: class_data,
                center_order: self.center().len(),
                derived_order: self.derived_subgroup().len(),
                abelian: self.is_abelian(),
                element_invariants: inv.into_iter().collect(),
            }
        })
    }

    /// Breadth-first spanning tree of the Cayley graph over the stored
    /// generators: entry `x` is `(parent, generator slot)` with
    /// `x = parent * generators[slot]`. The identity maps to itself.
    pub(crate) fn word_tree(&self) -> &[(u32, u32)] {
        self.cache.word_tree.get_or_init(|| {
            let mut tree = vec![(NONE, NONE); self.order];
            tree[self.identity] = (self.identity as u32, NONE);
            let mut queue = vec![self.identity];
            let mut i = 0;
            while i < queue.len() {
                let x = queue[i];
                for (slot, &s) in self.generators.iter().enumerate() {
                    let y = self.mul(x, s);
                    if tree[y].0 == NONE {
                        tree[y] = (x as u32, slot as u32);
                        queue.push(y);
                    }
                }
                i += 1;
            }
            tree
        })
    }

    /// Generating sequence used by the isomorphism search: each step adds the
    /// element that enlarges the generated subgroup most, ties broken by the
    /// rarer invariant and then the smaller index.
    pub(crate) fn search_generators(&self) -> &[usize] {
        self.cache.search_generators.get_or_init(|| {
            let n = self.order;
            let inv = self.element_invariants();
            let mut freq = std::collections::HashMap::<ElementInvariant, usize>::new();
            for &i in inv {
                *freq.entry(i).or_default() += 1;
            }
            let mut gens: Vec<usize> = Vec::new();
            let mut member = vec![false; n];
            member[self.identity] = true;
            let mut size = 1;
            while size < n {
                let candidates: Vec<usize> = if gens.is_empty() {
                    self.conjugacy_classes().representatives().collect()
                } else {
                    (0..n).filter(|&x| !member[x]).collect()
                };
                let mut best: Option<(SearchScore, usize)> = None;
                let mut trial = gens.clone();
                trial.push(0);
                for x in candidates {
                    if member[x] {
                        continue;
                    }
                    *trial.last_mut().unwrap() = x;
                    let s = self.closure(&trial).len();
                    let key = (std::cmp::Reverse(s), freq[&inv[x]], x);
                    if best.as_ref().is_none_or(|(k, _)| key < *k) {
                        best = Some((key, x));
                    }
                }
                let (_, x) = best.expect("a non-member exists while the subgroup is proper");
                gens.push(x);
                let sub = self.closure(&gens);
                size = sub.len();
                for y in sub {
                    member[y] = true;
                }
            }
            gens
        })
    }

    /// True when both groups have the identical multiplication table.
    pub fn same_table(&self, other: &Group) -> bool {
        self.order == other.order && self.table == other.table
    }

    /// The full table as rows, for serialization and display.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Left-regular permutation image of `x`: `y -> x * y`.
    pub fn left_regular(&self, x: usize) -> Vec<usize> {
        (0..self.order).map(|y| self.mul(x, y)).collect()
    }
}

fn find_identity(n: usize, table: &[u32]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_table_rejects_non_latin() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(Group::from_table(&rows), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn from_table_rejects_non_associative() {
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(Group::from_table(&rows).is_err());
    }

    #[test]
    fn from_table_accepts_z3() {
        let rows = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let g = Group::from_table(&rows).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 3);
    }

    #[test]
    fn class_equation_on_s4() {
        let g = symmetric(4).unwrap();
        let classes = g.conjugacy_classes();
        let sizes: usize = classes.classes().iter().map(Vec::len).sum();
        assert_eq!(sizes, 24);
        for x in g.elements() {
            let c = classes.class_size(classes.class_index(x));
            assert_eq!(c * g.centralizer_elements(x).len(), 24);
        }
        assert_eq!(g.derived_subgroup().len(), 12);
        assert_eq!(g.center().len(), 1);
    }

    #[test]
    fn subgroup_embedding_is_sorted_and_locates() {
        let g = symmetric(3).unwrap();
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let c = g.centralizer(t);
        assert_eq!(c.group.order(), 2);
        assert_eq!(c.group.identity(), 0);
        assert_eq!(c.locate(t), Some(1));
        c.group.validate().unwrap();
    }

    #[test]
    fn word_tree_reaches_everything() {
        let g = dihedral(8).unwrap();
        let tree = g.word_tree();
        for x in g.elements() {
            let mut y = x;
            let mut steps = 0;
            while y != g.identity() {
                let (p, s) = tree[y];
                assert_eq!(g.mul(p as usize, g.generators()[s as usize]), y);
                y = p as usize;
                steps += 1;
                assert!(steps <= 8);
            }
        }
    }
}
