//! Finite G-sets: a finite set of points with a validated action of a [`Group`].
//!
//! Actions with at most [`DENSE_ACTION_CAP`] (element, point) pairs are stored
//! as one point permutation per group element. Larger actions keep only the
//! generator permutations and evaluate other elements along the group's
//! Cayley-graph spanning tree.

mod constructions;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::{Group, GroupClassId, Registry, Subgroup};
use crate::limits::{self, DENSE_ACTION_CAP};
use crate::perm;

pub use constructions::WreathPower;

#[derive(Clone, Debug)]
enum Action {
    /// `table[g * size + x] = g·x`
    Dense(Vec<u32>),
    /// One permutation per stored generator slot.
    Generators(Vec<Vec<u32>>),
}

#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<Group>,
    size: usize,
    action: Action,
}

impl GSet {
    /// Builds a G-set from one point permutation per stored generator of
    /// `group`, verifying that the assignment extends to an action.
    pub fn build(group: Arc<Group>, generator_actions: &[Vec<usize>]) -> Result<GSet> {
        if generator_actions.len() != group.generators().len() {
            return Err(Error::InvalidAction(format!(
                "expected {} generator permutations, got {}",
                group.generators().len(),
                generator_actions.len()
            )));
        }
        let size = match generator_actions.first() {
            Some(p) => p.len(),
            None => 0,
        };
        GSet::build_sized(group, size, generator_actions)
    }

    /// As [`GSet::build`] with an explicit point count (needed when the group
    /// has no stored generators).
    pub fn build_sized(group: Arc<Group>, size: usize, generator_actions: &[Vec<usize>]) -> Result<GSet> {
        if generator_actions.len() != group.generators().len() {
            return Err(Error::InvalidAction(format!(
                "expected {} generator permutations, got {}",
                group.generators().len(),
                generator_actions.len()
            )));
        }
        for (i, p) in generator_actions.iter().enumerate() {
            if p.len() != size || !perm::is_permutation(p) {
                return Err(Error::InvalidAction(format!(
                    "generator action {i} is not a permutation of {size} points"
                )));
            }
        }
        limits::check_points("G-set size", size as u128)?;
        let gens: Vec<Vec<u32>> = generator_actions
            .iter()
            .map(|p| p.iter().map(|&x| x as u32).collect())
            .collect();
        let set = GSet::from_generator_perms(group, size, gens.clone());
        set.verify_relations(&gens)?;
        Ok(set)
    }

    /// Trusted constructor from generator permutations.
    pub(crate) fn from_generator_perms(group: Arc<Group>, size: usize, gens: Vec<Vec<u32>>) -> GSet {
        let n = group.order();
        if n.saturating_mul(size) > DENSE_ACTION_CAP {
            return GSet {
                group,
                size,
                action: Action::Generators(gens),
            };
        }
        let tree = group.word_tree();
        let mut table = vec![0u32; n * size];
        let e = group.identity();
        for x in 0..size {
            table[e * size + x] = x as u32;
        }
        // BFS order guarantees parents are filled first.
        let mut order: Vec<usize> = Vec::with_capacity(n);
        order.push(e);
        let mut i = 0;
        let mut placed = vec![false; n];
        placed[e] = true;
        while i < order.len() {
            let y = order[i];
            for &s in group.generators() {
                let z = group.mul(y, s);
                if !placed[z] && tree[z].0 as usize == y {
                    placed[z] = true;
                    order.push(z);
                }
            }
            i += 1;
        }
        for &z in &order[1..] {
            let (p, slot) = tree[z];
            let gen = &gens[slot as usize];
            for x in 0..size {
                table[z * size + x] = table[p as usize * size + gen[x] as usize];
            }
        }
        GSet {
            group,
            size,
            action: Action::Dense(table),
        }
    }

    /// Trusted constructor from an action function, which must be a valid action.
    pub(crate) fn from_fn(group: Arc<Group>, size: usize, f: impl Fn(usize, usize) -> usize) -> GSet {
        let n = group.order();
        if n.saturating_mul(size) > DENSE_ACTION_CAP {
            let gens = group
                .generators()
                .iter()
                .map(|&s| (0..size).map(|x| f(s, x) as u32).collect())
                .collect();
            return GSet {
                group,
                size,
                action: Action::Generators(gens),
            };
        }
        let mut table = vec![0u32; n * size];
        for g in 0..n {
            for x in 0..size {
                table[g * size + x] = f(g, x) as u32;
            }
        }
        GSet {
            group,
            size,
            action: Action::Dense(table),
        }
    }

    /// Checks `(gh)·x = g·(h·x)`: exhaustively over every Cayley-graph edge for
    /// dense actions, on 10^4 seeded random triples otherwise.
    fn verify_relations(&self, gens: &[Vec<u32>]) -> Result<()> {
        let g = &self.group;
        match &self.action {
            Action::Dense(_) => {
                for y in g.elements() {
                    for (slot, &s) in g.generators().iter().enumerate() {
                        let z = g.mul(y, s);
                        for (x, &gx) in gens[slot].iter().enumerate() {
                            if self.act(z, x) != self.act(y, gx as usize) {
                                return Err(Error::InvalidAction(format!(
                                    "generator actions violate a group relation at element {z}, point {x}"
                                )));
                            }
                        }
                    }
                }
            }
            Action::Generators(_) => {
                for (slot, &s) in g.generators().iter().enumerate() {
                    for (x, &gx) in gens[slot].iter().enumerate() {
                        if self.act(s, x) != gx as usize {
                            return Err(Error::InvalidAction(format!(
                                "generator {slot} is inconsistent with the other generators"
                            )));
                        }
                    }
                }
                if self.size > 0 {
                    let mut rng = ChaCha8Rng::seed_from_u64(0);
                    for _ in 0..10_000 {
                        let a = rng.gen_range(0..g.order());
                        let b = rng.gen_range(0..g.order());
                        let x = rng.gen_range(0..self.size);
                        if self.act(g.mul(a, b), x) != self.act(a, self.act(b, x)) {
                            return Err(Error::InvalidAction(format!(
                                "({a}*{b})·{x} differs from {a}·({b}·{x})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn generator_perms(&self) -> Vec<Vec<u32>> {
        match &self.action {
            Action::Generators(g) => g.clone(),
            Action::Dense(_) => self
                .group
                .generators()
                .iter()
                .map(|&s| (0..self.size).map(|x| self.act(s, x) as u32).collect())
                .collect(),
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// `g·x`
    pub fn act(&self, g: usize, x: usize) -> usize {
        match &self.action {
            Action::Dense(t) => t[g * self.size + x] as usize,
            Action::Generators(gens) => {
                let tree = self.group.word_tree();
                let e = self.group.identity();
                let (mut g, mut x) = (g, x);
                while g != e {
                    let (p, slot) = tree[g];
                    x = gens[slot as usize][x] as usize;
                    g = p as usize;
                }
                x
            }
        }
    }

    /// Point permutations of the stored generators, in slot order.
    pub fn generator_actions(&self) -> Vec<Vec<usize>> {
        self.generator_perms()
            .into_iter()
            .map(|p| p.into_iter().map(|x| x as usize).collect())
            .collect()
    }

    /// Orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let gens = self.generator_perms();
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for p in &gens {
                    let y = p[x] as usize;
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Number of orbits, i.e. the cardinality of `X/G`.
    pub fn quotient_size(&self) -> usize {
        self.orbits().len()
    }

    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.act(g, x) == x).collect()
    }

    /// Restriction to a `G`-invariant subset of points, renumbered in the given order.
    pub fn restrict(&self, points: &[usize]) -> GSet {
        let mut pos = vec![u32::MAX; self.size];
        for (i, &x) in points.iter().enumerate() {
            pos[x] = i as u32;
        }
        GSet::from_fn(self.group.clone(), points.len(), |g, i| {
            let y = self.act(g, points[i]);
            debug_assert!(pos[y] != u32::MAX, "restriction to a non-invariant subset");
            pos[y] as usize
        })
    }

    /// Pulls the action back along a homomorphism `hom: other -> group`
    /// (as an image vector).
    pub fn pullback(&self, other: Arc<Group>, hom: &[usize]) -> GSet {
        GSet::from_fn(other, self.size, |h, x| self.act(hom[h], x))
    }

    /// Restriction of the action to a subgroup.
    pub fn restrict_to_subgroup(&self, sub: &Subgroup) -> GSet {
        self.pullback(Arc::new(sub.group.clone()), &sub.embedding)
    }

    /// `X^<g>` with the action of the centralizer `C_G(g)`.
    pub fn fixed_point_gset(&self, g: usize) -> GSet {
        let c = self.group.centralizer(g);
        let fixed = self.fixed_points(g);
        self.restrict_to_subgroup(&c).restrict(&fixed)
    }

    pub fn stabilizer_elements(&self, x: usize) -> Vec<usize> {
        self.group.elements().filter(|&g| self.act(g, x) == x).collect()
    }

    /// The isotropy subgroup `G_x`.
    pub fn isotropy_subgroup(&self, x: usize) -> Subgroup {
        self.group.subgroup(&self.stabilizer_elements(x))
    }

    /// Points grouped by the isomorphism class of their isotropy subgroup.
    /// Stabilizers along an orbit are conjugate, so one per orbit is classified.
    pub fn isotropy_strata(&self, registry: &Registry) -> Result<BTreeMap<GroupClassId, Vec<usize>>> {
        let mut strata: BTreeMap<GroupClassId, Vec<usize>> = BTreeMap::new();
        for orbit in self.orbits() {
            let id = registry.canonical_class(&self.isotropy_subgroup(orbit[0]).group)?;
            strata.entry(id).or_default().extend(orbit);
        }
        for pts in strata.values_mut() {
            pts.sort_unstable();
        }
        Ok(strata)
    }

    /// `X^(H)`: points whose isotropy subgroup lies in class `h`.
    pub fn isotropy_stratum(&self, registry: &Registry, h: GroupClassId) -> Result<Vec<usize>> {
        Ok(self.isotropy_strata(registry)?.remove(&h).unwrap_or_default())
    }

    /// Sorted multiset of `(orbit size, isotropy class)`; equal signatures mean
    /// equivariantly isomorphic G-sets up to the group identification.
    pub fn orbit_signature(&self, registry: &Registry) -> Result<Vec<(usize, GroupClassId)>> {
        let mut sig = Vec::new();
        for orbit in self.orbits() {
            let id = registry.canonical_class(&self.isotropy_subgroup(orbit[0]).group)?;
            sig.push((orbit.len(), id));
        }
        sig.sort_unstable();
        Ok(sig)
    }

    /// Orbit data comparison used as G-set isomorphism for sets over the same group.
    pub fn equivalent(&self, other: &GSet, registry: &Registry) -> Result<bool> {
        Ok(self.size == other.size && self.orbit_signature(registry)? == other.orbit_signature(registry)?)
    }
}
