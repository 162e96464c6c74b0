use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, MutexGuard};

use serde::{Deserialize, Serialize};

use super::{are_isomorphic_with_budget, build_group, dihedral, indecomposable_factors, symmetric, Fingerprint, Group};
use crate::error::{Error, Result};
use crate::limits::{DEFAULT_ISO_BUDGET, KRULL_SCHMIDT_CAP};

/// Registry ordinal of an isomorphism class of finite groups. Id 0 is the
/// trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupClassId(pub u32);

impl GroupClassId {
    pub const TRIVIAL: GroupClassId = GroupClassId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GroupClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

struct Entry {
    group: Arc<Group>,
    label: Option<String>,
    name: Option<String>,
}

struct Inner {
    entries: Vec<Entry>,
    buckets: HashMap<Fingerprint, Vec<GroupClassId>>,
}

/// First-seen registry of group isomorphism classes.
///
/// All registration goes through an internal mutex; ids depend only on the
/// sequence of registration calls.
pub struct Registry {
    inner: Mutex<Inner>,
    iso_budget: u64,
}

impl Default for Registry {
    fn default() -> Self {
        Self::new()
    }
}

/// Serializable registry contents: one permutation presentation per class, in
/// id order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegistrySnapshot {
    pub classes: Vec<SnapshotClass>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SnapshotClass {
    pub id: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::with_budget(DEFAULT_ISO_BUDGET)
    }

    pub fn with_budget(iso_budget: u64) -> Self {
        let registry = Registry {
            inner: Mutex::new(Inner {
                entries: Vec::new(),
                buckets: HashMap::new(),
            }),
            iso_budget,
        };
        let trivial = build_group(&[], 1).expect("trivial group").with_label("e");
        registry.canonical_class(&trivial).expect("trivial group registers");
        registry
    }

    fn lock(&self) -> MutexGuard<'_, Inner> {
        self.inner.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn len(&self) -> usize {
        self.lock().entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Id of the first registered group isomorphic to `g`, registering `g` if
    /// it is new.
    pub fn canonical_class(&self, g: &Group) -> Result<GroupClassId> {
        if let Some(id) = self.lookup(g)? {
            return Ok(id);
        }
        self.register(g)
    }

    /// Id of a registered class isomorphic to `g`, without registering.
    pub fn lookup(&self, g: &Group) -> Result<Option<GroupClassId>> {
        let fp = g.fingerprint().clone();
        let inner = self.lock();
        if let Some(bucket) = inner.buckets.get(&fp) {
            for &id in bucket {
                let rep = &inner.entries[id.index()].group;
                if are_isomorphic_with_budget(rep, g, self.iso_budget)?.is_some() {
                    return Ok(Some(id));
                }
            }
        }
        Ok(None)
    }

    fn register(&self, g: &Group) -> Result<GroupClassId> {
        let fp = g.fingerprint().clone();
        let mut inner = self.lock();
        // Another caller may have registered an isomorphic group since lookup.
        if let Some(bucket) = inner.buckets.get(&fp) {
            for &id in bucket {
                let rep = &inner.entries[id.index()].group;
                if are_isomorphic_with_budget(rep, g, self.iso_budget)?.is_some() {
                    return Ok(id);
                }
            }
        }
        let id = GroupClassId(inner.entries.len() as u32);
        inner.entries.push(Entry {
            group: Arc::new(g.clone()),
            label: g.label().map(str::to_string),
            name: None,
        });
        inner.buckets.entry(fp).or_default().push(id);
        Ok(id)
    }

    pub fn representative(&self, id: GroupClassId) -> Arc<Group> {
        self.lock().entries[id.index()].group.clone()
    }

    pub fn order(&self, id: GroupClassId) -> usize {
        self.lock().entries[id.index()].group.order()
    }

    pub fn label(&self, id: GroupClassId) -> Option<String> {
        self.lock().entries[id.index()].label.clone()
    }

    /// Display name of a class: `C<n>` for cyclic groups, direct factors
    /// joined by `x` in order of size for abelian or decomposable groups, the
    /// registration label or a recognized `S<n>`/`D<n>` otherwise, and
    /// `G<order>#<id>` as a last resort.
    pub fn name(&self, id: GroupClassId) -> String {
        if let Some(n) = &self.lock().entries[id.index()].name {
            return n.clone();
        }
        let name = self.compute_name(id, 0);
        self.lock().entries[id.index()].name = Some(name.clone());
        name
    }

    fn compute_name(&self, id: GroupClassId, depth: usize) -> String {
        let (group, label) = {
            let inner = self.lock();
            let e = &inner.entries[id.index()];
            (e.group.clone(), e.label.clone())
        };
        let n = group.order();
        if n == 1 {
            return "e".into();
        }
        if group.element_orders().iter().any(|&o| o as usize == n) {
            return format!("C{n}");
        }
        if depth == 0 && n <= KRULL_SCHMIDT_CAP {
            if let Ok(factors) = indecomposable_factors(self, &group) {
                if factors.len() > 1 {
                    let mut named: Vec<(usize, String)> = factors
                        .iter()
                        .map(|&f| (self.order(f), self.compute_name(f, depth + 1)))
                        .collect();
                    named.sort();
                    return named.into_iter().map(|(_, n)| n).collect::<Vec<_>>().join("x");
                }
            }
        }
        if let Some(l) = label {
            return l;
        }
        recognize(&group, self.iso_budget).unwrap_or_else(|| format!("G{n}#{}", id.0))
    }

    pub fn snapshot(&self) -> RegistrySnapshot {
        let inner = self.lock();
        let classes = inner
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let (degree, generators) = match e.group.provenance() {
                    Some(p) => (p.degree, p.generators.clone()),
                    None => {
                        let g = &e.group;
                        let gens = g.generators().iter().map(|&x| g.left_regular(x)).collect();
                        (g.order(), gens)
                    }
                };
                SnapshotClass {
                    id: i as u32,
                    label: e.label.clone(),
                    degree,
                    generators,
                }
            })
            .collect();
        RegistrySnapshot { classes }
    }

    /// Rebuilds a registry by replaying registrations in id order.
    pub fn replay(snapshot: &RegistrySnapshot) -> Result<Registry> {
        let registry = Registry::new();
        for class in &snapshot.classes {
            let mut g = build_group(&class.generators, class.degree)?;
            if let Some(l) = &class.label {
                g = g.with_label(l.clone());
            }
            let id = registry.canonical_class(&g)?;
            if id.0 != class.id {
                return Err(Error::Parse(format!(
                    "registry replay assigned id {} to snapshot class {}",
                    id.0, class.id
                )));
            }
        }
        Ok(registry)
    }
}

/// Names an unlabeled non-cyclic group that is a symmetric or dihedral group.
fn recognize(g: &Group, budget: u64) -> Option<String> {
    let n = g.order();
    let mut candidates = Vec::new();
    let (mut k, mut f) = (1, 1);
    while f < n {
        k += 1;
        f *= k;
    }
    if f == n && k >= 3 {
        candidates.push((symmetric(k), format!("S{k}")));
    }
    if n >= 8 && n.is_multiple_of(2) {
        candidates.push((dihedral(n), format!("D{n}")));
    }
    candidates.into_iter().find_map(|(h, name)| {
        let h = h.ok()?;
        matches!(are_isomorphic_with_budget(&h, g, budget), Ok(Some(_))).then_some(name)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, direct_product, klein_four, symmetric};

    #[test]
    fn trivial_is_zero() {
        let r = Registry::new();
        assert_eq!(r.canonical_class(&cyclic(1).unwrap()).unwrap(), GroupClassId::TRIVIAL);
        assert_eq!(r.name(GroupClassId::TRIVIAL), "e");
    }

    #[test]
    fn isomorphic_groups_share_ids() {
        let r = Registry::new();
        let c6 = r.canonical_class(&cyclic(6).unwrap()).unwrap();
        let p = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert_eq!(r.canonical_class(&p).unwrap(), c6);
        let s3 = r.canonical_class(&symmetric(3).unwrap()).unwrap();
        assert_ne!(s3, c6);
        assert_eq!(r.len(), 3);
    }

    #[test]
    fn names() {
        let r = Registry::new();
        let v = r.canonical_class(&klein_four().unwrap()).unwrap();
        assert_eq!(r.name(v), "C2xC2");
        let s3 = r.canonical_class(&symmetric(3).unwrap()).unwrap();
        assert_eq!(r.name(s3), "S3");
        let p = r
            .canonical_class(&direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).unwrap())
            .unwrap();
        assert_eq!(r.name(p), "C2xS3");
    }

    #[test]
    fn unlabeled_symmetric_and_dihedral_groups_are_recognized() {
        let r = Registry::new();
        for (g, name) in [(symmetric(3).unwrap(), "S3"), (crate::groups::dihedral(8).unwrap(), "D8")] {
            let unlabeled = g.subgroup(&g.elements().collect::<Vec<_>>()).group;
            assert!(unlabeled.label().is_none());
            let id = r.canonical_class(&unlabeled).unwrap();
            assert_eq!(r.name(id), name);
        }
    }

    #[test]
    fn snapshot_replay_preserves_ids() {
        let r = Registry::new();
        for g in [symmetric(3).unwrap(), cyclic(4).unwrap(), klein_four().unwrap()] {
            r.canonical_class(&g).unwrap();
        }
        let snap = r.snapshot();
        let json = serde_json::to_string(&snap).unwrap();
        let back: RegistrySnapshot = serde_json::from_str(&json).unwrap();
        let r2 = Registry::replay(&back).unwrap();
        assert_eq!(r2.len(), 4);
        assert_eq!(r2.canonical_class(&cyclic(4).unwrap()).unwrap(), GroupClassId(2));
    }
}
