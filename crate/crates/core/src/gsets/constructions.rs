use std::sync::Arc;

use super::GSet;
use crate::error::{Error, Result};
use crate::groups::{is_homomorphism, wreath_product, Group, WreathElement, WreathProduct};
use crate::limits::{self, saturating_pow};

/// `X^n` (or an invariant subset of it) with the action of `G_n = G^n ⋊ S_n`.
///
/// Point `i` of the G-set is the tuple `tuples[i]`.
#[derive(Clone, Debug)]
pub struct WreathPower {
    wreath: WreathProduct,
    tuples: Vec<Vec<usize>>,
    gset: GSet,
}

impl WreathPower {
    pub fn wreath(&self) -> &WreathProduct {
        &self.wreath
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn into_gset(self) -> GSet {
        self.gset
    }

    pub fn tuple(&self, point: usize) -> &[usize] {
        &self.tuples[point]
    }

    /// `(X^n)^<w>` with the action of the centralizer of `w` in `G_n`.
    pub fn fixed_set(&self, w: &WreathElement) -> Result<GSet> {
        let idx = self.wreath.encode(w)?;
        Ok(self.gset.fixed_point_gset(idx))
    }
}

impl GSet {
    pub fn point(group: Arc<Group>) -> GSet {
        GSet::from_fn(group, 1, |_, _| 0)
    }

    pub fn empty(group: Arc<Group>) -> GSet {
        GSet::from_fn(group, 0, |_, x| x)
    }

    /// `m` points, each fixed by the whole group.
    pub fn trivial(group: Arc<Group>, m: usize) -> GSet {
        GSet::from_fn(group, m, |_, x| x)
    }

    /// Left translation of the group on itself.
    pub fn regular(group: Arc<Group>) -> GSet {
        let n = group.order();
        let g = group.clone();
        GSet::from_fn(group, n, move |a, x| g.mul(a, x))
    }

    /// The defining permutation action of a group built from permutations.
    pub fn natural(group: Arc<Group>) -> Result<GSet> {
        let prov = group
            .provenance()
            .cloned()
            .ok_or_else(|| Error::Precondition("group has no permutation provenance".into()))?;
        GSet::build_sized(group, prov.degree, &prov.generators)
    }

    /// Disjoint union of two G-sets over the same group.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        if !Arc::ptr_eq(self.group(), other.group()) && !self.group().same_table(other.group()) {
            return Err(Error::Precondition("disjoint union needs a common group".into()));
        }
        let n = self.size();
        Ok(GSet::from_fn(self.group().clone(), n + other.size(), |g, x| {
            if x < n {
                self.act(g, x)
            } else {
                n + other.act(g, x - n)
            }
        }))
    }

    /// `Ind_G^H X = (H × X)/G` for `(h, x)·g = (h g, g^-1 x)`, with `H` acting
    /// by left multiplication on the first factor. `embedding[g]` is the image
    /// of `g` in `target`.
    pub fn induce(&self, target: &Arc<Group>, embedding: &[usize]) -> Result<GSet> {
        let g = self.group();
        if !is_homomorphism(g, target, embedding) {
            return Err(Error::Precondition("embedding is not a homomorphism".into()));
        }
        let mut hit = vec![false; target.order()];
        for &y in embedding {
            if std::mem::replace(&mut hit[y], true) {
                return Err(Error::Precondition("embedding is not injective".into()));
            }
        }
        let m = self.size();
        let pairs = target.order() * m;
        limits::check_points("induced G-set pairs", pairs as u128)?;
        let mut label = vec![u32::MAX; pairs];
        let mut reps: Vec<(usize, usize)> = Vec::new();
        for h in target.elements() {
            for x in 0..m {
                if label[h * m + x] != u32::MAX {
                    continue;
                }
                let id = reps.len() as u32;
                reps.push((h, x));
                for a in g.elements() {
                    let hh = target.mul(h, embedding[a]);
                    let xx = self.act(g.inv(a), x);
                    label[hh * m + xx] = id;
                }
            }
        }
        let t = target.clone();
        Ok(GSet::from_fn(target.clone(), reps.len(), move |h0, p| {
            let (h, x) = reps[p];
            label[t.mul(h0, h) * m + x] as usize
        }))
    }

    /// `X^n` with the wreath-product action: `(g, s)` applies `g_i` to
    /// coordinate `i` and then moves it to position `s(i)`.
    pub fn power_with_wreath(&self, n: usize) -> Result<WreathPower> {
        let m = self.size();
        let count = saturating_pow(m, n);
        limits::check_points("wreath power size", count)?;
        let wreath = wreath_product(self.group(), n)?;
        let count = count as usize;
        let tuples: Vec<Vec<usize>> = (0..count)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let d = code % m;
                        code /= m;
                        d
                    })
                    .collect()
            })
            .collect();
        let gset = self.wreath_action(&wreath, &tuples);
        Ok(WreathPower { wreath, tuples, gset })
    }

    fn wreath_action(&self, wreath: &WreathProduct, tuples: &[Vec<usize>]) -> GSet {
        let m = self.size();
        let decoded: Vec<WreathElement> = wreath.group().elements().map(|x| wreath.decode(x)).collect();
        GSet::from_fn(wreath.group().clone(), tuples.len(), |w, p| {
            let el = &decoded[w];
            let x = &tuples[p];
            let mut z = vec![0usize; x.len()];
            for i in 0..x.len() {
                z[el.perm[i]] = self.act(el.base[i], x[i]);
            }
            z.iter().rev().fold(0, |acc, &d| acc * m + d)
        })
    }

    /// `X^n ∖ Δ_G`: tuples whose coordinates lie in pairwise distinct
    /// `G`-orbits, with the restricted wreath action.
    pub fn configuration_gset(&self, n: usize) -> Result<WreathPower> {
        let power = self.power_with_wreath(n)?;
        let mut orbit_of = vec![0usize; self.size()];
        for (i, orbit) in self.orbits().into_iter().enumerate() {
            for x in orbit {
                orbit_of[x] = i;
            }
        }
        let keep: Vec<usize> = (0..power.tuples.len())
            .filter(|&p| {
                let t = &power.tuples[p];
                (0..t.len()).all(|i| (i + 1..t.len()).all(|j| orbit_of[t[i]] != orbit_of[t[j]]))
            })
            .collect();
        let gset = power.gset.restrict(&keep);
        let tuples = keep.iter().map(|&p| power.tuples[p].clone()).collect();
        Ok(WreathPower {
            wreath: power.wreath,
            tuples,
            gset,
        })
    }
}
