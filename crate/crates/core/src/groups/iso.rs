//! Exact isomorphism testing by backtracking over generator images.
//!
//! The domain group is walked along a fixed generating sequence. At each level
//! the image of the next generator is chosen among codomain elements with the
//! same [`ElementInvariant`](super::ElementInvariant), one per orbit under
//! conjugation by the centralizer of the images already fixed (composing with
//! such an inner automorphism preserves the partial map). The partial map is
//! then extended over the generated subgroup, checking every Cayley-graph edge,
//! which both prunes and certifies the homomorphism.

use super::{Group, NONE};
use crate::error::{Error, Result};
use crate::limits::DEFAULT_ISO_BUDGET;

/// Returns an isomorphism `g -> h` as an image vector, or `None` when the
/// groups are not isomorphic.
pub fn are_isomorphic(g: &Group, h: &Group) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with_budget(g, h, DEFAULT_ISO_BUDGET)
}

/// As [`are_isomorphic`] with an explicit node budget; exhausting it yields
/// [`Error::Indeterminate`].
pub fn are_isomorphic_with_budget(g: &Group, h: &Group, budget: u64) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() || g.fingerprint() != h.fingerprint() {
        return Ok(None);
    }
    let n = g.order();
    if n == 1 {
        return Ok(Some(vec![h.identity()]));
    }
    let gens = g.search_generators().to_vec();
    let inv_g = g.element_invariants();
    let inv_h = h.element_invariants();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| h.elements().filter(|&y| inv_h[y] == inv_g[x]).collect())
        .collect();
    let mut search = Search {
        g,
        h,
        gens,
        candidates,
        images: Vec::new(),
        map: vec![NONE; n],
        used: vec![false; n],
        domain: vec![g.identity()],
        nodes: 0,
        budget,
    };
    search.map[g.identity()] = h.identity() as u32;
    search.used[h.identity()] = true;
    if search.descend(0)? {
        Ok(Some(search.map.iter().map(|&v| v as usize).collect()))
    } else {
        Ok(None)
    }
}

/// True when `map` is a homomorphism `g -> h`.
pub fn is_homomorphism(g: &Group, h: &Group, map: &[usize]) -> bool {
    map.len() == g.order()
        && map.iter().all(|&y| y < h.order())
        && g
            .elements()
            .all(|a| g.elements().all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])))
}

struct Search<'a> {
    g: &'a Group,
    h: &'a Group,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    map: Vec<u32>,
    used: Vec<bool>,
    /// Elements of the domain subgroup mapped so far, in discovery order.
    domain: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn descend(&mut self, level: usize) -> Result<bool> {
        if level == self.gens.len() {
            return Ok(self.domain.len() == self.g.order());
        }
        let h = self.h;
        let fixers: Vec<usize> = h
            .elements()
            .filter(|&y| self.images.iter().all(|&im| h.commute(y, im)))
            .collect();
        let mut seen = vec![false; h.order()];
        let reps: Vec<usize> = self.candidates[level]
            .iter()
            .copied()
            .filter(|&c| {
                if seen[c] {
                    return false;
                }
                for &k in &fixers {
                    seen[h.conjugate(k, c)] = true;
                }
                true
            })
            .collect();
        for c in reps {
            if self.used[c] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Indeterminate {
                    order: self.g.order(),
                    budget: self.budget,
                });
            }
            let mark = self.domain.len();
            self.images.push(c);
            if self.extend(level, mark) && self.descend(level + 1)? {
                return Ok(true);
            }
            self.images.pop();
            for &y in &self.domain[mark..] {
                self.used[self.map[y] as usize] = false;
                self.map[y] = NONE;
            }
            self.domain.truncate(mark);
        }
        Ok(false)
    }

    /// Extends the map over `<gens[..=level]>`. Elements found at earlier
    /// levels only need the edge for the new generator.
    fn extend(&mut self, level: usize, mark: usize) -> bool {
        let mut i = 0;
        while i < self.domain.len() {
            let y = self.domain[i];
            let range = if i < mark { level..level + 1 } else { 0..level + 1 };
            for j in range {
                let z = self.g.mul(y, self.gens[j]);
                let hz = self.h.mul(self.map[y] as usize, self.images[j]);
                if self.map[z] == NONE {
                    if self.used[hz] {
                        return false;
                    }
                    self.map[z] = hz as u32;
                    self.used[hz] = true;
                    self.domain.push(z);
                } else if self.map[z] as usize != hz {
                    return false;
                }
            }
            i += 1;
        }
        true
    }
}
