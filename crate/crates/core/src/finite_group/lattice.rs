use std::collections::BTreeMap;

use super::{CayleyGroup, GroupError, Result};
use crate::arith::{is_pi_number, is_pi_prime_number};
use crate::elemset::ElemSet;

/// Flags of a subgroup, each computed from its definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupProps {
    pub is_subgroup: bool,
    pub is_normal: bool,
    pub is_characteristic: bool,
    pub is_central: bool,
}

impl CayleyGroup {
    /// The subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> ElemSet {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push(y);
                }
            }
        }
        ElemSet::from_mask(&mask)
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        if s.iter().any(|x| x >= self.order) {
            return false;
        }
        let mask = s.mask(self.order);
        // Finite and closed under the product is enough.
        s.iter().all(|x| s.iter().all(|y| mask[self.op(x, y)]))
    }

    /// Closed under conjugation by every element. Does not check the subgroup property.
    pub fn is_normalized_by_all(&self, s: &ElemSet) -> bool {
        let mask = s.mask(self.order);
        self.elements()
            .all(|g| s.iter().all(|x| mask[self.conj(x, g)]))
    }

    pub fn is_normal(&self, s: &ElemSet) -> bool {
        self.is_subgroup(s) && self.is_normalized_by_all(s)
    }

    /// Subgroup invariant under every automorphism.
    pub fn is_characteristic(&self, s: &ElemSet) -> bool {
        self.is_subgroup(s)
            && self
                .automorphism_group()
                .iter()
                .all(|a| s.iter().all(|x| s.contains(a.apply(x))))
    }

    pub fn subgroup_props(&self, s: &ElemSet) -> Result<SubgroupProps> {
        if !self.is_subgroup(s) {
            return Err(GroupError::NotASubgroup(s.clone()));
        }
        Ok(SubgroupProps {
            is_subgroup: true,
            is_normal: self.is_normalized_by_all(s),
            is_characteristic: self.is_characteristic(s),
            is_central: s.is_subset(&self.center()),
        })
    }

    /// All subgroups, sorted lexicographically. Cached after the first call.
    ///
    /// Starts from the cyclic subgroups and closes the family under joins with
    /// cyclic subgroups; every subgroup is such a join.
    pub fn subgroups(&self) -> &[ElemSet] {
        self.subgroups.get_or_init(|| {
            let mut cyclic: BTreeMap<ElemSet, usize> = BTreeMap::new();
            for x in self.elements() {
                cyclic.entry(self.generated(&[x])).or_insert(x);
            }
            let cyclic: Vec<(ElemSet, usize)> = cyclic.into_iter().collect();
            let mut known: BTreeMap<ElemSet, Vec<usize>> =
                cyclic.iter().map(|(c, g)| (c.clone(), vec![*g])).collect();
            let mut frontier: Vec<ElemSet> = known.keys().cloned().collect();
            while let Some(h) = frontier.pop() {
                let gens = known[&h].clone();
                for (c, g) in &cyclic {
                    if c.is_subset(&h) {
                        continue;
                    }
                    let mut joined = gens.clone();
                    joined.push(*g);
                    let k = self.generated(&joined);
                    if !known.contains_key(&k) {
                        known.insert(k.clone(), joined);
                        frontier.push(k);
                    }
                }
            }
            known.into_keys().collect()
        })
    }

    pub fn normal_subgroups(&self) -> Vec<ElemSet> {
        self.subgroups()
            .iter()
            .filter(|s| self.is_normalized_by_all(s))
            .cloned()
            .collect()
    }

    /// Minimal nontrivial normal subgroups.
    pub fn minimal_normal_subgroups(&self) -> Vec<ElemSet> {
        let normal: Vec<ElemSet> = self
            .normal_subgroups()
            .into_iter()
            .filter(|s| s.len() > 1)
            .collect();
        normal
            .iter()
            .filter(|s| !normal.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
            .cloned()
            .collect()
    }

    /// Subgroups of π-number order and π′-number index. For `primes = [p]`
    /// these are the Sylow `p`-subgroups.
    pub fn hall_subgroups(&self, primes: &[usize]) -> Vec<ElemSet> {
        self.subgroups()
            .iter()
            .filter(|s| {
                is_pi_number(s.len(), primes) && is_pi_prime_number(self.order / s.len(), primes)
            })
            .cloned()
            .collect()
    }

    pub fn sylow_subgroups(&self, p: usize) -> Vec<ElemSet> {
        self.hall_subgroups(&[p])
    }
}
