use super::{CayleyGroup, GroupError, Result};
use crate::elemset::ElemSet;

/// A quotient group together with the projection onto it.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: CayleyGroup,
    /// `projection[x]` is the index of the coset containing `x`.
    pub projection: Vec<usize>,
    /// `cosets[c]` lists the elements of coset `c`; coset `0` is the subgroup.
    pub cosets: Vec<ElemSet>,
}

/// Partition of `0..n` into the right cosets `N*a`, numbered by least element.
pub(crate) fn right_cosets(
    n: usize,
    subgroup: &ElemSet,
    op: impl Fn(usize, usize) -> usize,
) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut projection = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if projection[a] != usize::MAX {
            continue;
        }
        let idx = cosets.len();
        let mut coset: Vec<usize> = subgroup.iter().map(|h| op(h, a)).collect();
        coset.sort_unstable();
        for &x in &coset {
            projection[x] = idx;
        }
        cosets.push(coset);
    }
    (projection, cosets)
}

impl CayleyGroup {
    /// `G/N` on the cosets of a normal subgroup, the coset of `0` numbered `0`.
    pub fn quotient(&self, normal: &ElemSet) -> Result<Quotient> {
        if !self.is_subgroup(normal) {
            return Err(GroupError::NotASubgroup(normal.clone()));
        }
        if !self.is_normalized_by_all(normal) {
            return Err(GroupError::NotNormal(normal.clone()));
        }
        let (projection, cosets) = right_cosets(self.order, normal, |h, a| self.op(h, a));
        let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
        let group =
            CayleyGroup::from_fn(cosets.len(), |c, d| projection[self.op(reps[c], reps[d])])?;
        Ok(Quotient {
            group,
            projection,
            cosets: cosets.into_iter().map(ElemSet::new).collect(),
        })
    }
}
