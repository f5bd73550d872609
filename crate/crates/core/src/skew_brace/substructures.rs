use super::{BraceError, Result, SkewBrace};
use crate::elemset::ElemSet;

/// The three conditions of which any two make a subset a sub-skew brace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubBraceConditions {
    /// `(A, ·)` is a subgroup of the additive group.
    pub add_sub: bool,
    /// `(A, ∘)` is a subgroup of the multiplicative group.
    pub mul_sub: bool,
    /// `γ(a)` maps `A` into itself for every `a ∈ A`.
    pub gamma_inv: bool,
}

impl SubBraceConditions {
    pub fn count(&self) -> usize {
        [self.add_sub, self.mul_sub, self.gamma_inv]
            .iter()
            .filter(|&&b| b)
            .count()
    }
}

impl SkewBrace {
    fn in_range(&self, a: &ElemSet) -> bool {
        a.iter().all(|x| x < self.order())
    }

    /// `A` is invariant under `γ(z)` for every `z` in `by`.
    pub fn is_gamma_invariant(&self, a: &ElemSet, by: &ElemSet) -> bool {
        self.in_range(a)
            && by
                .iter()
                .all(|z| a.iter().all(|x| a.contains(self.gamma(z).apply(x))))
    }

    pub fn two_of_three(&self, a: &ElemSet) -> SubBraceConditions {
        SubBraceConditions {
            add_sub: self.add_group().is_subgroup(a),
            mul_sub: self.mul_group().is_subgroup(a),
            gamma_inv: self.is_gamma_invariant(a, a),
        }
    }

    /// Closed under both operations (hence a sub-skew brace).
    pub fn is_sub_brace(&self, a: &ElemSet) -> bool {
        self.add_group().is_subgroup(a) && self.mul_group().is_subgroup(a)
    }

    /// Normal in both groups and invariant under all of `γ(B)`.
    pub fn is_ideal(&self, i: &ElemSet) -> bool {
        self.add_group().is_normal(i)
            && self.mul_group().is_normal(i)
            && self.is_gamma_invariant(i, &ElemSet::full(self.order()))
    }

    /// An additive subgroup invariant under all of `γ(B)`.
    pub fn is_left_ideal(&self, i: &ElemSet) -> bool {
        self.add_group().is_subgroup(i) && self.is_gamma_invariant(i, &ElemSet::full(self.order()))
    }

    /// All sub-skew braces, sorted: the sets that are subgroups of both groups.
    pub fn sub_braces(&self) -> Vec<ElemSet> {
        let mul = self.mul_group().subgroups();
        self.add_group()
            .subgroups()
            .iter()
            .filter(|s| mul.binary_search(s).is_ok())
            .cloned()
            .collect()
    }

    pub fn ideals(&self) -> Vec<ElemSet> {
        self.sub_braces()
            .into_iter()
            .filter(|s| self.is_ideal(s))
            .collect()
    }

    pub fn left_ideals(&self) -> Vec<ElemSet> {
        self.add_group()
            .subgroups()
            .iter()
            .filter(|s| self.is_left_ideal(s))
            .cloned()
            .collect()
    }

    /// The sub-skew brace on `a`, elements numbered by position in `a`.
    pub fn restrict(&self, a: &ElemSet) -> Result<SkewBrace> {
        if !self.is_sub_brace(a) {
            return Err(BraceError::NotASubBrace(a.clone()));
        }
        let add = self
            .add_group()
            .restrict(a)
            .map_err(BraceError::AddNotGroup)?;
        let mul = self
            .mul_group()
            .restrict(a)
            .map_err(BraceError::MulNotGroup)?;
        SkewBrace::new(add, mul)
    }
}
