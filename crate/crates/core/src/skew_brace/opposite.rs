use super::SkewBrace;
use crate::finite_group::CayleyGroup;
use crate::perm::Perm;

impl SkewBrace {
    /// The opposite brace: same additive group, `x ∘̄ y = (x⁻¹ ∘ y⁻¹)⁻¹` with
    /// additive inverses. Its gamma function is `γ̄(y) = γ(y⁻¹) ι(y⁻¹)`.
    pub fn opposite(&self) -> SkewBrace {
        let n = self.order();
        let mul = CayleyGroup::from_fn(n, |x, y| self.neg(self.circ(self.neg(x), self.neg(y))))
            .expect("opposite multiplication is a group");
        SkewBrace::new(self.add_group().clone(), mul)
            .expect("opposite of a skew brace is a skew brace")
    }

    /// `γ(y⁻¹)` followed by `ι(y⁻¹)`, computed from this brace alone.
    pub fn opposite_gamma(&self, y: usize) -> Perm {
        let yi = self.neg(y);
        self.gamma(yi)
            .then(&self.add_group().inner_automorphism(yi))
    }
}
