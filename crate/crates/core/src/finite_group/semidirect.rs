use super::{CayleyGroup, GroupError, Result};
use crate::perm::Perm;

/// The semidirect product `A ⋉ N` for a right action `act[a]` of `A` on `N`.
///
/// Elements are pairs `(a, x)` numbered `a * |N| + x`, so `{(a, 0)}` is the
/// complement copy of `A` and `{(0, x)} = 0..|N|` is the normal copy of `N`.
/// The product is `(a, x)(b, y) = (ab, x^b y)`, the rule for which
/// conjugation of `N` by `b` is `x ↦ x^act[b]`.
pub fn semidirect_product(a: &CayleyGroup, n: &CayleyGroup, act: &[Perm]) -> Result<CayleyGroup> {
    if act.len() != a.order() {
        return Err(GroupError::ActionSizeMismatch {
            expected: a.order(),
            got: act.len(),
        });
    }
    for (g, perm) in act.iter().enumerate() {
        if !n.is_automorphism(perm) {
            return Err(GroupError::ActionNotAutomorphism { a: g });
        }
    }
    for g in a.elements() {
        for h in a.elements() {
            if act[a.op(g, h)] != act[g].then(&act[h]) {
                return Err(GroupError::ActionNotHomomorphism { a: g, b: h });
            }
        }
    }
    let m = n.order();
    CayleyGroup::from_fn(a.order() * m, |u, v| {
        let (g, x) = (u / m, u % m);
        let (h, y) = (v / m, v % m);
        a.op(g, h) * m + n.op(act[h].apply(x), y)
    })
}
