use std::collections::BTreeMap;

use super::{violated, Result, StructureError};
use crate::elemset::ElemSet;
use crate::finite_group::CayleyGroup;
use crate::perm::Perm;

/// An automorphism `θ` of an internal semidirect product `G = Q ⋉ M`, `M`
/// abelian, written as the upper-triangular matrix `[[d, b], [0, a]]`:
/// `θ(kh) = k^d · k^b · h^a` for `k ∈ Q`, `h ∈ M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismDecomposition {
    pub complement: ElemSet,
    pub normal: ElemSet,
    /// `Q → Q`.
    pub d: BTreeMap<usize, usize>,
    /// `Q → M`.
    pub b: BTreeMap<usize, usize>,
    /// `M → M`.
    pub a: BTreeMap<usize, usize>,
}

impl AutomorphismDecomposition {
    /// The automorphism `kh ↦ k^d k^b h^a`.
    pub fn recompose(&self, g: &CayleyGroup) -> Perm {
        let mut images = vec![usize::MAX; g.order()];
        for k in self.complement.iter() {
            let kdkb = g.op(self.d[&k], self.b[&k]);
            for h in self.normal.iter() {
                images[g.op(k, h)] = g.op(kdkb, self.a[&h]);
            }
        }
        Perm::from_images(images).expect("Q·M covers G exactly once")
    }

    /// `(h^k)^a = (h^a)^(k^d)` for all `h ∈ M`, `k ∈ Q`.
    pub fn compatibility_holds(&self, g: &CayleyGroup) -> bool {
        self.complement.iter().all(|k| {
            self.normal
                .iter()
                .all(|h| self.a[&g.conj(h, k)] == g.conj(self.a[&h], self.d[&k]))
        })
    }

    /// `(xy)^b = (x^b)^(y^d) · y^b` for all `x, y ∈ Q`.
    pub fn cocycle_law_holds(&self, g: &CayleyGroup) -> bool {
        self.complement.iter().all(|x| {
            self.complement
                .iter()
                .all(|y| self.b[&g.op(x, y)] == g.op(g.conj(self.b[&x], self.d[&y]), self.b[&y]))
        })
    }

    pub fn d_is_identity(&self) -> bool {
        self.d.iter().all(|(k, v)| k == v)
    }

    pub fn a_is_identity(&self) -> bool {
        self.a.iter().all(|(k, v)| k == v)
    }
}

/// Checks that `G = Q ⋉ M` internally with `M` abelian.
pub(crate) fn check_internal_semidirect(g: &CayleyGroup, q: &ElemSet, m: &ElemSet) -> Result<()> {
    let fail = |why: &str| Err(StructureError::NotInternalSemidirect(why.to_string()));
    if !g.is_subgroup(q) {
        return fail("Q is not a subgroup");
    }
    if !g.is_normal(m) {
        return fail("M is not a normal subgroup");
    }
    if !m.iter().all(|x| m.iter().all(|y| g.op(x, y) == g.op(y, x))) {
        return fail("M is not abelian");
    }
    if q.intersection(m).len() != 1 || q.len() * m.len() != g.order() {
        return fail("Q and M are not complementary");
    }
    Ok(())
}

/// Splits `θ ∈ Aut(G)` with `θ(M) = M` into `(d, b, a)` and re-checks both
/// matrix laws and the exact recomposition.
pub fn decompose_automorphism(
    g: &CayleyGroup,
    q: &ElemSet,
    m: &ElemSet,
    theta: &Perm,
) -> Result<AutomorphismDecomposition> {
    if !g.is_automorphism(theta) {
        return Err(StructureError::NotAnAutomorphism);
    }
    check_internal_semidirect(g, q, m)?;
    if !m.iter().all(|h| m.contains(theta.apply(h))) {
        return Err(StructureError::ThetaDoesNotPreserveM);
    }
    let mut d = BTreeMap::new();
    let mut b = BTreeMap::new();
    for k in q.iter() {
        let image = theta.apply(k);
        // θ(k) = k^d · k^b with k^d ∈ Q, k^b ∈ M, uniquely.
        let kd = q
            .iter()
            .find(|&c| m.contains(g.op(g.inv(c), image)))
            .ok_or_else(|| violated("θ(k) has no Q·M factorisation"))?;
        d.insert(k, kd);
        b.insert(k, g.op(g.inv(kd), image));
    }
    let a = m.iter().map(|h| (h, theta.apply(h))).collect();
    let dec = AutomorphismDecomposition {
        complement: q.clone(),
        normal: m.clone(),
        d,
        b,
        a,
    };
    if !dec.compatibility_holds(g) {
        return Err(violated("compatibility (h^k)^a = (h^a)^(k^d)"));
    }
    if !dec.cocycle_law_holds(g) {
        return Err(violated("twisted cocycle law (xy)^b = (x^b)^(y^d) y^b"));
    }
    if &dec.recompose(g) != theta {
        return Err(violated("recomposition kh ↦ k^d k^b h^a"));
    }
    Ok(dec)
}

/// All `(Q, M)` with `M` abelian and characteristic in `G` and `Q` a
/// complement of `M`, in lexicographic order.
pub fn characteristic_abelian_splittings(g: &CayleyGroup) -> Vec<(ElemSet, ElemSet)> {
    let subs = g.subgroups();
    let mut out = Vec::new();
    for m in subs {
        if m.len() == 1 || m.len() == g.order() || !g.is_characteristic(m) {
            continue;
        }
        for q in subs {
            if check_internal_semidirect(g, q, m).is_ok() {
                out.push((q.clone(), m.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::tests::s3;

    #[test]
    fn identity_and_inner() {
        let g = s3();
        let q = ElemSet::new([3]);
        let m = ElemSet::new([1, 2]);
        let dec = decompose_automorphism(&g, &q, &m, &Perm::identity(6)).unwrap();
        assert!(dec.d_is_identity() && dec.a_is_identity());
        assert!(dec.b.values().all(|&v| v == 0));
        for h in m.iter() {
            let dec = decompose_automorphism(&g, &q, &m, &g.inner_automorphism(h)).unwrap();
            assert!(dec.d_is_identity() && dec.a_is_identity());
            for k in q.iter() {
                assert_eq!(dec.b[&k], g.commutator(k, h));
            }
        }
    }

    #[test]
    fn s3_transposition_and_three_cycle() {
        let g = s3();
        let (t, c) = (3, 1);
        let dec = decompose_automorphism(
            &g,
            &ElemSet::new([t]),
            &ElemSet::new([1, 2]),
            &g.inner_automorphism(c),
        )
        .unwrap();
        let expected = g.op(g.op(g.inv(t), g.inv(c)), g.op(t, c));
        assert_eq!(dec.b[&t], expected);
        assert_eq!(g.element_order(expected), 3);
    }

    #[test]
    fn errors() {
        let g = s3();
        let q = ElemSet::new([3]);
        let m = ElemSet::new([1, 2]);
        let not_aut = Perm::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert_eq!(
            decompose_automorphism(&g, &q, &m, &not_aut),
            Err(StructureError::NotAnAutomorphism)
        );
        assert!(matches!(
            decompose_automorphism(
                &g,
                &ElemSet::new([4]),
                &ElemSet::new([3]),
                &Perm::identity(6)
            ),
            Err(StructureError::NotInternalSemidirect(_))
        ));
    }
}
