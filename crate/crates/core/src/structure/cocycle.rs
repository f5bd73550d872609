use std::collections::BTreeMap;

use super::{violated, Result, StructureError};
use crate::arith::{gcd, is_prime};
use crate::elemset::ElemSet;
use crate::finite_group::CayleyGroup;

/// A map `Q → M`, keyed by the elements of `Q`.
pub type Cocycle = BTreeMap<usize, usize>;

/// The inner cocycle `x ↦ [x, m] = x⁻¹ m⁻¹ x m` on `Q`.
pub fn coboundary(g: &CayleyGroup, q: &ElemSet, m: usize) -> Cocycle {
    q.iter().map(|x| (x, g.commutator(x, m))).collect()
}

fn check_preconditions(g: &CayleyGroup, q: &ElemSet, m: &ElemSet, b: &Cocycle) -> Result<()> {
    let fail = |why: &str| Err(StructureError::CocyclePrecondition(why.to_string()));
    if !g.is_subgroup(q) || !g.is_subgroup(m) {
        return fail("Q and M must be subgroups");
    }
    if !m.iter().all(|x| m.iter().all(|y| g.op(x, y) == g.op(y, x))) {
        return fail("M is not abelian");
    }
    if !q.iter().all(|k| m.iter().all(|h| m.contains(g.conj(h, k)))) {
        return fail("Q does not normalise M");
    }
    if gcd(q.len(), m.len()) != 1 {
        return fail("|Q| and |M| are not coprime");
    }
    if b.len() != q.len() || !q.iter().all(|x| b.get(&x).is_some_and(|&v| m.contains(v))) {
        return fail("b is not a map from Q to M");
    }
    for x in q.iter() {
        for y in q.iter() {
            if b[&g.op(x, y)] != g.op(g.conj(b[&x], y), b[&y]) {
                return Err(StructureError::NotACocycle { x, y });
            }
        }
    }
    Ok(())
}

/// Finds `m ∈ M` with `b(x) = [x, m]` for all `x ∈ Q`.
///
/// For `|M|` prime this follows the elementary argument: `b` vanishes on the
/// centraliser `C = C_Q(M)`, `Q/C` is cyclic with generator `tC`, and `b` is
/// determined by `b(t)`, so it suffices to match `b(t)` against the `|M|`
/// coboundaries. Other orders fall back to trying every `m`.
pub fn solve_cocycle(
    g: &CayleyGroup,
    q: &ElemSet,
    m: &ElemSet,
    b: &Cocycle,
) -> Result<Option<usize>> {
    check_preconditions(g, q, m, b)?;
    let matches = |cand: usize| q.iter().all(|x| g.commutator(x, cand) == b[&x]);
    if !is_prime(m.len()) {
        return Ok(m.iter().find(|&c| matches(c)));
    }
    let c = g.centralizer_in(q, m);
    if c.iter().any(|x| b[&x] != 0) {
        return Err(violated(
            "b restricted to C_Q(M) is a nontrivial morphism of coprime order",
        ));
    }
    if c.len() == q.len() {
        return Ok(Some(0));
    }
    let index = q.len() / c.len();
    let coset_order = |x: usize| {
        let mut k = 1;
        let mut y = x;
        while !c.contains(y) {
            y = g.op(y, x);
            k += 1;
        }
        k
    };
    let t = q
        .iter()
        .find(|&x| coset_order(x) == index)
        .ok_or_else(|| violated("Q/C_Q(M) is not cyclic"))?;
    // (t^i c)^b = (t^b)^(1 + t + ... + t^(i-1)).
    let tb = b[&t];
    let mut power = 0;
    let mut acc = 0;
    for _ in 0..index {
        for cc in c.iter() {
            if b[&g.op(power, cc)] != acc {
                return Err(violated(
                    "b is not determined by its value at the generator t",
                ));
            }
        }
        acc = g.op(acc, g.conj(tb, power));
        power = g.op(power, t);
    }
    Ok(m.iter()
        .find(|&cand| g.commutator(t, cand) == tb && matches(cand)))
}
