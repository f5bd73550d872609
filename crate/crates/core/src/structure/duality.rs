use std::collections::BTreeMap;

use super::automorphism_split::decompose_automorphism;
use super::{solve_cocycle, violated, Hypothesis, Result, StructureError};
use crate::arith::is_prime;
use crate::elemset::ElemSet;
use crate::finite_group::CayleyGroup;
use crate::skew_brace::SkewBrace;

/// Everything computed on the way to σ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityAnalysis {
    /// The complement `Q` of `M` in the additive group.
    pub complement: ElemSet,
    /// `τ(m)`, with `γ(m) = ι(τ(m))` for each `m ∈ M`.
    pub tau: BTreeMap<usize, usize>,
    /// `τ(g) = g^t` for the least generator `g` of `M`.
    pub tau_exponent: usize,
    /// `σ = -t mod p`, so `γ(m) = ι(m^(-σ))`.
    pub sigma: usize,
}

/// Lexicographically least subgroup `Q` with `Q ∩ M = 1` and `|Q|·|M| = |G|`.
pub fn find_complement(g: &CayleyGroup, m: &ElemSet) -> Option<ElemSet> {
    g.subgroups()
        .iter()
        .find(|q| q.len() * m.len() == g.order() && q.intersection(m).len() == 1)
        .cloned()
}

/// The σ-dichotomy for an ideal `M` of prime order `p` that is characteristic
/// in `(B, ·)` and meets its center trivially.
///
/// Each `γ(m)` is decomposed over `Q ⋉ M`; the diagonal parts must be trivial
/// and the off-diagonal cocycle is solved to get `γ(m) = ι(τ(m))`. Then
/// `τ ∈ End(M) = Z/p`, and `σ = -τ` must be `0` (so `M ≤ ker γ`) or `1` (so
/// `M ≤ ker γ̄`).
pub fn duality_analysis(b: &SkewBrace, m: &ElemSet) -> Result<DualityAnalysis> {
    let add = b.add_group();
    let p = m.len();
    if !is_prime(p) {
        return Err(StructureError::HypothesisFailed(Hypothesis::NotPrimeOrder));
    }
    if !b.is_ideal(m) {
        return Err(StructureError::HypothesisFailed(Hypothesis::NotAnIdeal));
    }
    if !add.is_characteristic(m) {
        return Err(StructureError::HypothesisFailed(
            Hypothesis::NotCharacteristic,
        ));
    }
    if m.intersection(&add.center()).len() != 1 {
        return Err(StructureError::HypothesisFailed(Hypothesis::MeetsCenter));
    }
    let q = find_complement(add, m)
        .ok_or(StructureError::HypothesisFailed(Hypothesis::NoComplement))?;

    let mut tau = BTreeMap::new();
    for h in m.iter() {
        let theta = b.gamma(h);
        let dec = decompose_automorphism(add, &q, m, theta)?;
        if !dec.a_is_identity() {
            return Err(violated(format!(
                "a({h}) = 1: γ({h}) has p-power order on M of order p"
            )));
        }
        if !dec.d_is_identity() {
            return Err(violated(format!("d({h}) = 1: [γ(M), B] ≤ M")));
        }
        let image = solve_cocycle(add, &q, m, &dec.b)?
            .ok_or_else(|| violated(format!("b({h}) is a coboundary")))?;
        if &add.inner_automorphism(image) != theta {
            return Err(violated(format!("γ({h}) = ι(τ({h}))")));
        }
        tau.insert(h, image);
    }

    let gen = m.iter().find(|&x| x != 0).expect("M has prime order");
    let t = (0..p)
        .find(|&t| add.pow(gen, t) == tau[&gen])
        .ok_or_else(|| violated("τ(g) lies in M"))?;
    for i in 0..p {
        if tau[&add.pow(gen, i)] != add.pow(gen, (i * t) % p) {
            return Err(violated("τ is an endomorphism of M"));
        }
    }
    let sigma = (p - t) % p;
    if sigma > 1 {
        return Err(StructureError::SigmaOutOfRange { sigma, prime: p });
    }
    let kernel_ok = if sigma == 0 {
        m.is_subset(&b.gamma_kernel())
    } else {
        m.iter().all(|h| b.opposite_gamma(h).is_identity())
    };
    if !kernel_ok {
        return Err(violated(format!(
            "σ = {sigma} places M in the corresponding gamma kernel"
        )));
    }
    Ok(DualityAnalysis {
        complement: q,
        tau,
        tau_exponent: t,
        sigma,
    })
}

/// `σ ∈ {0, 1}` for the ideal `M`; see [`duality_analysis`].
pub fn duality_sigma(b: &SkewBrace, m: &ElemSet) -> Result<usize> {
    duality_analysis(b, m).map(|d| d.sigma)
}
