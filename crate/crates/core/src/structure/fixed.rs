use super::{Result, StructureError};
use crate::arith::is_power_of;
use crate::elemset::ElemSet;
use crate::skew_brace::SkewBrace;

/// Orbits of `γ(B)` on the Sylow `q`-subgroups of `(B, ·)`, each sorted,
/// listed by least member.
pub fn sylow_orbits_under_gamma(b: &SkewBrace, q: usize) -> Vec<Vec<ElemSet>> {
    let sylows = b.add_group().sylow_subgroups(q);
    let gammas = b.gamma_image();
    let mut seen = vec![false; sylows.len()];
    let mut orbits = Vec::new();
    for start in 0..sylows.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![sylows[start].clone()];
        seen[start] = true;
        let mut i = 0;
        while i < orbit.len() {
            for g in &gammas {
                let image = orbit[i].map(|x| g.apply(x));
                let idx = sylows
                    .binary_search(&image)
                    .expect("automorphisms permute Sylow subgroups");
                if !seen[idx] {
                    seen[idx] = true;
                    orbit.push(image);
                }
            }
            i += 1;
        }
        orbit.sort();
        orbits.push(orbit);
    }
    orbits
}

/// A `γ(B)`-invariant Sylow `q`-subgroup of `(B, ·)` when `γ(B)` is a
/// `q`-group: the Sylow count is `1 mod q` and every orbit has `q`-power
/// size, so some orbit is a single point. Returns the least fixed point.
pub fn fixed_sylow_under_gamma(b: &SkewBrace, q: usize) -> Result<Option<ElemSet>> {
    let order = b.gamma_image().len();
    if !is_power_of(order, q) {
        return Err(StructureError::GammaNotQGroup { prime: q, order });
    }
    Ok(sylow_orbits_under_gamma(b, q)
        .into_iter()
        .filter(|o| o.len() == 1)
        .map(|mut o| o.remove(0))
        .min())
}
