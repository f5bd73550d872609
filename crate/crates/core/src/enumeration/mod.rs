//! Enumeration of skew braces on a given additive group through regular
//! subgroups of its holomorph, plus a catalog of small groups.

mod catalog;
mod corpus;

use thiserror::Error;

use crate::finite_group::{CayleyGroup, GroupError};
use crate::perm::Perm;
use crate::skew_brace::{BraceError, SkewBrace};

pub use catalog::{
    catalog_group, catalog_is_complete, small_group_catalog, CatalogGroup, MAX_CATALOG_ORDER,
};
pub use corpus::{corpus, Corpus, CorpusEntry};

/// Largest holomorph order accepted by [`holomorph`].
pub const MAX_HOLOMORPH_ORDER: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("holomorph of a group of order {order} has order {holomorph_order}, above the limit {MAX_HOLOMORPH_ORDER}")]
    TooLarge {
        order: usize,
        holomorph_order: usize,
    },
    #[error("no catalog groups of order {0}")]
    UnsupportedOrder(usize),
    #[error("unknown group name `{0}`")]
    UnknownGroup(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Brace(#[from] BraceError),
}

pub type Result<T> = std::result::Result<T, EnumError>;

/// A permutation group given by its full element list, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Wraps `elements` after checking closure under composition.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Option<Self> {
        elements.sort();
        elements.dedup();
        if elements.is_empty() || elements.iter().any(|p| p.degree() != degree) {
            return None;
        }
        let closed = elements.iter().all(|a| {
            elements
                .iter()
                .all(|b| elements.binary_search(&a.then(b)).is_ok())
        });
        closed.then_some(PermGroup { degree, elements })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Transitive with trivial point stabilisers.
    pub fn is_regular(&self) -> bool {
        if self.order() != self.degree {
            return false;
        }
        let mut seen = vec![false; self.degree];
        self.elements
            .iter()
            .all(|p| !std::mem::replace(&mut seen[p.apply(0)], true))
    }
}

/// `Hol(G)` acting on the elements of `G`: all maps `x ↦ α(x)·g` with `α`
/// an automorphism, i.e. the group generated by right translations and
/// automorphisms.
pub fn holomorph(g: &CayleyGroup) -> Result<PermGroup> {
    let auts = g.automorphism_group();
    let holomorph_order = g.order() * auts.len();
    if holomorph_order > MAX_HOLOMORPH_ORDER {
        return Err(EnumError::TooLarge {
            order: g.order(),
            holomorph_order,
        });
    }
    let mut elements = Vec::with_capacity(holomorph_order);
    for alpha in auts {
        for t in g.elements() {
            let images = g.elements().map(|x| g.op(alpha.apply(x), t)).collect();
            elements.push(Perm::from_images_unchecked(images));
        }
    }
    elements.sort();
    Ok(PermGroup {
        degree: g.order(),
        elements,
    })
}

/// All regular subgroups of `h`, sorted.
///
/// A regular subgroup `R` holds exactly one element sending 0 to each point.
/// The search repeatedly picks the least point not yet reached from 0 and
/// branches over the elements of `h` sending 0 there, so each `R` is reached
/// along exactly one path. A closure in which two elements agree at 0 is
/// not semiregular and is abandoned.
pub fn regular_subgroups(h: &PermGroup) -> Vec<PermGroup> {
    let n = h.degree;
    let mut by_image: Vec<Vec<&Perm>> = vec![Vec::new(); n];
    for p in &h.elements {
        by_image[p.apply(0)].push(p);
    }
    let mut out = Vec::new();
    let mut slots: Vec<Option<Perm>> = vec![None; n];
    slots[0] = Some(Perm::identity(n));
    search(&by_image, &mut slots, &mut out);
    out.sort();
    out.into_iter()
        .map(|elements| PermGroup {
            degree: n,
            elements,
        })
        .collect()
}

fn search(by_image: &[Vec<&Perm>], slots: &mut Vec<Option<Perm>>, out: &mut Vec<Vec<Perm>>) {
    let Some(y) = slots.iter().position(Option::is_none) else {
        let mut elements: Vec<Perm> = slots
            .iter()
            .map(|p| p.clone().expect("all slots filled"))
            .collect();
        elements.sort();
        out.push(elements);
        return;
    };
    for &cand in &by_image[y] {
        if let Some(closed) = close(slots, cand) {
            let saved = std::mem::replace(slots, closed);
            search(by_image, slots, out);
            *slots = saved;
        }
    }
}

/// The subgroup generated by the filled slots and `extra`, indexed by image
/// of 0, or `None` if two of its elements agree at 0.
fn close(slots: &[Option<Perm>], extra: &Perm) -> Option<Vec<Option<Perm>>> {
    let mut gens: Vec<Perm> = slots
        .iter()
        .flatten()
        .filter(|p| !p.is_identity())
        .cloned()
        .collect();
    gens.push(extra.clone());
    let n = slots.len();
    let mut out: Vec<Option<Perm>> = vec![None; n];
    out[0] = Some(Perm::identity(n));
    let mut queue = vec![Perm::identity(n)];
    while let Some(p) = queue.pop() {
        for g in &gens {
            let q = p.then(g);
            match &out[q.apply(0)] {
                Some(existing) if *existing == q => {}
                Some(_) => return None,
                None => {
                    out[q.apply(0)] = Some(q.clone());
                    queue.push(q);
                }
            }
        }
    }
    Some(out)
}

/// The brace with additive group `g` whose multiplication is
/// `x ∘ y = r_y(x)`, `r_y` being the element of `r` sending 0 to `y`.
pub fn brace_from_regular_subgroup(g: &CayleyGroup, r: &PermGroup) -> Result<SkewBrace> {
    let n = g.order();
    let mut by_image: Vec<Option<&Perm>> = vec![None; n];
    for p in r.elements() {
        by_image[p.apply(0)] = Some(p);
    }
    let table: Vec<usize> = (0..n)
        .flat_map(|x| {
            by_image
                .iter()
                .map(move |r_y| r_y.expect("regular").apply(x))
        })
        .collect();
    let mul = CayleyGroup::from_flat(n, table).map_err(BraceError::MulNotGroup)?;
    Ok(SkewBrace::new(g.clone(), mul)?)
}

/// Every skew brace with additive group `g`, one per regular subgroup of
/// `Hol(g)`, sorted by multiplicative table.
pub fn braces_on_group(g: &CayleyGroup) -> Result<Vec<SkewBrace>> {
    let hol = holomorph(g)?;
    let mut braces = regular_subgroups(&hol)
        .iter()
        .map(|r| brace_from_regular_subgroup(g, r))
        .collect::<Result<Vec<_>>>()?;
    braces.sort_by(|a, b| a.mul_group().table().cmp(b.mul_group().table()));
    braces.dedup();
    Ok(braces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::tests::{s3, z};

    #[test]
    fn holomorph_orders() {
        assert_eq!(holomorph(&z(1)).unwrap().order(), 1);
        assert_eq!(holomorph(&z(3)).unwrap().order(), 6);
        let v4 = z(2).direct_product(&z(2));
        let hol = holomorph(&v4).unwrap();
        assert_eq!(hol.order(), 24);
        assert!(PermGroup::from_elements(4, hol.elements().to_vec()).is_some());
    }

    #[test]
    fn regular_subgroups_of_prime_holomorph() {
        for p in [2, 3, 5, 7] {
            let regs = regular_subgroups(&holomorph(&z(p)).unwrap());
            assert_eq!(regs.len(), 1);
            assert!(regs[0].is_regular());
            assert_eq!(
                braces_on_group(&z(p)).unwrap(),
                vec![SkewBrace::trivial(&z(p))]
            );
        }
    }

    #[test]
    fn s3_has_trivial_and_almost_trivial() {
        let braces = braces_on_group(&s3()).unwrap();
        assert!(braces.contains(&SkewBrace::trivial(&s3())));
        assert!(braces.contains(&SkewBrace::almost_trivial(&s3())));
        let z4 = braces_on_group(&z(4)).unwrap();
        assert_eq!(
            z4.iter()
                .filter(|b| **b == SkewBrace::almost_trivial(&z(4)))
                .count(),
            1
        );
    }
}
