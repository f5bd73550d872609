//! Skew braces: two group tables on one set, linked by the right brace axiom
//! `(x·y)∘z = (x∘z)·z⁻¹·(y∘z)`.

mod opposite;
mod quotient;
mod substructures;

use std::fmt;

use thiserror::Error;

use crate::elemset::ElemSet;
use crate::finite_group::{CayleyGroup, GroupError};
use crate::perm::Perm;

pub use quotient::BraceQuotient;
pub use substructures::SubBraceConditions;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("additive table is not a group: {0}")]
    AddNotGroup(#[source] GroupError),
    #[error("multiplicative table is not a group: {0}")]
    MulNotGroup(#[source] GroupError),
    #[error("additive table has order {add} but multiplicative table has order {mul}")]
    SizeMismatch { add: usize, mul: usize },
    #[error("brace axiom fails at (x, y, z) = ({x}, {y}, {z}): (x·y)∘z = {left} but (x∘z)·z⁻¹·(y∘z) = {right}")]
    AxiomViolation {
        x: usize,
        y: usize,
        z: usize,
        left: usize,
        right: usize,
    },
    #[error("{0} is not a sub-skew brace")]
    NotASubBrace(ElemSet),
    #[error("{0} is not an ideal")]
    NotAnIdeal(ElemSet),
    #[error("additive and multiplicative cosets of the ideal differ at element {element}")]
    CosetMismatch { element: usize },
}

pub type Result<T, E = BraceError> = std::result::Result<T, E>;

/// A validated skew brace on `0..n`.
///
/// The gamma function `γ(z): x ↦ (x∘z)·z⁻¹` is stored densely; it is an
/// automorphism of the additive group and `γ(y∘z) = γ(y) then γ(z)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewBrace {
    add: CayleyGroup,
    mul: CayleyGroup,
    gamma: Vec<Perm>,
}

impl SkewBrace {
    /// Validates two tables given as rows.
    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        let add = CayleyGroup::from_rows(add).map_err(BraceError::AddNotGroup)?;
        let mul = CayleyGroup::from_rows(mul).map_err(BraceError::MulNotGroup)?;
        Self::new(add, mul)
    }

    /// Checks the brace axiom on every triple and builds the gamma function.
    pub fn new(add: CayleyGroup, mul: CayleyGroup) -> Result<Self> {
        let n = add.order();
        if mul.order() != n {
            return Err(BraceError::SizeMismatch {
                add: n,
                mul: mul.order(),
            });
        }
        for z in 0..n {
            let zi = add.inv(z);
            for x in 0..n {
                let xz = add.op(mul.op(x, z), zi);
                for y in 0..n {
                    let left = mul.op(add.op(x, y), z);
                    let right = add.op(xz, mul.op(y, z));
                    if left != right {
                        return Err(BraceError::AxiomViolation {
                            x,
                            y,
                            z,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        let gamma = (0..n)
            .map(|z| {
                let zi = add.inv(z);
                Perm::from_images_unchecked((0..n).map(|x| add.op(mul.op(x, z), zi)).collect())
            })
            .collect();
        Ok(SkewBrace { add, mul, gamma })
    }

    /// `x∘y = x·y`.
    pub fn trivial(group: &CayleyGroup) -> Self {
        Self::new(group.clone(), group.clone()).expect("trivial brace")
    }

    /// `x∘y = y·x`, whose gamma function is `γ(z) = ι(z⁻¹)`.
    pub fn almost_trivial(group: &CayleyGroup) -> Self {
        let mul =
            CayleyGroup::from_fn(group.order(), |x, y| group.op(y, x)).expect("opposite group");
        Self::new(group.clone(), mul).expect("almost trivial brace")
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_group(&self) -> &CayleyGroup {
        &self.add
    }

    pub fn mul_group(&self) -> &CayleyGroup {
        &self.mul
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.op(x, y)
    }

    #[inline]
    pub fn circ(&self, x: usize, y: usize) -> usize {
        self.mul.op(x, y)
    }

    /// Additive inverse.
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.add.inv(x)
    }

    /// Multiplicative inverse.
    #[inline]
    pub fn circ_inv(&self, x: usize) -> usize {
        self.mul.inv(x)
    }

    pub fn gamma(&self, z: usize) -> &Perm {
        &self.gamma[z]
    }

    pub fn gamma_all(&self) -> &[Perm] {
        &self.gamma
    }

    /// `{z : γ(z) = id}`, a normal subgroup of the multiplicative group.
    pub fn gamma_kernel(&self) -> ElemSet {
        ElemSet::new((0..self.order()).filter(|&z| self.gamma[z].is_identity()))
    }

    /// The distinct automorphisms `γ(z)`, sorted.
    pub fn gamma_image(&self) -> Vec<Perm> {
        let mut img = self.gamma.clone();
        img.sort();
        img.dedup();
        img
    }

    /// `γ(z)` for `z` in `subset`.
    pub fn gamma_image_of(&self, subset: &ElemSet) -> Vec<Perm> {
        let mut img: Vec<Perm> = subset.iter().map(|z| self.gamma[z].clone()).collect();
        img.sort();
        img.dedup();
        img
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.rows()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.rows()
    }
}

impl fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewBrace")
            .field("order", &self.order())
            .field("add", &self.add.rows())
            .field("mul", &self.mul.rows())
            .finish()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::finite_group::tests::{s3, z};

    /// Re-checks the defining identities independently of the constructor.
    pub(crate) fn assert_brace_identities(b: &SkewBrace) {
        let n = b.order();
        for z in 0..n {
            assert!(b.add_group().is_automorphism(b.gamma(z)));
            for y in 0..n {
                assert_eq!(b.gamma(b.circ(y, z)), &b.gamma(y).then(b.gamma(z)));
                assert_eq!(b.circ(y, z), b.add(b.gamma(z).apply(y), z));
                for x in 0..n {
                    assert_eq!(
                        b.circ(b.add(x, y), z),
                        b.add(b.add(b.circ(x, z), b.neg(z)), b.circ(y, z))
                    );
                }
            }
        }
    }

    #[test]
    fn trivial_braces() {
        let b = SkewBrace::trivial(&z(6));
        assert!(b.gamma_all().iter().all(Perm::is_identity));
        assert_eq!(b.gamma_kernel(), ElemSet::full(6));
        assert_brace_identities(&b);
        let b = SkewBrace::trivial(&z(3));
        assert!(b.gamma_all().iter().all(Perm::is_identity));
    }

    #[test]
    fn almost_trivial_gamma_is_inner() {
        let g = s3();
        let b = SkewBrace::almost_trivial(&g);
        assert_brace_identities(&b);
        for z in g.elements() {
            assert_eq!(b.gamma(z), &g.inner_automorphism(g.inv(z)));
        }
        assert_eq!(b.gamma_kernel(), ElemSet::trivial());
        assert_eq!(SkewBrace::almost_trivial(&z(5)), SkewBrace::trivial(&z(5)));
        assert!(b.gamma(0).is_identity());
    }

    #[test]
    fn validation_errors() {
        let z4 = z(4);
        let v4 = z(2).direct_product(&z(2));
        // Additive Z4 with multiplicative Z2×Z2 is a genuine brace.
        assert!(SkewBrace::new(z4.clone(), v4).is_ok());
        // Z4 relabelled by swapping 1 and 2 is a group but breaks the axiom.
        let swap = [0, 2, 1, 3];
        let relabelled = CayleyGroup::from_fn(4, |x, y| swap[(swap[x] + swap[y]) % 4]).unwrap();
        let err = SkewBrace::new(z4.clone(), relabelled).unwrap_err();
        assert!(matches!(err, BraceError::AxiomViolation { .. }), "{err}");
        let err = SkewBrace::new(z4, z(3)).unwrap_err();
        assert_eq!(err, BraceError::SizeMismatch { add: 4, mul: 3 });
        let err =
            SkewBrace::from_rows(&[vec![0, 1], vec![1, 0]], &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, BraceError::MulNotGroup(_)));
    }
}
