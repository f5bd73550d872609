use super::{BraceError, Result, SkewBrace};
use crate::elemset::ElemSet;
use crate::finite_group::CayleyGroup;

/// A quotient brace with its projection.
#[derive(Debug, Clone)]
pub struct BraceQuotient {
    pub brace: SkewBrace,
    /// `projection[x]` is the coset index of `x`; the ideal itself is coset `0`.
    pub projection: Vec<usize>,
    pub cosets: Vec<ElemSet>,
}

impl SkewBrace {
    /// `B/I` on the right cosets `I·a`, which must equal the cosets `I∘a`.
    pub fn quotient(&self, ideal: &ElemSet) -> Result<BraceQuotient> {
        if !self.is_ideal(ideal) {
            return Err(BraceError::NotAnIdeal(ideal.clone()));
        }
        let n = self.order();
        let (projection, cosets) =
            crate::finite_group::quotient::right_cosets(n, ideal, |h, a| self.add(h, a));
        for a in 0..n {
            let pa = projection[a];
            if let Some(h) = ideal.iter().find(|&h| projection[self.circ(h, a)] != pa) {
                return Err(BraceError::CosetMismatch {
                    element: self.circ(h, a),
                });
            }
        }
        let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
        let k = cosets.len();
        let add = CayleyGroup::from_fn(k, |c, d| projection[self.add(reps[c], reps[d])])
            .map_err(BraceError::AddNotGroup)?;
        let mul = CayleyGroup::from_fn(k, |c, d| projection[self.circ(reps[c], reps[d])])
            .map_err(BraceError::MulNotGroup)?;
        Ok(BraceQuotient {
            brace: SkewBrace::new(add, mul)?,
            projection,
            cosets: cosets.into_iter().map(ElemSet::new).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::tests::{s3, z};

    #[test]
    fn quotients_of_trivial_z6() {
        let b = SkewBrace::trivial(&z(6));
        let q = b.quotient(&ElemSet::new([3])).unwrap();
        assert_eq!(q.brace, SkewBrace::trivial(&z(3)));
        assert_eq!(b.quotient(&ElemSet::full(6)).unwrap().brace.order(), 1);
        assert_eq!(b.quotient(&ElemSet::trivial()).unwrap().brace, b);
    }

    #[test]
    fn projection_preserves_both_operations() {
        let b = SkewBrace::almost_trivial(&s3().direct_product(&z(2)));
        for i in b.ideals() {
            let q = b.quotient(&i).unwrap();
            for x in 0..b.order() {
                for y in 0..b.order() {
                    assert_eq!(
                        q.projection[b.add(x, y)],
                        q.brace.add(q.projection[x], q.projection[y])
                    );
                    assert_eq!(
                        q.projection[b.circ(x, y)],
                        q.brace.circ(q.projection[x], q.projection[y])
                    );
                }
            }
        }
    }

    #[test]
    fn non_ideal_rejected() {
        let b = SkewBrace::trivial(&s3());
        assert_eq!(
            b.quotient(&ElemSet::new([3])).unwrap_err(),
            BraceError::NotAnIdeal(ElemSet::new([3]))
        );
    }
}
