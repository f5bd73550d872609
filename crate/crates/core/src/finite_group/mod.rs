//! Finite groups as Cayley tables on `0..n`, identity `0`.
//!
//! Everything downstream (skew braces, the structure algorithms, the
//! enumerator) is built on [`CayleyGroup`].

mod aut;
mod lattice;
pub(crate) mod quotient;
mod semidirect;
mod supersoluble;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::elemset::ElemSet;
use crate::perm::Perm;

pub use lattice::SubgroupProps;
pub use quotient::Quotient;
pub use semidirect::semidirect_product;

/// Row or column of a Cayley table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Col(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Col(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("identity axiom fails: element 0 is not the identity, {row}*{col} = {value}")]
    IdentityNotZero {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("not a Latin square: {line} repeats the value {value}")]
    NotLatin { line: Line, value: usize },
    #[error("associativity fails at ({x}, {y}, {z}): ({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}")]
    NotAssociative {
        x: usize,
        y: usize,
        z: usize,
        left: usize,
        right: usize,
    },
    #[error("{0} is not a subgroup")]
    NotASubgroup(ElemSet),
    #[error("{0} is not a normal subgroup")]
    NotNormal(ElemSet),
    #[error("element {element} is outside 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("action is not a homomorphism: act({a}*{b}) differs from act({a}) then act({b})")]
    ActionNotHomomorphism { a: usize, b: usize },
    #[error("action of {a} is not an automorphism of the acted-on group")]
    ActionNotAutomorphism { a: usize },
    #[error("expected {expected} action maps, got {got}")]
    ActionSizeMismatch { expected: usize, got: usize },
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

/// Tables at most this large get an exhaustive associativity scan with a
/// lexicographically least witness; larger ones use Light's test on a
/// generating set.
const FULL_ASSOCIATIVITY_SCAN: usize = 64;

/// A validated finite group given by its multiplication table.
///
/// `op(i, j)` is `i*j`, left operand first; element `0` is the identity.
pub struct CayleyGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    subgroups: OnceLock<Vec<ElemSet>>,
    automorphisms: OnceLock<Vec<Perm>>,
}

impl CayleyGroup {
    /// Validates a table given as rows.
    ///
    /// Checks run in the order: shape, entry range, associativity, identity,
    /// Latin property. The first failure is reported with a witness.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(n, table)
    }

    /// Validates a row-major table of length `n*n`.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != n * n {
            return Err(GroupError::NotSquare {
                row: table.len() / n,
                len: table.len() % n,
                expected: n,
            });
        }
        for (idx, &v) in table.iter().enumerate() {
            if v >= n {
                return Err(GroupError::EntryOutOfRange {
                    row: idx / n,
                    col: idx % n,
                    value: v,
                    order: n,
                });
            }
        }
        let at = |i: usize, j: usize| table[i * n + j];
        if n <= FULL_ASSOCIATIVITY_SCAN {
            // With 0 checked as identity below, triples involving 0 are automatic.
            for x in 1..n {
                for y in 1..n {
                    let xy = at(x, y);
                    for z in 1..n {
                        let left = at(xy, z);
                        let right = at(x, at(y, z));
                        if left != right {
                            return Err(GroupError::NotAssociative {
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
        }
        for j in 0..n {
            if at(0, j) != j {
                return Err(GroupError::IdentityNotZero {
                    row: 0,
                    col: j,
                    value: at(0, j),
                });
            }
            if at(j, 0) != j {
                return Err(GroupError::IdentityNotZero {
                    row: j,
                    col: 0,
                    value: at(j, 0),
                });
            }
        }
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = at(i, j);
                if seen[v] == i {
                    return Err(GroupError::NotLatin {
                        line: Line::Row(i),
                        value: v,
                    });
                }
                seen[v] = i;
            }
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let v = at(i, j);
                if seen[v] == j {
                    return Err(GroupError::NotLatin {
                        line: Line::Col(j),
                        value: v,
                    });
                }
                seen[v] = j;
            }
        }
        if n > FULL_ASSOCIATIVITY_SCAN {
            light_test(n, &table)?;
        }
        let mut inverses = vec![0; n];
        for i in 0..n {
            inverses[i] = (0..n)
                .find(|&j| at(i, j) == 0)
                .expect("Latin row contains 0");
        }
        Ok(CayleyGroup {
            order: n,
            table,
            inverses,
            subgroups: OnceLock::new(),
            automorphisms: OnceLock::new(),
        })
    }

    /// Builds the table of `op` on `0..n` and validates it.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(op(i, j));
            }
        }
        Self::from_flat(n, table)
    }

    /// The cyclic group `Z_n` under addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |i, j| (i + j) % n).expect("addition mod n is a group")
    }

    /// Direct product on pairs `(a, b)` numbered `a * |other| + b`.
    pub fn direct_product(&self, other: &CayleyGroup) -> CayleyGroup {
        let m = other.order;
        Self::from_fn(self.order * m, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
        .expect("direct product of groups is a group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row-major table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.op(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    /// `g^-1 * x * g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.op(self.op(self.inv(g), x), g)
    }

    /// `[x, y] = x^-1 * y^-1 * x * y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.op(self.op(self.inv(x), self.inv(y)), self.op(x, y))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.op(i, j) == self.op(j, i)))
    }

    pub fn center(&self) -> ElemSet {
        ElemSet::new(
            self.elements()
                .filter(|&z| self.elements().all(|x| self.op(x, z) == self.op(z, x))),
        )
    }

    /// Elements of `s` commuting with every element of `t`.
    pub fn centralizer_in(&self, s: &ElemSet, t: &ElemSet) -> ElemSet {
        ElemSet::new(
            s.iter()
                .filter(|&x| t.iter().all(|y| self.op(x, y) == self.op(y, x))),
        )
    }

    /// True if `perm` is an automorphism of this group.
    pub fn is_automorphism(&self, perm: &Perm) -> bool {
        perm.degree() == self.order
            && (0..self.order).all(|i| {
                (0..self.order)
                    .all(|j| perm.apply(self.op(i, j)) == self.op(perm.apply(i), perm.apply(j)))
            })
    }

    /// `x ↦ g^-1 * x * g`. Under left-to-right composition `ι(gh) = ι(g) then ι(h)`.
    pub fn inner_automorphism(&self, g: usize) -> Perm {
        Perm::from_images_unchecked(self.elements().map(|x| self.conj(x, g)).collect())
    }

    /// The subgroup table of `s`, numbering elements by their position in `s`.
    pub fn restrict(&self, s: &ElemSet) -> Result<CayleyGroup> {
        if !self.is_subgroup(s) {
            return Err(GroupError::NotASubgroup(s.clone()));
        }
        let mut pos = vec![usize::MAX; self.order];
        for (i, x) in s.iter().enumerate() {
            pos[x] = i;
        }
        let el = s.elements();
        CayleyGroup::from_fn(s.len(), |i, j| pos[self.op(el[i], el[j])])
    }
}

/// Light's associativity test: with a generating set `S`, the table is
/// associative iff `(x*s)*y = x*(s*y)` for all `x, y` and `s ∈ S`.
fn light_test(n: usize, table: &[usize]) -> Result<()> {
    let at = |i: usize, j: usize| table[i * n + j];
    let mut covered = vec![false; n];
    covered[0] = true;
    let mut gens: Vec<usize> = Vec::new();
    while let Some(g) = covered.iter().position(|c| !c) {
        gens.push(g);
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..n {
                if covered[x] {
                    for &s in &gens {
                        let y = at(x, s);
                        if !covered[y] {
                            covered[y] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    for &s in &gens {
        for x in 0..n {
            let xs = at(x, s);
            for y in 0..n {
                let left = at(xs, y);
                let right = at(x, at(s, y));
                if left != right {
                    return Err(GroupError::NotAssociative {
                        x,
                        y: s,
                        z: y,
                        left,
                        right,
                    });
                }
            }
        }
    }
    Ok(())
}

impl Clone for CayleyGroup {
    fn clone(&self) -> Self {
        CayleyGroup {
            order: self.order,
            table: self.table.clone(),
            inverses: self.inverses.clone(),
            subgroups: self.subgroups.clone(),
            automorphisms: self.automorphisms.clone(),
        }
    }
}

impl PartialEq for CayleyGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for CayleyGroup {}

impl fmt::Debug for CayleyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyGroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}
