use std::fmt;

use serde::Serialize;

/// A sorted, duplicate-free set of element indices that always contains the
/// identity `0`. Ordering is lexicographic on the sorted element lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ElemSet(Vec<usize>);

impl ElemSet {
    /// Collects `elements` into a set; the identity is always included.
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = elements.into_iter().chain(std::iter::once(0)).collect();
        v.sort_unstable();
        v.dedup();
        ElemSet(v)
    }

    pub fn trivial() -> Self {
        ElemSet(vec![0])
    }

    pub fn full(n: usize) -> Self {
        ElemSet((0..n.max(1)).collect())
    }

    /// Builds from a membership mask indexed by element.
    pub fn from_mask(mask: &[bool]) -> Self {
        ElemSet::new(mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Never true: the identity is always present.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet(
            self.0
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        )
    }

    /// Membership mask of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.0 {
            m[x] = true;
        }
        m
    }

    /// Image of the set under an element map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> ElemSet {
        ElemSet::new(self.0.iter().map(|&x| f(x)))
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
