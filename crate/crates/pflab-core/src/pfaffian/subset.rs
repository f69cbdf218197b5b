//! Even index subsets of `{-n,..,n}` and their signed splits.

use alloc::vec::Vec;

use crate::combinat::{sort_sign, subsets_of_size};
use crate::uea_core::{AlgebraRank, DomainError};

/// A strictly increasing sequence of indices from `{-n,..,n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndexSubset {
    elements: Vec<i32>,
}

impl IndexSubset {
    /// Builds a subset from indices in any order; rejects repeats and
    /// out-of-range entries.
    pub fn new(rank: AlgebraRank, elements: &[i32]) -> Result<Self, DomainError> {
        let mut v = elements.to_vec();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(DomainError::BadSubset);
            }
        }
        for &e in &v {
            if !rank.contains(e) {
                return Err(DomainError::IndexOutOfRange {
                    index: e,
                    big_n: rank.big_n(),
                });
            }
        }
        Ok(IndexSubset { elements: v })
    }

    /// The complement of `{i}` in `{-n,..,n}`; rank must be odd so the
    /// complement has even cardinality.
    pub fn hat(rank: AlgebraRank, i: i32) -> Result<Self, DomainError> {
        if !rank.is_odd() {
            return Err(DomainError::OddRankRequired(rank.big_n()));
        }
        if !rank.contains(i) {
            return Err(DomainError::IndexOutOfRange {
                index: i,
                big_n: rank.big_n(),
            });
        }
        let elements = rank.indices().into_iter().filter(|&e| e != i).collect();
        Ok(IndexSubset { elements })
    }

    /// The full even set `{-n,..,n}` minus nothing: only valid when the
    /// ambient index count is even (rank even); provided for tests.
    pub fn full(rank: AlgebraRank) -> Self {
        IndexSubset {
            elements: rank.indices(),
        }
    }

    pub fn elements(&self) -> &[i32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn has_even_len(&self) -> bool {
        self.elements.len() % 2 == 0
    }

    pub fn contains(&self, e: i32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// Closed under negation (index `0`, if present, is self-negative).
    pub fn is_symmetric(&self) -> bool {
        self.elements.iter().all(|&e| self.contains(-e))
    }

    /// Elementwise negation, re-sorted.
    pub fn negated(&self) -> Self {
        let mut v: Vec<i32> = self.elements.iter().map(|&e| -e).collect();
        v.sort_unstable();
        IndexSubset { elements: v }
    }

    /// The increasing sequence with `old` replaced by `new` in place
    /// (possibly unsorted or with repeats afterwards); caller feeds the
    /// result to the sequence Pfaffian, which handles both.
    pub fn replaced(&self, old: i32, new: i32) -> Vec<i32> {
        self.elements
            .iter()
            .map(|&e| if e == old { new } else { e })
            .collect()
    }

    /// Remove one element, keeping order.
    pub fn without(&self, e: i32) -> Self {
        IndexSubset {
            elements: self.elements.iter().copied().filter(|&x| x != e).collect(),
        }
    }

    /// Subset from an already-sorted strictly increasing slice taken from
    /// a validated parent; skips revalidation.
    pub(crate) fn from_sorted_unchecked(elements: Vec<i32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IndexSubset { elements }
    }
}

impl core::fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (t, e) in self.elements.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "}}")
    }
}

/// An ordered two-block decomposition `I = first ⊔ second` with the
/// inversion sign of the concatenated sequence `(first, second)` relative
/// to the sorted parent.
#[derive(Clone, Debug)]
pub struct SignedSplit {
    pub first: IndexSubset,
    pub second: IndexSubset,
    pub sign: i64,
}

/// All splits of `parent` with `|first| = p`, each with its sign.
pub fn splits_of_size(parent: &IndexSubset, p: usize) -> Vec<SignedSplit> {
    let mut out = Vec::new();
    for first in subsets_of_size(parent.elements(), p) {
        let second: Vec<i32> = parent
            .elements()
            .iter()
            .copied()
            .filter(|e| !first.contains(e))
            .collect();
        let mut concat = first.clone();
        concat.extend_from_slice(&second);
        let sign = sort_sign(&concat).expect("parent has distinct elements");
        out.push(SignedSplit {
            first: IndexSubset::from_sorted_unchecked(first),
            second: IndexSubset::from_sorted_unchecked(second),
            sign,
        });
    }
    out
}

/// All splits into two even-size blocks (including the empty ones).
pub fn even_splits(parent: &IndexSubset) -> Vec<SignedSplit> {
    let mut out = Vec::new();
    let mut p = 0;
    while p <= parent.len() {
        out.extend(splits_of_size(parent, p));
        p += 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank5() -> AlgebraRank {
        AlgebraRank::new(5).unwrap()
    }

    #[test]
    fn construction_and_predicates() {
        let s = IndexSubset::new(rank5(), &[1, -2, 0]).unwrap();
        assert_eq!(s.elements(), &[-2, 0, 1]);
        assert!(!s.is_symmetric());
        let t = IndexSubset::new(rank5(), &[-1, 0, 1]).unwrap();
        assert!(t.is_symmetric());
        assert!(IndexSubset::new(rank5(), &[1, 1]).is_err());
        assert!(IndexSubset::new(rank5(), &[3]).is_err());
    }

    #[test]
    fn hat_complement() {
        let s = IndexSubset::hat(rank5(), 2).unwrap();
        assert_eq!(s.elements(), &[-2, -1, 0, 1]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn negation_and_replacement() {
        let s = IndexSubset::new(rank5(), &[-2, 0, 1]).unwrap();
        assert_eq!(s.negated().elements(), &[-1, 0, 2]);
        assert_eq!(s.replaced(0, -1), alloc::vec![-2, -1, 1]);
    }

    #[test]
    fn split_signs() {
        let s = IndexSubset::new(rank5(), &[-1, 0, 1, 2]).unwrap();
        let splits = splits_of_size(&s, 2);
        assert_eq!(splits.len(), 6);
        // first = {0,1}: concatenation (0,1,-1,2) has two inversions
        let f01 = splits
            .iter()
            .find(|sp| sp.first.elements() == &[0, 1])
            .unwrap();
        assert_eq!(f01.sign, 1);
        // first = {-1,1}: concatenation (-1,1,0,2) has one inversion
        let fm11 = splits
            .iter()
            .find(|sp| sp.first.elements() == &[-1, 1])
            .unwrap();
        assert_eq!(fm11.sign, -1);
        assert_eq!(even_splits(&s).len(), 1 + 6 + 1);
    }
}
