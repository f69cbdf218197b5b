//! Commutative polynomial ring used to cross-check the Pfaffian builders
//! against the classical alternating-sum and cofactor recursions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::rat::{rint, rzero, Rat};

use super::construct::PfRing;

/// A monomial is a sorted multiset of abstract pair symbols `x_{ab}`
/// with `a < b`.
pub type CommMonomial = Vec<(usize, usize)>;

/// Exact commutative polynomial in the pair symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommPoly {
    terms: BTreeMap<CommMonomial, Rat>,
}

impl CommPoly {
    pub fn zero() -> Self {
        CommPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), rint(1));
        CommPoly { terms }
    }

    /// The generator `x_{ab}`; requires `a < b`.
    pub fn symbol(a: usize, b: usize) -> Self {
        assert!(a < b, "pair symbols are indexed with a < b");
        let mut terms = BTreeMap::new();
        terms.insert(alloc::vec![(a, b)], rint(1));
        CommPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: CommMonomial, c: Rat) {
        if c == rzero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s == rzero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &CommPoly, c: &Rat) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.clone() * c.clone());
        }
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                m.sort_unstable();
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> CommPoly {
        let mut out = CommPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

/// Marker context implementing the ring interface for [`CommPoly`].
pub struct CommRing;

impl PfRing for CommRing {
    type Elem = CommPoly;

    fn zero(&self) -> CommPoly {
        CommPoly::zero()
    }

    fn one(&self) -> CommPoly {
        CommPoly::one()
    }

    fn is_zero(&self, x: &CommPoly) -> bool {
        x.is_zero()
    }

    fn add_scaled(&self, acc: &mut CommPoly, x: &CommPoly, c: &Rat) {
        acc.add_scaled(x, c);
    }

    fn mul(&self, x: &CommPoly, y: &CommPoly) -> CommPoly {
        x.mul(y)
    }
}

/// The skew entry `x_{ab}` for `a<b`, `-x_{ba}` for `a>b`, `0` on the
/// diagonal.
pub fn skew_symbol_entry(a: usize, b: usize) -> CommPoly {
    use core::cmp::Ordering;
    match a.cmp(&b) {
        Ordering::Less => CommPoly::symbol(a, b),
        Ordering::Greater => CommPoly::symbol(b, a).scale(&rint(-1)),
        Ordering::Equal => CommPoly::zero(),
    }
}

/// Classical Pfaffian of the generic skew symbol matrix on `slots` by
/// first-row cofactor recursion: an implementation path independent of the
/// permutation and matching sums.
pub fn pf_cofactor(slots: &[usize]) -> CommPoly {
    if slots.is_empty() {
        return CommPoly::one();
    }
    debug_assert!(slots.len() % 2 == 0);
    let a = slots[0];
    let mut acc = CommPoly::zero();
    for t in 1..slots.len() {
        let b = slots[t];
        let rest: Vec<usize> = slots
            .iter()
            .copied()
            .filter(|&s| s != a && s != b)
            .collect();
        let sign = if t % 2 == 1 { 1 } else { -1 };
        let term = skew_symbol_entry(a, b).mul(&pf_cofactor(&rest));
        acc.add_scaled(&term, &rint(sign));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfaffian::construct::{pf_generic, pf_via_matchings};

    #[test]
    fn classical_four_by_four() {
        // x12*x34 - x13*x24 + x14*x23
        let slots: Vec<usize> = (0..4).collect();
        let pf = pf_cofactor(&slots);
        let mut expected = CommPoly::zero();
        expected.add_scaled(&CommPoly::symbol(0, 1).mul(&CommPoly::symbol(2, 3)), &rint(1));
        expected.add_scaled(&CommPoly::symbol(0, 2).mul(&CommPoly::symbol(1, 3)), &rint(-1));
        expected.add_scaled(&CommPoly::symbol(0, 3).mul(&CommPoly::symbol(1, 2)), &rint(1));
        assert_eq!(pf, expected);
    }

    #[test]
    fn permutation_sum_matches_cofactor_recursion() {
        for k in [2usize, 4, 6] {
            let slots: Vec<usize> = (0..k).collect();
            let via_perm =
                pf_generic(&CommRing, k, &skew_symbol_entry, true).unwrap();
            let via_match = pf_via_matchings(&CommRing, k, &skew_symbol_entry).unwrap();
            let via_cof = pf_cofactor(&slots);
            assert_eq!(via_perm, via_cof, "permutation sum vs cofactor at k={}", k);
            assert_eq!(via_match, via_cof, "matching sum vs cofactor at k={}", k);
        }
    }

    #[test]
    fn term_counts_are_double_factorials() {
        // 3!! = 3 terms at k=4, 5!! = 15 terms at k=6
        let pf4 = pf_cofactor(&[0, 1, 2, 3]);
        assert_eq!(pf4.num_terms(), 3);
        let slots: Vec<usize> = (0..6).collect();
        assert_eq!(pf_cofactor(&slots).num_terms(), 15);
    }
}
