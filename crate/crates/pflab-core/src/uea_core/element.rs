//! PBW monomials and exact linear combinations of them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_traits::Zero;

use super::index::GenIndex;
use crate::rat::{fmt_rat, rone, Rat};

/// An ordered word of canonical generators, sorted nondecreasingly in the
/// PBW order. The empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    factors: Vec<GenIndex>,
}

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial { factors: Vec::new() }
    }

    pub fn single(g: GenIndex) -> Self {
        PbwMonomial {
            factors: alloc::vec![g],
        }
    }

    /// Wraps a factor list that is already sorted; panics in debug builds if
    /// it is not (callers inside this crate guarantee sortedness).
    pub fn from_sorted(factors: Vec<GenIndex>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        PbwMonomial { factors }
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[GenIndex] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for g in &self.factors {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Finite linear combination of PBW monomials with exact rational
/// coefficients. Zero coefficients are never stored, so equality of term maps
/// is equality in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, Rat>,
}

impl UeaElement {
    pub fn zero() -> Self {
        UeaElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(rone())
    }

    pub fn scalar(c: Rat) -> Self {
        let mut e = Self::zero();
        e.add_term(PbwMonomial::one(), c);
        e
    }

    pub fn from_gen(g: GenIndex) -> Self {
        let mut e = Self::zero();
        e.add_term(PbwMonomial::single(g), rone());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c * m`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, m: PbwMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &UeaElement, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone() * scale.clone());
        }
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &rone());
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-rone());
        out
    }

    pub fn scale(&self, c: &Rat) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_assign_scaled(self, c);
        out
    }

    pub fn neg(&self) -> UeaElement {
        self.scale(&-rone())
    }

    /// Maximum word degree over all stored terms.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// The coefficient of the empty word.
    pub fn constant_coeff(&self) -> Rat {
        self.terms
            .get(&PbwMonomial::one())
            .cloned()
            .unwrap_or_else(crate::rat::rzero)
    }

    /// Debug serialization: terms in map order, `coeff * F[i,j]...F[k,l]`.
    pub fn render(&self) -> String {
        use alloc::format;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format!("{} * {}", fmt_rat(c), m));
        }
        out
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Element of the tensor square of the enveloping algebra, both sides in
/// canonical PBW form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorUeaElement {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), Rat>,
}

impl TensorUeaElement {
    pub fn zero() -> Self {
        TensorUeaElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, left: PbwMonomial, right: PbwMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &TensorUeaElement, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), c.clone() * scale.clone());
        }
    }

    pub fn sub(&self, other: &TensorUeaElement) -> TensorUeaElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-rone());
        out
    }

    pub fn render(&self) -> String {
        use alloc::format;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, ((l, r), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format!("{} * {} (x) {}", fmt_rat(c), l, r));
        }
        out
    }
}
