//! Pfaffian builders over an arbitrary (possibly noncommutative) ring.

use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::{for_each_matching, for_each_permutation, sort_sign, subsets_of_size};
use crate::rat::{factorial, rint, Rat};
use crate::uea_core::{DomainError, Uea, UeaElement};

use super::subset::IndexSubset;

/// Errors from Pfaffian construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PfError {
    /// Pfaffians need an even number of slots.
    OddSize,
    /// The entry provider failed the skew-symmetry contract at `(a, b)`.
    NotSkew { a: usize, b: usize },
    /// Index bookkeeping error from the ambient algebra.
    Domain(DomainError),
}

impl core::fmt::Display for PfError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PfError::OddSize => write!(f, "Pfaffian requires an even number of slots"),
            PfError::NotSkew { a, b } => {
                write!(f, "entry provider is not skew-symmetric at slots ({}, {})", a, b)
            }
            PfError::Domain(e) => write!(f, "{}", e),
        }
    }
}

impl From<DomainError> for PfError {
    fn from(e: DomainError) -> Self {
        PfError::Domain(e)
    }
}

/// Minimal ring interface for Pfaffian sums: exact scalars, addition with
/// a rational scale, and (possibly noncommutative) multiplication.
pub trait PfRing {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &Rat);
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

impl PfRing for Uea {
    type Elem = UeaElement;

    fn zero(&self) -> UeaElement {
        UeaElement::zero()
    }

    fn one(&self) -> UeaElement {
        UeaElement::one()
    }

    fn is_zero(&self, x: &UeaElement) -> bool {
        x.is_zero()
    }

    fn add_scaled(&self, acc: &mut UeaElement, x: &UeaElement, c: &Rat) {
        acc.add_assign_scaled(x, c);
    }

    fn mul(&self, x: &UeaElement, y: &UeaElement) -> UeaElement {
        self.multiply(x, y)
    }
}

fn check_skew<R: PfRing>(
    ring: &R,
    k: usize,
    entry: &dyn Fn(usize, usize) -> R::Elem,
) -> Result<(), PfError> {
    for a in 0..k {
        if !ring.is_zero(&entry(a, a)) {
            return Err(PfError::NotSkew { a, b: a });
        }
        for b in (a + 1)..k {
            let mut s = entry(a, b);
            ring.add_scaled(&mut s, &entry(b, a), &rint(1));
            if !ring.is_zero(&s) {
                return Err(PfError::NotSkew { a, b });
            }
        }
    }
    Ok(())
}

/// Full permutation-sum Pfaffian of a `k x k` skew array of ring elements:
/// `(1/((k/2)!·2^{k/2})) Σ_σ sign(σ) Φ_{σ(1)σ(2)} ··· Φ_{σ(k-1)σ(k)}`.
///
/// `check` enables the quadratic skew-symmetry contract check.
pub fn pf_generic<R: PfRing>(
    ring: &R,
    k: usize,
    entry: &dyn Fn(usize, usize) -> R::Elem,
    check: bool,
) -> Result<R::Elem, PfError> {
    if k % 2 != 0 {
        return Err(PfError::OddSize);
    }
    if check {
        check_skew(ring, k, entry)?;
    }
    let m = (k / 2) as u64;
    let scale = (factorial(m) * Rat::from_integer(num_bigint::BigInt::from(2u32).pow(m as u32)))
        .recip();
    let mut acc = ring.zero();
    for_each_permutation(k, |perm, sign| {
        let mut prod = ring.one();
        let mut vanished = false;
        for t in 0..(k / 2) {
            let e = entry(perm[2 * t], perm[2 * t + 1]);
            if ring.is_zero(&e) {
                vanished = true;
                break;
            }
            prod = ring.mul(&prod, &e);
        }
        if !vanished {
            ring.add_scaled(&mut acc, &prod, &(scale.clone() * rint(sign)));
        }
    });
    Ok(acc)
}

/// Same Pfaffian via perfect matchings: `(1/(k/2)!) Σ_M sign(M) Σ_τ`
/// ordered products of the pair entries of `M` in every factor order `τ`.
/// Agrees with [`pf_generic`]; kept as an independently-derived path.
pub fn pf_via_matchings<R: PfRing>(
    ring: &R,
    k: usize,
    entry: &dyn Fn(usize, usize) -> R::Elem,
) -> Result<R::Elem, PfError> {
    if k % 2 != 0 {
        return Err(PfError::OddSize);
    }
    let m = k / 2;
    let scale = factorial(m as u64).recip();
    let mut acc = ring.zero();
    for_each_matching(k, |pairs, msign| {
        let entries: Vec<R::Elem> = pairs.iter().map(|&(a, b)| entry(a, b)).collect();
        if entries.iter().any(|e| ring.is_zero(e)) {
            return;
        }
        for_each_permutation(m, |tau, _| {
            let mut prod = ring.one();
            for &t in tau {
                prod = ring.mul(&prod, &entries[t]);
            }
            ring.add_scaled(&mut acc, &prod, &(scale.clone() * rint(msign)));
        });
    });
    Ok(acc)
}

/// `PfF_I`: the Pfaffian with entries `Φ_{ab} = F_{-i_a, i_b}` over the
/// increasing elements of `I`. Empty `I` gives `1`.
pub fn pf_f(u: &Uea, i_set: &IndexSubset) -> Result<UeaElement, PfError> {
    let elems = i_set.elements();
    let entry = move |a: usize, b: usize| -> UeaElement {
        u.gen_elem(-elems[a], elems[b]).expect("subset validated against rank")
    };
    pf_generic(u, elems.len(), &entry, cfg!(debug_assertions))
}

/// Pfaffian of an index *sequence*: zero on repeats, otherwise the sign of
/// the sorting permutation times the Pfaffian of the sorted subset.
pub fn pf_seq(u: &Uea, seq: &[i32]) -> Result<UeaElement, PfError> {
    match sort_sign(seq) {
        None => Ok(UeaElement::zero()),
        Some(sign) => {
            let mut sorted = seq.to_vec();
            sorted.sort_unstable();
            let sub = IndexSubset::new(u.rank(), &sorted)?;
            Ok(pf_f(u, &sub)?.scale(&rint(sign)))
        }
    }
}

/// `PfF_{hat i}`: the Pfaffian over the complement of `{i}` (odd rank).
pub fn pf_hat(u: &Uea, i: i32) -> Result<UeaElement, PfError> {
    let sub = IndexSubset::hat(u.rank(), i)?;
    pf_f(u, &sub)
}

/// Central elements `C_k = Σ_{|I|=k} PfF_I · PfF_{-I}`.
pub fn capelli(u: &Uea, k: usize) -> Result<UeaElement, PfError> {
    if k % 2 != 0 {
        return Err(PfError::OddSize);
    }
    let mut acc = UeaElement::zero();
    for elems in subsets_of_size(&u.rank().indices(), k) {
        let i_set = IndexSubset::from_sorted_unchecked(elems);
        let left = pf_f(u, &i_set)?;
        let right = pf_f(u, &i_set.negated())?;
        acc = acc.add(&u.multiply(&left, &right));
    }
    Ok(acc)
}

/// Render at most `limit` characters of an element for failure witnesses.
pub fn short_render(x: &UeaElement, limit: usize) -> String {
    let full = x.render();
    if full.len() <= limit {
        full
    } else {
        let mut s: String = full.chars().take(limit).collect();
        s.push_str("...");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rfrac;
    use crate::uea_core::AlgebraRank;

    fn uea(n: i32) -> Uea {
        Uea::new(AlgebraRank::new(n).unwrap())
    }

    #[test]
    fn two_element_cases() {
        let u = uea(5);
        // Pf over {0,1} is F_{0,1}
        let s = IndexSubset::new(u.rank(), &[0, 1]).unwrap();
        assert_eq!(pf_f(&u, &s).unwrap(), u.gen_elem(0, 1).unwrap());
        // Pf over {-i,i} is the Cartan element F_{ii}
        let c = IndexSubset::new(u.rank(), &[-1, 1]).unwrap();
        assert_eq!(pf_f(&u, &c).unwrap(), u.gen_elem(1, 1).unwrap());
        let c2 = IndexSubset::new(u.rank(), &[-2, 2]).unwrap();
        assert_eq!(pf_f(&u, &c2).unwrap(), u.gen_elem(2, 2).unwrap());
    }

    #[test]
    fn empty_pfaffian_is_one() {
        let u = uea(5);
        let s = IndexSubset::new(u.rank(), &[]).unwrap();
        assert_eq!(pf_f(&u, &s).unwrap(), UeaElement::one());
    }

    #[test]
    fn hat_two_equals_star_expression() {
        // Pf over {-2,-1,0,1}:
        //   F_{1,-2}*F_{-1,0} - F_{0,-2}*F_{-1,-1} + F_{-1,-2}*F_{0,-1}
        // with a*b = (ab+ba)/2.
        let u = uea(5);
        let star = |a: &UeaElement, b: &UeaElement| -> UeaElement {
            u.multiply(a, b).add(&u.multiply(b, a)).scale(&rfrac(1, 2))
        };
        let f = |i: i32, j: i32| u.gen_elem(i, j).unwrap();
        let expected = star(&f(1, -2), &f(-1, 0))
            .sub(&star(&f(0, -2), &f(-1, -1)))
            .add(&star(&f(-1, -2), &f(0, -1)));
        assert_eq!(pf_hat(&u, 2).unwrap(), expected);
    }

    #[test]
    fn matching_path_agrees() {
        let u = uea(5);
        for hat in [-2, -1, 0, 1, 2] {
            let s = IndexSubset::hat(u.rank(), hat).unwrap();
            let elems = s.elements().to_vec();
            let uref = &u;
            let entry =
                move |a: usize, b: usize| uref.gen_elem(-elems[a], elems[b]).unwrap();
            let via_m = pf_via_matchings(uref, 4, &entry).unwrap();
            assert_eq!(via_m, pf_f(uref, &s).unwrap());
        }
    }

    #[test]
    fn seq_sign_and_repeat_rules() {
        let u = uea(5);
        let sorted = pf_f(
            &u,
            &IndexSubset::new(u.rank(), &[-2, -1, 0, 1]).unwrap(),
        )
        .unwrap();
        // one transposition: opposite sign
        let swapped = pf_seq(&u, &[-1, -2, 0, 1]).unwrap();
        assert_eq!(swapped, sorted.neg());
        // repeated index: zero
        assert!(pf_seq(&u, &[-1, -1, 0, 1]).unwrap().is_zero());
    }

    #[test]
    fn capelli_smallest_is_ad_invariant() {
        let u = uea(5);
        let c2 = capelli(&u, 2).unwrap();
        assert_eq!(u.uniform_ad_weight(&c2), Some(alloc::vec![0, 0]));
    }

    #[test]
    fn odd_size_rejected() {
        let u = uea(5);
        let entry = |_a: usize, _b: usize| UeaElement::zero();
        assert_eq!(pf_generic(&u, 3, &entry, false).unwrap_err(), PfError::OddSize);
    }
}
