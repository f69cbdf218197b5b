//! Straightening arithmetic: brackets, products, coproduct, adjoint weights.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::element::{PbwMonomial, TensorUeaElement, UeaElement};
use super::index::{
    add_unit, canonical_generators, canonicalize_generator, AlgebraRank, Canonical, DomainError,
    GenIndex,
};
use crate::rat::{rint, rone};

/// Arithmetic context for `U(o_N)`.
///
/// Holds the rank and a straightening memo. All operations are pure
/// functions of their inputs; the memo only caches normal forms of free
/// words, so correctness never depends on cache hits. The cache makes the
/// context non-`Sync`; use one context per worker.
pub struct Uea {
    rank: AlgebraRank,
    memo: RefCell<BTreeMap<Vec<GenIndex>, UeaElement>>,
}

impl Uea {
    pub fn new(rank: AlgebraRank) -> Self {
        Uea {
            rank,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn rank(&self) -> AlgebraRank {
        self.rank
    }

    /// All canonical generators in PBW order.
    pub fn generators(&self) -> Vec<GenIndex> {
        canonical_generators(self.rank)
    }

    /// `F_ij` as an element: canonicalized, possibly zero.
    pub fn gen_elem(&self, i: i32, j: i32) -> Result<UeaElement, DomainError> {
        match canonicalize_generator(self.rank, i, j)? {
            Canonical::Zero => Ok(UeaElement::zero()),
            Canonical::Gen { sign, rep } => Ok(UeaElement::from_gen(rep).scale(&rint(sign as i64))),
        }
    }

    /// Structure constants: `[F_ij, F_kl] = d_kj F_il - d_il F_kj - d_{-k,i}
    /// F_{-j,l} + d_{-l,j} F_{k,-i}`, each term canonicalized. Degree <= 1.
    pub fn bracket_generators(&self, a: GenIndex, b: GenIndex) -> UeaElement {
        let (i, j, k, l) = (a.i(), a.j(), b.i(), b.j());
        let mut out = UeaElement::zero();
        let mut put = |p: i32, q: i32, scale: i64| {
            // indices stay in range, so unwrap is safe
            let c = canonicalize_generator(self.rank, p, q).unwrap();
            if let Canonical::Gen { sign, rep } = c {
                out.add_term(PbwMonomial::single(rep), rint(scale * sign as i64));
            }
        };
        if k == j {
            put(i, l, 1);
        }
        if i == l {
            put(k, j, -1);
        }
        if -k == i {
            put(-j, l, -1);
        }
        if -l == j {
            put(k, -i, 1);
        }
        out
    }

    /// PBW normal form of a free word of canonical generators.
    ///
    /// Straightening rewrites the leftmost adjacent out-of-order pair
    /// `..ba..` as `..ab.. + ..[b,a]..`; the recursion terminates because
    /// (degree, inversion count) drops lexicographically.
    fn normal_form_word(&self, word: &[GenIndex]) -> UeaElement {
        let inv = word
            .windows(2)
            .position(|w| w[0] > w[1]);
        let pos = match inv {
            None => {
                let mut e = UeaElement::zero();
                e.add_term(PbwMonomial::from_sorted(word.to_vec()), rone());
                return e;
            }
            Some(p) => p,
        };
        let key = word.to_vec();
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let mut swapped = key.clone();
        swapped.swap(pos, pos + 1);
        let mut out = self.normal_form_word(&swapped);
        let correction = self.bracket_generators(word[pos], word[pos + 1]);
        for (m, c) in correction.terms() {
            debug_assert!(m.degree() == 1);
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..pos]);
            shorter.extend_from_slice(m.factors());
            shorter.extend_from_slice(&word[pos + 2..]);
            let part = self.normal_form_word(&shorter);
            out.add_assign_scaled(&part, c);
        }
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// Product of two elements, fully straightened.
    pub fn multiply(&self, x: &UeaElement, y: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                let mut word = Vec::with_capacity(mx.degree() + my.degree());
                word.extend_from_slice(mx.factors());
                word.extend_from_slice(my.factors());
                let nf = self.normal_form_word(&word);
                out.add_assign_scaled(&nf, &(cx.clone() * cy.clone()));
            }
        }
        out
    }

    /// Left-fold product of several elements.
    pub fn multiply_all(&self, xs: &[&UeaElement]) -> UeaElement {
        let mut acc = UeaElement::one();
        for x in xs {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &UeaElement, y: &UeaElement) -> UeaElement {
        self.multiply(x, y).sub(&self.multiply(y, x))
    }

    /// Primitive coproduct `F -> F(x)1 + 1(x)F`, extended multiplicatively.
    /// On a sorted word this is the sum over position subsets, both halves
    /// staying sorted, so no re-straightening is needed.
    pub fn coproduct(&self, x: &UeaElement) -> TensorUeaElement {
        let mut out = TensorUeaElement::zero();
        for (m, c) in x.terms() {
            let d = m.degree();
            debug_assert!(d < usize::BITS as usize);
            for mask in 0u64..(1u64 << d) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (pos, g) in m.factors().iter().enumerate() {
                    if mask & (1 << pos) != 0 {
                        left.push(*g);
                    } else {
                        right.push(*g);
                    }
                }
                out.add_term(
                    PbwMonomial::from_sorted(left),
                    PbwMonomial::from_sorted(right),
                    c.clone(),
                );
            }
        }
        out
    }

    /// Product in the tensor square, straightening each side.
    pub fn multiply_tensor(
        &self,
        x: &TensorUeaElement,
        y: &TensorUeaElement,
    ) -> TensorUeaElement {
        let mut out = TensorUeaElement::zero();
        for ((lx, rx), cx) in x.terms() {
            for ((ly, ry), cy) in y.terms() {
                let mut lword = Vec::with_capacity(lx.degree() + ly.degree());
                lword.extend_from_slice(lx.factors());
                lword.extend_from_slice(ly.factors());
                let mut rword = Vec::with_capacity(rx.degree() + ry.degree());
                rword.extend_from_slice(rx.factors());
                rword.extend_from_slice(ry.factors());
                let lnf = self.normal_form_word(&lword);
                let rnf = self.normal_form_word(&rword);
                let scale = cx.clone() * cy.clone();
                for (lm, lc) in lnf.terms() {
                    for (rm, rc) in rnf.terms() {
                        out.add_term(
                            lm.clone(),
                            rm.clone(),
                            scale.clone() * lc.clone() * rc.clone(),
                        );
                    }
                }
            }
        }
        out
    }

    /// Sum of the roots of the factors: the weight by which the monomial
    /// shifts any weight vector it acts on.
    pub fn ad_weight(&self, m: &PbwMonomial) -> Vec<i64> {
        let n = self.rank.n();
        let mut w = alloc::vec![0i64; n as usize];
        for g in m.factors() {
            add_unit(&mut w, g.i(), 1);
            add_unit(&mut w, g.j(), -1);
        }
        w
    }

    /// If every term of `x` carries the same adjoint weight, returns it.
    pub fn uniform_ad_weight(&self, x: &UeaElement) -> Option<Vec<i64>> {
        let mut found: Option<Vec<i64>> = None;
        for (m, _) in x.terms() {
            let w = self.ad_weight(m);
            match &found {
                None => found = Some(w),
                Some(prev) => {
                    if *prev != w {
                        return None;
                    }
                }
            }
        }
        found
    }

    /// Number of memoized normal forms (diagnostic only).
    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    fn uea(n: i32) -> Uea {
        Uea::new(AlgebraRank::new(n).unwrap())
    }

    fn gen(u: &Uea, i: i32, j: i32) -> GenIndex {
        canonicalize_generator(u.rank(), i, j)
            .unwrap()
            .rep()
            .unwrap()
    }

    #[test]
    fn bracket_cartan_difference() {
        // [F_12, F_21] = F_11 - F_22
        let u = uea(5);
        let f12 = u.gen_elem(1, 2).unwrap();
        let f21 = u.gen_elem(2, 1).unwrap();
        let lhs = u.commutator(&f12, &f21);
        let rhs = u.gen_elem(1, 1).unwrap().sub(&u.gen_elem(2, 2).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_disjoint_vanishes() {
        // [F_12, F_34] = 0 at N=9
        let u = uea(9);
        let a = u.gen_elem(1, 2).unwrap();
        let b = u.gen_elem(3, 4).unwrap();
        assert!(u.commutator(&a, &b).is_zero());
    }

    #[test]
    fn straightening_single_step() {
        // F_{-1,0} * F_{0,-1} = F_{0,-1}F_{-1,0} + [F_{-1,0}, F_{0,-1}]
        let u = uea(5);
        let raise = u.gen_elem(-1, 0).unwrap();
        let lower = u.gen_elem(0, -1).unwrap();
        let prod = u.multiply(&raise, &lower);
        let mut expected = UeaElement::zero();
        expected.add_term(
            PbwMonomial::from_sorted(alloc::vec![gen(&u, 0, -1), gen(&u, -1, 0)]),
            rone(),
        );
        let a = gen(&u, -1, 0);
        let b = gen(&u, 0, -1);
        expected.add_assign_scaled(&u.bracket_generators(a, b), &rone());
        assert_eq!(prod, expected);
        // and the already-normal direction is returned unchanged
        let prod2 = u.multiply(&lower, &raise);
        let mut expected2 = UeaElement::zero();
        expected2.add_term(
            PbwMonomial::from_sorted(alloc::vec![gen(&u, 0, -1), gen(&u, -1, 0)]),
            rone(),
        );
        assert_eq!(prod2, expected2);
    }

    #[test]
    fn unit_is_identity() {
        let u = uea(5);
        let x = u
            .multiply(&u.gen_elem(-2, 1).unwrap(), &u.gen_elem(0, -1).unwrap());
        assert_eq!(u.multiply(&UeaElement::one(), &x), x);
        assert_eq!(u.multiply(&x, &UeaElement::one()), x);
    }

    #[test]
    fn associativity_witness() {
        let u = uea(5);
        let a = u.gen_elem(-2, -1).unwrap();
        let b = u.gen_elem(-1, 0).unwrap();
        let c = u.gen_elem(0, 1).unwrap();
        let left = u.multiply(&u.multiply(&a, &b), &c);
        let right = u.multiply(&a, &u.multiply(&b, &c));
        assert_eq!(left, right);
    }

    #[test]
    fn coproduct_primitive() {
        let u = uea(5);
        let f = u.gen_elem(-2, -1).unwrap();
        let d = u.coproduct(&f);
        assert_eq!(d.num_terms(), 2);
        let one = u.coproduct(&UeaElement::one());
        assert_eq!(one.num_terms(), 1);
    }

    #[test]
    fn ad_weight_examples() {
        let u = uea(5);
        // F_{-2,-1} carries root e_1 - e_2
        let m = PbwMonomial::single(gen(&u, -2, -1));
        assert_eq!(u.ad_weight(&m), alloc::vec![1, -1]);
        // Cartan generators carry weight zero
        let c = PbwMonomial::single(gen(&u, -1, -1));
        assert_eq!(u.ad_weight(&c), alloc::vec![0, 0]);
    }

    #[test]
    fn straightening_preserves_ad_weight() {
        let u = uea(5);
        let gens = u.generators();
        for a in &gens {
            for b in &gens {
                let prod = u.multiply(&UeaElement::from_gen(*a), &UeaElement::from_gen(*b));
                let mut want = u.ad_weight(&PbwMonomial::single(*a));
                let wb = u.ad_weight(&PbwMonomial::single(*b));
                for (x, y) in want.iter_mut().zip(wb) {
                    *x += y;
                }
                for (m, _) in prod.terms() {
                    assert_eq!(u.ad_weight(m), want);
                }
            }
        }
    }

    #[test]
    fn scalar_arithmetic() {
        let u = uea(5);
        let two = UeaElement::scalar(rint(2));
        let f = u.gen_elem(-2, 0).unwrap();
        assert_eq!(u.multiply(&two, &f), f.scale(&rint(2)));
    }
}
