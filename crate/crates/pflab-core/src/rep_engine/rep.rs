//! Finite-dimensional exact modules: generator matrices, weights, element
//! evaluation, and relative highest-vector spaces.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::rat::{rint, rzero, Rat, Weight};
use crate::uea_core::{
    canonical_generators, AlgebraRank, Canonical, GenIndex, Uea, UeaElement,
};
use num_traits::Zero;

use super::linalg::{kernel_basis, SMat, SVec};

/// An exact module over `U(o_N)`: a chosen weight-vector basis, one sparse
/// matrix per canonical generator, and the weight of every basis vector.
pub struct RepModule {
    rank: AlgebraRank,
    dim: usize,
    label: String,
    gens: BTreeMap<GenIndex, SMat>,
    weights: Vec<Weight>,
}

impl RepModule {
    pub fn new(
        rank: AlgebraRank,
        label: String,
        gens: BTreeMap<GenIndex, SMat>,
        weights: Vec<Weight>,
    ) -> Self {
        let dim = weights.len();
        for m in gens.values() {
            debug_assert_eq!(m.rows(), dim);
            debug_assert_eq!(m.num_cols(), dim);
        }
        RepModule {
            rank,
            dim,
            label,
            gens,
            weights,
        }
    }

    pub fn rank(&self) -> AlgebraRank {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn weight_of(&self, basis_index: usize) -> &Weight {
        &self.weights[basis_index]
    }

    pub fn canonical_gen_mat(&self, g: GenIndex) -> &SMat {
        self.gens
            .get(&g)
            .expect("matrix present for every canonical generator")
    }

    pub fn gens(&self) -> impl Iterator<Item = (&GenIndex, &SMat)> {
        self.gens.iter()
    }

    /// Matrix of `F_{ij}` for arbitrary in-range indices (sign-adjusted
    /// canonical lookup; the zero matrix for `j = -i`).
    pub fn gen_mat(&self, i: i32, j: i32) -> SMat {
        match crate::uea_core::canonicalize_generator(self.rank, i, j)
            .expect("indices in range")
        {
            Canonical::Zero => SMat::zero(self.dim, self.dim),
            Canonical::Gen { sign, rep } => {
                let m = self.canonical_gen_mat(rep);
                if sign == 1 {
                    m.clone()
                } else {
                    m.scale(&rint(-1))
                }
            }
        }
    }

    /// Apply a PBW monomial word (leftmost factor acts last).
    fn apply_word(&self, word: &[GenIndex], v: &SVec) -> SVec {
        let mut out = v.clone();
        for g in word.iter().rev() {
            out = self.canonical_gen_mat(*g).apply(&out);
            if out.is_zero() {
                break;
            }
        }
        out
    }

    /// Apply an element to a vector.
    pub fn act(&self, x: &UeaElement, v: &SVec) -> SVec {
        let mut out = SVec::zero(self.dim);
        let c0 = x.constant_coeff();
        if !c0.is_zero() {
            out.add_scaled(v, &c0);
        }
        for (m, c) in x.terms() {
            if m.is_one() {
                continue;
            }
            let w = self.apply_word(m.factors(), v);
            out.add_scaled(&w, c);
        }
        out
    }

    /// Full matrix of an element.
    pub fn elem_matrix(&self, x: &UeaElement) -> SMat {
        let mut out = SMat::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.act(x, &SVec::unit(self.dim, j));
            out.set_col(j, col);
        }
        out
    }

    /// Exhaustive bracket-homomorphism check over canonical generator
    /// pairs: `matrix([a,b]) = [matrix(a), matrix(b)]`.
    pub fn hom_check(&self, u: &Uea) -> Result<(), String> {
        assert!(u.rank() == self.rank);
        let gens: Vec<GenIndex> = self.gens.keys().copied().collect();
        for &a in &gens {
            for &b in &gens {
                let lhs = self
                    .canonical_gen_mat(a)
                    .commutator(self.canonical_gen_mat(b));
                let rhs = self.elem_matrix(&u.bracket_generators(a, b));
                if lhs != rhs {
                    return Err(alloc::format!("bracket mismatch at [{}, {}]", a, b));
                }
            }
        }
        Ok(())
    }

    /// Basis indices grouped by full weight.
    pub fn weight_spaces(&self) -> BTreeMap<Vec<Rat>, Vec<usize>> {
        let mut out: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    /// The weight of a vector supported on equal-weight basis indices;
    /// `None` for zero or mixed-weight vectors.
    pub fn weight_of_vector(&self, v: &SVec) -> Option<Weight> {
        let mut found: Option<Weight> = None;
        for i in v.support() {
            match &found {
                None => found = Some(self.weights[i].clone()),
                Some(w) => {
                    if w != &self.weights[i] {
                        return None;
                    }
                }
            }
        }
        found
    }

    /// Positive-root canonical generators of the interior subalgebra
    /// `o_{N-2}` (indices bounded by `n-1` in absolute value).
    pub fn interior_positive_gens(&self) -> Vec<GenIndex> {
        let inner = AlgebraRank::new(self.rank.big_n() - 2).expect("N >= 5");
        canonical_generators(inner)
            .into_iter()
            .filter(|g| g.class() == crate::uea_core::GenClass::Positive)
            .collect()
    }

    /// Interior Cartan eigenvalue tuple (the first `n-1` weight entries).
    pub fn interior_weight_of(&self, basis_index: usize) -> Weight {
        let n = self.rank.n() as usize;
        self.weights[basis_index][..n - 1].to_vec()
    }
}

/// A space of interior-highest vectors: annihilated by every positive
/// interior generator, with fixed interior weight `mu`. Basis vectors are
/// full-weight vectors; their ambient weights are stored alongside.
pub struct HighestSpace {
    pub mu: Weight,
    pub basis: Vec<SVec>,
    pub full_weights: Vec<Weight>,
}

impl HighestSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Compute the interior-highest space for one interior weight `mu`,
/// slice by full weight so every basis vector is a weight vector.
pub fn highest_space(module: &RepModule, mu: &Weight) -> HighestSpace {
    let n = module.rank().n() as usize;
    assert_eq!(mu.len(), n - 1);
    let positives = module.interior_positive_gens();
    let mut basis = Vec::new();
    let mut full_weights = Vec::new();
    for (w, idxs) in module.weight_spaces() {
        if &w[..n - 1] != &mu[..] {
            continue;
        }
        // columns: stacked images of the slice's unit vectors
        let mats: Vec<SMat> = positives
            .iter()
            .map(|g| module.canonical_gen_mat(*g).clone())
            .collect();
        let mat_refs: Vec<&SMat> = mats.iter().collect();
        let stacked = SMat::stack_rows(&mat_refs);
        let mut slice_mat = SMat::zero(stacked.rows(), idxs.len());
        for (t, &bi) in idxs.iter().enumerate() {
            slice_mat.set_col(t, stacked.col(bi).clone());
        }
        for kv in kernel_basis(&slice_mat) {
            // lift slice coordinates back to module coordinates
            let mut v = SVec::zero(module.dim());
            for (t, c) in kv.iter() {
                v.add_at(idxs[t], c.clone());
            }
            basis.push(v);
            full_weights.push(w.clone());
        }
    }
    HighestSpace {
        mu: mu.clone(),
        basis,
        full_weights,
    }
}

/// Every interior weight whose highest space is nonzero, with its space.
pub fn all_highest_spaces(module: &RepModule) -> Vec<HighestSpace> {
    let n = module.rank().n() as usize;
    let mut mus: Vec<Weight> = Vec::new();
    for (w, _) in module.weight_spaces() {
        let mu = w[..n - 1].to_vec();
        if !mus.contains(&mu) {
            mus.push(mu);
        }
    }
    mus.sort();
    let mut out = Vec::new();
    for mu in mus {
        let hs = highest_space(module, &mu);
        if hs.dim() > 0 {
            out.push(hs);
        }
    }
    out
}

/// The standard `N`-dimensional module on basis `e_{-n},..,e_n`
/// (position `p` holds index `p - n`).
pub fn standard_module(rank: AlgebraRank) -> RepModule {
    let n = rank.n();
    let big_n = rank.big_n() as usize;
    let pos = |i: i32| -> usize { (i + n) as usize };
    let mut gens = BTreeMap::new();
    for g in canonical_generators(rank) {
        let (i, j) = (g.i(), g.j());
        let mut m = SMat::zero(big_n, big_n);
        // E_ij: e_j -> e_i
        m.add_entry(pos(i), pos(j), rint(1));
        // -E_{-j,-i}: e_{-i} -> -e_{-j}
        m.add_entry(pos(-j), pos(-i), rint(-1));
        gens.insert(g, m);
    }
    let mut weights = Vec::with_capacity(big_n);
    for p in 0..big_n {
        let i = p as i32 - n;
        let mut w = alloc::vec![rzero(); n as usize];
        if i > 0 {
            w[(i - 1) as usize] = rint(1);
        } else if i < 0 {
            w[(-i - 1) as usize] = rint(-1);
        }
        weights.push(w);
    }
    RepModule::new(rank, alloc::format!("standard(N={})", rank.big_n()), gens, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea_core::canonicalize_generator;

    fn setup() -> (Uea, RepModule) {
        let rank = AlgebraRank::new(5).unwrap();
        (Uea::new(rank), standard_module(rank))
    }

    #[test]
    fn standard_matrix_actions() {
        let (_, m) = setup();
        let pos = |i: i32| (i + 2) as usize;
        // F_12 e_2 = e_1 and F_12 e_{-1} = -e_{-2}
        let f12 = m.gen_mat(1, 2);
        assert_eq!(
            f12.apply(&SVec::unit(5, pos(2))),
            SVec::unit(5, pos(1))
        );
        assert_eq!(
            f12.apply(&SVec::unit(5, pos(-1))),
            SVec::unit(5, pos(-2)).scale(&rint(-1))
        );
    }

    #[test]
    fn standard_weights() {
        let (_, m) = setup();
        assert_eq!(m.weight_of(3), &alloc::vec![rint(1), rint(0)]); // e_1
        assert_eq!(m.weight_of(2), &alloc::vec![rint(0), rint(0)]); // e_0
        assert_eq!(m.weight_of(4), &alloc::vec![rint(0), rint(1) ]); // e_2
        let spaces = m.weight_spaces();
        assert_eq!(spaces.len(), 5);
        let total: usize = spaces.values().map(|v| v.len()).sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn homomorphism_exhaustive() {
        let (u, m) = setup();
        assert!(m.hom_check(&u).is_ok());
    }

    #[test]
    fn act_composes_with_multiply() {
        let (u, m) = setup();
        let x = u.gen_elem(-2, 1).unwrap();
        let y = u.gen_elem(1, -2).unwrap();
        let xy = u.multiply(&x, &y);
        for p in 0..5 {
            let v = SVec::unit(5, p);
            let direct = m.act(&xy, &v);
            let composed = m.act(&x, &m.act(&y, &v));
            assert_eq!(direct, composed);
        }
    }

    #[test]
    fn interior_positive_census() {
        let (_, m) = setup();
        let pos = m.interior_positive_gens();
        // o_3 has a single positive canonical generator, F_{-1,0}
        assert_eq!(pos.len(), 1);
        let g = canonicalize_generator(m.rank(), -1, 0).unwrap().rep().unwrap();
        assert_eq!(pos[0], g);
    }

    #[test]
    fn standard_highest_spaces() {
        let (_, m) = setup();
        let spaces = all_highest_spaces(&m);
        // mu=(-1): span{e_{-1}}; mu=(0): span{e_{-2}, e_2} (e_0 is raised
        // to e_{-1} by the interior positive generator, so it drops out)
        let mut dims: Vec<(Weight, usize)> = spaces
            .iter()
            .map(|h| (h.mu.clone(), h.dim()))
            .collect();
        dims.sort();
        assert_eq!(
            dims,
            alloc::vec![
                (alloc::vec![rint(-1)], 1),
                (alloc::vec![rint(0)], 2),
            ]
        );
        // branching completeness: 1*dim V(-1) + 2*dim V(0) = 1*3 + 2*1 = 5
    }
}
