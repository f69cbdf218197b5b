//! Tensor powers of the standard module, Young symmetrizers, exact
//! traceless projection, and irreducible tensor-module construction.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::for_each_permutation;
use crate::rat::{rint, rzero, Weight};
use crate::uea_core::{canonical_generators, AlgebraRank, GenIndex};

use super::linalg::{Elim, Inserted, SMat, SVec};
use super::rep::{standard_module, RepModule};

/// The `m`-th tensor power of the standard module, with big-endian digit
/// encoding: basis index `Σ_t d_t N^(m-1-t)` where digit `d_t` is the
/// standard-basis position of factor `t`.
pub struct TensorSpace {
    rank: AlgebraRank,
    factors: usize,
    dim: usize,
    standard: RepModule,
}

impl TensorSpace {
    pub fn new(rank: AlgebraRank, factors: usize) -> Self {
        let big_n = rank.big_n() as usize;
        let dim = big_n.pow(factors as u32);
        TensorSpace {
            rank,
            factors,
            dim,
            standard: standard_module(rank),
        }
    }

    pub fn rank(&self) -> AlgebraRank {
        self.rank
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn standard(&self) -> &RepModule {
        &self.standard
    }

    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let big_n = self.rank.big_n() as usize;
        let mut out = alloc::vec![0usize; self.factors];
        for t in (0..self.factors).rev() {
            out[t] = index % big_n;
            index /= big_n;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        let big_n = self.rank.big_n() as usize;
        let mut idx = 0usize;
        for &d in digits {
            debug_assert!(d < big_n);
            idx = idx * big_n + d;
        }
        idx
    }

    /// Basis position of the elementary tensor with the given entry
    /// indices (each in `{-n,..,n}`).
    pub fn elementary(&self, entries: &[i32]) -> usize {
        assert_eq!(entries.len(), self.factors);
        let n = self.rank.n();
        let digits: Vec<usize> = entries.iter().map(|&e| (e + n) as usize).collect();
        self.index(&digits)
    }

    /// Entry indices of a basis position.
    pub fn entries_of(&self, index: usize) -> Vec<i32> {
        let n = self.rank.n();
        self.digits(index)
            .into_iter()
            .map(|d| d as i32 - n)
            .collect()
    }

    /// Weight of a basis position (sum of factor weights).
    pub fn weight_of_index(&self, index: usize) -> Weight {
        let n = self.rank.n() as usize;
        let mut w = alloc::vec![rzero(); n];
        for d in self.digits(index) {
            for (slot, c) in self.standard.weight_of(d).iter().enumerate() {
                w[slot] = w[slot].clone() + c.clone();
            }
        }
        w
    }

    /// Leibniz-rule matrix of a canonical generator on the tensor power.
    pub fn gen_matrix(&self, g: GenIndex) -> SMat {
        let std_mat = self.standard.canonical_gen_mat(g);
        let big_n = self.rank.big_n() as usize;
        let mut out = SMat::zero(self.dim, self.dim);
        for col in 0..self.dim {
            let digits = self.digits(col);
            for t in 0..self.factors {
                for (row, c) in std_mat.col(digits[t]).iter() {
                    let mut nd = digits.clone();
                    nd[t] = row;
                    debug_assert!(row < big_n);
                    out.add_entry(self.index(&nd), col, c.clone());
                }
            }
        }
        out
    }

    /// All canonical generator matrices on the tensor power.
    pub fn gen_matrices(&self) -> BTreeMap<GenIndex, SMat> {
        canonical_generators(self.rank)
            .into_iter()
            .map(|g| (g, self.gen_matrix(g)))
            .collect()
    }

    /// Factor permutation: the factor at slot `t` moves to slot `perm[t]`.
    pub fn permute(&self, perm: &[usize], v: &SVec) -> SVec {
        assert_eq!(perm.len(), self.factors);
        let mut out = SVec::zero(self.dim);
        for (idx, c) in v.iter() {
            let digits = self.digits(idx);
            let mut nd = alloc::vec![0usize; self.factors];
            for t in 0..self.factors {
                nd[perm[t]] = digits[t];
            }
            out.add_at(self.index(&nd), c.clone());
        }
        out
    }
}

/// A Young diagram shape: weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungShape {
    rows: Vec<usize>,
}

impl YoungShape {
    pub fn new(rows: &[usize]) -> Result<Self, String> {
        if rows.is_empty() || rows.iter().any(|&r| r == 0) {
            return Err(String::from("shape rows must be positive"));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(String::from("shape rows must be weakly decreasing"));
        }
        Ok(YoungShape {
            rows: rows.to_vec(),
        })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cells(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Cell numbers per row (row-major numbering).
    pub fn row_groups(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut next = 0;
        for &len in &self.rows {
            out.push((next..next + len).collect());
            next += len;
        }
        out
    }

    /// Cell numbers per column (row-major numbering).
    pub fn col_groups(&self) -> Vec<Vec<usize>> {
        let width = self.rows[0];
        let mut out = alloc::vec![Vec::new(); width];
        let mut cell = 0;
        for &len in &self.rows {
            for c in 0..len {
                out[c].push(cell);
                cell += 1;
            }
        }
        out
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.rows.iter().map(|r| alloc::format!("{}", r)).collect();
        alloc::format!("[{}]", parts.join(","))
    }
}

/// All permutations of `{0..m-1}` preserving each listed group, with the
/// product of per-group signs.
fn group_perms(groups: &[Vec<usize>], m: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out: Vec<(Vec<usize>, i64)> = alloc::vec![((0..m).collect(), 1)];
    for group in groups {
        let mut next = Vec::new();
        for_each_permutation(group.len(), |perm, sign| {
            for (base, base_sign) in &out {
                let mut p = base.clone();
                for (slot, &target) in perm.iter().enumerate() {
                    p[group[slot]] = base[group[target]];
                }
                next.push((p, base_sign * sign));
            }
        });
        out = next;
    }
    out
}

/// Apply the Young symmetrizer (column antisymmetrizer after row
/// symmetrizer, row-major cell numbering) to a tensor.
pub fn young_symmetrize(space: &TensorSpace, shape: &YoungShape, v: &SVec) -> SVec {
    assert_eq!(shape.cells(), space.factors());
    let m = space.factors();
    let mut row_sym = SVec::zero(space.dim());
    for (perm, _) in group_perms(&shape.row_groups(), m) {
        row_sym.add_scaled(&space.permute(&perm, v), &rint(1));
    }
    let mut out = SVec::zero(space.dim());
    for (perm, sign) in group_perms(&shape.col_groups(), m) {
        out.add_scaled(&space.permute(&perm, &row_sym), &rint(sign));
    }
    out
}

/// Exact projection onto traceless tensors along the span of metric
/// insertions. Built once per `(N, m)`.
pub struct TracelessCtx {
    contraction: SMat,
    insertion: SMat,
    solver: Elim,
}

impl TracelessCtx {
    pub fn new(space: &TensorSpace) -> Self {
        let m = space.factors();
        let big_n = space.rank().big_n() as usize;
        let dim = space.dim();
        let mut pairs = Vec::new();
        for p in 0..m {
            for q in (p + 1)..m {
                pairs.push((p, q));
            }
        }
        let small_dim = if m >= 2 { big_n.pow((m - 2) as u32) } else { 0 };
        let total_small = pairs.len() * small_dim;
        // contraction: factor pair (p,q) pairs via (e_a, e_b) = [a = -b]
        let mut contraction = SMat::zero(total_small, dim);
        for col in 0..dim {
            let digits = space.digits(col);
            for (pi, &(p, q)) in pairs.iter().enumerate() {
                if digits[p] + digits[q] != big_n - 1 {
                    continue;
                }
                let rest: Vec<usize> = (0..m)
                    .filter(|&t| t != p && t != q)
                    .map(|t| digits[t])
                    .collect();
                let mut small = 0usize;
                for &d in &rest {
                    small = small * big_n + d;
                }
                contraction.add_entry(pi * small_dim + small, col, rint(1));
            }
        }
        // insertion: put the metric tensor Σ_i e_i ⊗ e_{-i} at (p,q)
        let mut insertion = SMat::zero(dim, total_small);
        for (pi, &(p, q)) in pairs.iter().enumerate() {
            for small in 0..small_dim {
                let mut rest = Vec::with_capacity(m.saturating_sub(2));
                let mut s = small;
                for _ in 0..m.saturating_sub(2) {
                    rest.push(s % big_n);
                    s /= big_n;
                }
                rest.reverse();
                for a in 0..big_n {
                    let b = big_n - 1 - a;
                    let mut digits = alloc::vec![0usize; m];
                    let mut rest_iter = rest.iter();
                    for t in 0..m {
                        if t == p {
                            digits[t] = a;
                        } else if t == q {
                            digits[t] = b;
                        } else {
                            digits[t] = *rest_iter.next().expect("length");
                        }
                    }
                    insertion.add_entry(space.index(&digits), pi * small_dim + small, rint(1));
                }
            }
        }
        let ca = contraction.mul(&insertion);
        let mut solver = Elim::new(total_small, true);
        for j in 0..ca.num_cols() {
            solver.insert(ca.col(j));
        }
        // the recipe defines a projection only if im(insertion) meets the
        // traceless space trivially, i.e. rank(CA) = rank(A)
        let mut a_rank = Elim::new(dim, false);
        for j in 0..insertion.num_cols() {
            a_rank.insert(insertion.col(j));
        }
        assert_eq!(
            solver.rank(),
            a_rank.rank(),
            "trace complement intersects the traceless space; projection undefined"
        );
        TracelessCtx {
            contraction,
            insertion,
            solver,
        }
    }

    /// `v` minus its trace part.
    pub fn project(&self, v: &SVec) -> SVec {
        let traces = self.contraction.apply(v);
        if traces.is_zero() {
            return v.clone();
        }
        let coeffs = self
            .solver
            .express(&traces)
            .expect("contractions of the insertion span all contraction values");
        let mut y = SVec::zero(self.insertion.num_cols());
        for (t, c) in coeffs.iter().enumerate() {
            y.add_at(t, c.clone());
        }
        let x = self.insertion.apply(&y);
        v.sub(&x)
    }

    pub fn is_traceless(&self, v: &SVec) -> bool {
        self.contraction.apply(v).is_zero()
    }
}

/// The tableau vector: traceless projection of the Young-symmetrized
/// elementary tensor. May legitimately be zero.
pub fn tableau_vector(
    space: &TensorSpace,
    ctx: &TracelessCtx,
    shape: &YoungShape,
    entries: &[i32],
) -> SVec {
    let e = SVec::unit(space.dim(), space.elementary(entries));
    let sym = young_symmetrize(space, shape, &e);
    ctx.project(&sym)
}

/// The full `f`-th tensor power of the standard module, packaged as a
/// module (reducible for `f > 1`), with elementary tensors as basis.
pub fn tensor_power_module(rank: AlgebraRank, factors: usize) -> (RepModule, TensorSpace) {
    let space = TensorSpace::new(rank, factors);
    let gens = space.gen_matrices();
    let weights: Vec<Weight> = (0..space.dim()).map(|i| space.weight_of_index(i)).collect();
    let module = RepModule::new(
        rank,
        alloc::format!("tensor-power(N={},m={})", rank.big_n(), factors),
        gens,
        weights,
    );
    (module, space)
}

/// A constructed irreducible tensor module together with its ambient
/// machinery (kept for checks that work inside the full tensor power).
pub struct TensorModuleBundle {
    pub module: RepModule,
    pub space: TensorSpace,
    pub ctx: TracelessCtx,
    pub shape: YoungShape,
    pub ambient_gens: BTreeMap<GenIndex, SMat>,
    pub basis_vectors: Vec<SVec>,
    pub basis_fillings: Vec<Vec<i32>>,
    pub basis_elim: Elim,
}

impl TensorModuleBundle {
    /// Express an ambient tensor in module coordinates; `None` if it lies
    /// outside the module.
    pub fn to_module_coords(&self, v: &SVec) -> Option<SVec> {
        let coeffs = self.basis_elim.express(v)?;
        let mut out = SVec::zero(self.basis_vectors.len());
        for (t, c) in coeffs.iter().enumerate() {
            out.add_at(t, c.clone());
        }
        Some(out)
    }
}

/// Build the irreducible module of the given shape inside the traceless
/// part of the tensor power: greedy rank selection over all fillings in
/// lexicographic order, then restricted generator matrices.
pub fn tensor_module(rank: AlgebraRank, shape: &YoungShape) -> Result<TensorModuleBundle, String> {
    let n = rank.n() as usize;
    if shape.rows().len() > n {
        return Err(alloc::format!(
            "shape {} has more than {} rows",
            shape.render(),
            n
        ));
    }
    let m = shape.cells();
    let space = TensorSpace::new(rank, m);
    let ctx = TracelessCtx::new(&space);
    let ambient_gens = space.gen_matrices();

    let mut selector = Elim::new(space.dim(), false);
    let mut basis_vectors: Vec<SVec> = Vec::new();
    let mut basis_fillings: Vec<Vec<i32>> = Vec::new();
    let range: Vec<i32> = rank.indices();
    let mut filling = alloc::vec![0usize; m];
    loop {
        let entries: Vec<i32> = filling.iter().map(|&d| range[d]).collect();
        let v = tableau_vector(&space, &ctx, shape, &entries);
        if !v.is_zero() {
            if let Inserted::Pivot(_) = selector.insert(&v) {
                basis_vectors.push(v);
                basis_fillings.push(entries);
            }
        }
        // advance odometer
        let mut t = m;
        loop {
            if t == 0 {
                break;
            }
            t -= 1;
            filling[t] += 1;
            if filling[t] < range.len() {
                break;
            }
            filling[t] = 0;
        }
        if filling.iter().all(|&d| d == 0) {
            break;
        }
    }

    if basis_vectors.is_empty() {
        return Err(String::from("empty module: all tableau vectors vanish"));
    }

    let mut basis_elim = Elim::new(space.dim(), true);
    for b in &basis_vectors {
        basis_elim.insert(b);
    }

    let dim = basis_vectors.len();
    let mut gens = BTreeMap::new();
    for (g, amb) in &ambient_gens {
        let mut mat = SMat::zero(dim, dim);
        for (j, b) in basis_vectors.iter().enumerate() {
            let image = amb.apply(b);
            let coeffs = basis_elim
                .express(&image)
                .expect("module closed under the algebra action");
            for (t, c) in coeffs.iter().enumerate() {
                mat.add_entry(t, j, c.clone());
            }
        }
        gens.insert(*g, mat);
    }

    let mut weights = Vec::with_capacity(dim);
    for (b, f) in basis_vectors.iter().zip(&basis_fillings) {
        // every tableau vector is a weight vector; its weight is the
        // weight of the filling
        let mut w = alloc::vec![rzero(); n];
        for &e in f {
            if e > 0 {
                w[(e - 1) as usize] = w[(e - 1) as usize].clone() + rint(1);
            } else if e < 0 {
                w[(-e - 1) as usize] = w[(-e - 1) as usize].clone() - rint(1);
            }
        }
        for idx in b.support() {
            debug_assert_eq!(space.weight_of_index(idx), w);
        }
        weights.push(w);
    }

    let module = RepModule::new(
        rank,
        alloc::format!("tensor(N={},{})", rank.big_n(), shape.render()),
        gens,
        weights,
    );
    Ok(TensorModuleBundle {
        module,
        space,
        ctx,
        shape: shape.clone(),
        ambient_gens,
        basis_vectors,
        basis_fillings,
        basis_elim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank5() -> AlgebraRank {
        AlgebraRank::new(5).unwrap()
    }

    #[test]
    fn encoding_roundtrip() {
        let space = TensorSpace::new(rank5(), 3);
        for idx in [0usize, 7, 19, 124] {
            assert_eq!(space.index(&space.digits(idx)), idx);
        }
        assert_eq!(space.elementary(&[-2, -2, -2]), 0);
        assert_eq!(space.entries_of(124), alloc::vec![2, 2, 2]);
    }

    #[test]
    fn symmetrizers_on_pairs() {
        let space = TensorSpace::new(rank5(), 2);
        let e12 = SVec::unit(space.dim(), space.elementary(&[1, 2]));
        let e21 = SVec::unit(space.dim(), space.elementary(&[2, 1]));
        let anti = young_symmetrize(&space, &YoungShape::new(&[1, 1]).unwrap(), &e12);
        assert_eq!(anti, e12.sub(&e21));
        let sym = young_symmetrize(&space, &YoungShape::new(&[2]).unwrap(), &e12);
        let mut expect = e12.clone();
        expect.add_scaled(&e21, &rint(1));
        assert_eq!(sym, expect);
    }

    #[test]
    fn traceless_projection_basics() {
        let space = TensorSpace::new(rank5(), 2);
        let ctx = TracelessCtx::new(&space);
        // antisymmetric tensors are already traceless
        let e12 = SVec::unit(space.dim(), space.elementary(&[1, 2]));
        let anti = young_symmetrize(&space, &YoungShape::new(&[1, 1]).unwrap(), &e12);
        assert_eq!(ctx.project(&anti), anti);
        // the metric tensor projects to zero
        let mut metric = SVec::zero(space.dim());
        for i in -2..=2 {
            metric.add_at(space.elementary(&[i, -i]), rint(1));
        }
        assert!(ctx.project(&metric).is_zero());
        // projection is idempotent on a generic vector
        let mut v = SVec::unit(space.dim(), space.elementary(&[1, -1]));
        v.add_at(space.elementary(&[0, 0]), rint(3));
        let p = ctx.project(&v);
        assert!(ctx.is_traceless(&p));
        assert_eq!(ctx.project(&p), p);
    }

    #[test]
    fn symmetric_square_traceless_dimension() {
        // the traceless part of the symmetric square of the 5-dim module
        // has dimension 14
        let space = TensorSpace::new(rank5(), 2);
        let ctx = TracelessCtx::new(&space);
        let shape = YoungShape::new(&[2]).unwrap();
        let mut elim = Elim::new(space.dim(), false);
        for a in -2..=2 {
            for b in -2..=2 {
                let v = tableau_vector(&space, &ctx, &shape, &[a, b]);
                if !v.is_zero() {
                    elim.insert(&v);
                }
            }
        }
        assert_eq!(elim.rank(), 14);
    }

    #[test]
    fn tensor_module_dimensions() {
        let adj = tensor_module(rank5(), &YoungShape::new(&[1, 1]).unwrap()).unwrap();
        assert_eq!(adj.module.dim(), 10);
        let sym = tensor_module(rank5(), &YoungShape::new(&[2]).unwrap()).unwrap();
        assert_eq!(sym.module.dim(), 14);
        let std_like = tensor_module(rank5(), &YoungShape::new(&[1]).unwrap()).unwrap();
        assert_eq!(std_like.module.dim(), 5);
    }

    #[test]
    fn tensor_module_is_homomorphic() {
        let rank = rank5();
        let u = crate::uea_core::Uea::new(rank);
        let adj = tensor_module(rank, &YoungShape::new(&[1, 1]).unwrap()).unwrap();
        assert!(adj.module.hom_check(&u).is_ok());
        // zero weight space of the adjoint module has dimension 2
        let zero_w = alloc::vec![rzero(), rzero()];
        let spaces = adj.module.weight_spaces();
        assert_eq!(spaces.get(&zero_w).map(|v| v.len()), Some(2));
    }

    #[test]
    fn symmetrizer_commutes_with_action() {
        let rank = rank5();
        let space = TensorSpace::new(rank, 2);
        let shape = YoungShape::new(&[2]).unwrap();
        let ctx = TracelessCtx::new(&space);
        for (_, amb) in space.gen_matrices() {
            let v = SVec::unit(space.dim(), space.elementary(&[1, -2]));
            let a = young_symmetrize(&space, &shape, &amb.apply(&v));
            let b = amb.apply(&young_symmetrize(&space, &shape, &v));
            assert_eq!(a, b);
            let pa = ctx.project(&amb.apply(&v));
            let pb = amb.apply(&ctx.project(&v));
            assert_eq!(pa, pb);
        }
    }
}
