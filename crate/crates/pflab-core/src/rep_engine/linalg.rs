//! Exact sparse vectors, matrices, and incremental Gauss-Jordan
//! elimination over arbitrary-precision rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::rat::{rzero, Rat};
use num_traits::Zero;

/// Sparse exact vector: no explicit zero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SVec {
    dim: usize,
    entries: BTreeMap<usize, Rat>,
}

impl SVec {
    pub fn zero(dim: usize) -> Self {
        SVec {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn unit(dim: usize, at: usize) -> Self {
        let mut v = SVec::zero(dim);
        v.add_at(at, Rat::from_integer(1.into()));
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, at: usize) -> Rat {
        self.entries.get(&at).cloned().unwrap_or_else(rzero)
    }

    pub fn add_at(&mut self, at: usize, c: Rat) {
        debug_assert!(at < self.dim);
        if c == rzero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.entries.entry(at) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s == rzero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SVec, c: &Rat) {
        debug_assert_eq!(self.dim, other.dim);
        if *c == rzero() {
            return;
        }
        for (&at, x) in &other.entries {
            self.add_at(at, x.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> SVec {
        let mut out = SVec::zero(self.dim);
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::from_integer((-1).into()));
        out
    }

    /// First (smallest-index) nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.entries.iter().next().map(|(&i, c)| (i, c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    /// Concatenate several vectors into one long vector.
    pub fn stack(parts: &[&SVec]) -> SVec {
        let dim = parts.iter().map(|p| p.dim).sum();
        let mut out = SVec::zero(dim);
        let mut offset = 0;
        for p in parts {
            for (i, c) in p.iter() {
                out.add_at(offset + i, c.clone());
            }
            offset += p.dim;
        }
        out
    }
}

/// Sparse exact matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMat {
    rows: usize,
    cols: Vec<SVec>,
}

impl SMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SMat {
            rows,
            cols: alloc::vec![SVec::zero(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SMat::zero(n, n);
        for j in 0..n {
            m.cols[j] = SVec::unit(n, j);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SVec {
        &self.cols[j]
    }

    pub fn col_mut(&mut self, j: usize) -> &mut SVec {
        &mut self.cols[j]
    }

    pub fn set_col(&mut self, j: usize, v: SVec) {
        debug_assert_eq!(v.dim(), self.rows);
        self.cols[j] = v;
    }

    pub fn add_entry(&mut self, row: usize, col: usize, c: Rat) {
        self.cols[col].add_at(row, c);
    }

    pub fn get(&self, row: usize, col: usize) -> Rat {
        self.cols[col].get(row)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        debug_assert_eq!(v.dim(), self.cols.len());
        let mut out = SVec::zero(self.rows);
        for (j, c) in v.iter() {
            out.add_scaled(&self.cols[j], c);
        }
        out
    }

    pub fn mul(&self, other: &SMat) -> SMat {
        debug_assert_eq!(self.cols.len(), other.rows);
        let mut out = SMat::zero(self.rows, other.cols.len());
        for j in 0..other.cols.len() {
            out.cols[j] = self.apply(&other.cols[j]);
        }
        out
    }

    pub fn add_scaled(&mut self, other: &SMat, c: &Rat) {
        debug_assert_eq!(self.rows, other.rows);
        debug_assert_eq!(self.cols.len(), other.cols.len());
        for j in 0..self.cols.len() {
            let col = other.cols[j].clone();
            self.cols[j].add_scaled(&col, c);
        }
    }

    pub fn sub(&self, other: &SMat) -> SMat {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::from_integer((-1).into()));
        out
    }

    pub fn scale(&self, c: &Rat) -> SMat {
        let mut out = SMat::zero(self.rows, self.cols.len());
        for j in 0..self.cols.len() {
            out.cols[j] = self.cols[j].scale(c);
        }
        out
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &SMat) -> SMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Vertical stack: the rows of each matrix in sequence (all must share
    /// the column count).
    pub fn stack_rows(mats: &[&SMat]) -> SMat {
        assert!(!mats.is_empty());
        let cols = mats[0].num_cols();
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut out = SMat::zero(rows, cols);
        for j in 0..cols {
            let parts: Vec<&SVec> = mats.iter().map(|m| m.col(j)).collect();
            out.cols[j] = SVec::stack(&parts);
        }
        out
    }
}

/// Incremental Gauss-Jordan eliminator.
///
/// Vectors are inserted one at a time; each independent vector becomes a
/// normalized pivot, fully reduced against the others. With coordinate
/// tracking on, each pivot also stores its expression in terms of the
/// inserted originals, which makes exact solving and kernel extraction
/// one reduction away.
pub struct Elim {
    dim: usize,
    track: bool,
    inserted: usize,
    /// (pivot row, reduced vector, expression over inserted originals)
    pivots: Vec<(usize, SVec, Vec<Rat>)>,
}

/// Result of inserting a vector into an [`Elim`].
pub enum Inserted {
    /// The vector was independent and became pivot number `.0`.
    Pivot(usize),
    /// The vector was dependent; with tracking on, `.0` holds coefficients
    /// expressing it over the previously inserted originals.
    Dependent(Option<Vec<Rat>>),
}

impl Elim {
    pub fn new(dim: usize, track: bool) -> Self {
        Elim {
            dim,
            track,
            inserted: 0,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduce `v` against the pivots; returns the residual and, when
    /// tracking, the coefficients over the originals that were subtracted.
    fn reduce(&self, v: &SVec) -> (SVec, Vec<Rat>) {
        let mut r = v.clone();
        let mut used = alloc::vec![rzero(); if self.track { self.inserted } else { 0 }];
        for (row, pv, pc) in &self.pivots {
            let c = r.get(*row);
            if c == rzero() {
                continue;
            }
            // pivots are normalized to a unit leading entry
            r.add_scaled(pv, &(-c.clone()));
            if self.track {
                for (t, x) in pc.iter().enumerate() {
                    used[t] = used[t].clone() + c.clone() * x.clone();
                }
            }
        }
        (r, used)
    }

    /// Insert a vector, growing the pivot set if it is independent.
    pub fn insert(&mut self, v: &SVec) -> Inserted {
        debug_assert_eq!(v.dim(), self.dim);
        let (mut r, mut used) = self.reduce(v);
        let id = self.inserted;
        self.inserted += 1;
        match r.leading().map(|(row, c)| (row, c.clone())) {
            None => {
                if self.track {
                    Inserted::Dependent(Some(used))
                } else {
                    Inserted::Dependent(None)
                }
            }
            Some((row, lead)) => {
                let inv = lead.recip();
                r = r.scale(&inv);
                let mut coords = Vec::new();
                if self.track {
                    // expression of the normalized pivot over the originals:
                    // (v - Σ used_t orig_t) / lead
                    used.resize(self.inserted, rzero());
                    for t in 0..self.inserted {
                        let mut x = -used[t].clone();
                        if t == id {
                            x = x + Rat::from_integer(1.into());
                        }
                        coords.push(x * inv.clone());
                    }
                }
                // back-substitute into existing pivots to keep full reduction
                let mut updates = Vec::new();
                for (pi, (_, pv, _)) in self.pivots.iter().enumerate() {
                    let c = pv.get(row);
                    if c != rzero() {
                        updates.push((pi, c));
                    }
                }
                for (pi, c) in updates {
                    let (_, ref mut pv, ref mut pc) = self.pivots[pi];
                    pv.add_scaled(&r, &(-c.clone()));
                    if self.track {
                        pc.resize(self.inserted, rzero());
                        for (t, x) in coords.iter().enumerate() {
                            pc[t] = pc[t].clone() - c.clone() * x.clone();
                        }
                    }
                }
                for (_, _, pc) in self.pivots.iter_mut() {
                    if self.track {
                        pc.resize(self.inserted, rzero());
                    }
                }
                self.pivots.push((row, r, coords));
                Inserted::Pivot(self.pivots.len() - 1)
            }
        }
    }

    /// Does `v` lie in the span of the pivots?
    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Express `v` over the inserted originals (requires tracking and all
    /// insertions independent or the coefficients refer to originals, not
    /// pivots). Returns `None` if `v` is outside the span.
    pub fn express(&self, v: &SVec) -> Option<Vec<Rat>> {
        assert!(self.track, "expression requires coordinate tracking");
        let (r, mut used) = self.reduce(v);
        if !r.is_zero() {
            return None;
        }
        used.resize(self.inserted, rzero());
        Some(used)
    }
}

/// Exact determinant of a square matrix by fraction Gaussian elimination.
pub fn determinant(m: &SMat) -> Rat {
    let n = m.rows();
    assert_eq!(n, m.num_cols(), "determinant needs a square matrix");
    let mut cols: alloc::vec::Vec<SVec> = (0..n).map(|j| m.col(j).clone()).collect();
    let mut det = Rat::from_integer(1.into());
    for row in 0..n {
        let pivot_col = match (row..n).find(|&j| !cols[j].get(row).is_zero()) {
            Some(j) => j,
            None => return rzero(),
        };
        if pivot_col != row {
            cols.swap(pivot_col, row);
            det = -det;
        }
        let pivot = cols[row].get(row);
        det *= pivot.clone();
        let inv = Rat::from_integer(1.into()) / pivot;
        let pivot_vec = cols[row].scale(&inv);
        for j in (row + 1)..n {
            let factor = cols[j].get(row);
            if !factor.is_zero() {
                let delta = pivot_vec.scale(&-factor);
                cols[j].add_scaled(&delta, &Rat::from_integer(1.into()));
            }
        }
    }
    det
}

/// Basis of the kernel of `m` (as coefficient vectors over the columns).
pub fn kernel_basis(m: &SMat) -> Vec<SVec> {
    let n = m.num_cols();
    let mut elim = Elim::new(m.rows(), true);
    let mut out = Vec::new();
    for j in 0..n {
        if let Inserted::Dependent(Some(coeffs)) = elim.insert(m.col(j)) {
            // col_j = Σ_t coeffs_t col_t, so (coeffs, -1 at j) is in the kernel
            let mut k = SVec::zero(n);
            for (t, c) in coeffs.iter().enumerate() {
                k.add_at(t, c.clone());
            }
            k.add_at(j, -Rat::from_integer(1.into()));
            out.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rfrac, rint};

    fn v(dim: usize, entries: &[(usize, i64)]) -> SVec {
        let mut x = SVec::zero(dim);
        for &(i, c) in entries {
            x.add_at(i, rint(c));
        }
        x
    }

    #[test]
    fn vector_arithmetic_cancels() {
        let mut a = v(3, &[(0, 1), (2, 2)]);
        a.add_scaled(&v(3, &[(0, -1), (1, 5)]), &rint(1));
        assert_eq!(a.get(0), rint(0));
        assert_eq!(a.num_entries(), 2);
    }

    #[test]
    fn matrix_apply_and_mul() {
        // m = [[0,1],[1,0]] as columns
        let mut m = SMat::zero(2, 2);
        m.add_entry(1, 0, rint(1));
        m.add_entry(0, 1, rint(1));
        let x = v(2, &[(0, 3), (1, 4)]);
        assert_eq!(m.apply(&x), v(2, &[(0, 4), (1, 3)]));
        assert_eq!(m.mul(&m), SMat::identity(2));
    }

    #[test]
    fn elim_rank_and_membership() {
        let mut e = Elim::new(3, false);
        assert!(matches!(e.insert(&v(3, &[(0, 1), (1, 1)])), Inserted::Pivot(_)));
        assert!(matches!(e.insert(&v(3, &[(1, 1), (2, 1)])), Inserted::Pivot(_)));
        assert!(matches!(
            e.insert(&v(3, &[(0, 1), (2, -1)])),
            Inserted::Dependent(_)
        ));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(3, &[(0, 2), (1, 2)])));
        assert!(!e.contains(&v(3, &[(2, 1)])));
    }

    #[test]
    fn elim_express() {
        let mut e = Elim::new(2, true);
        e.insert(&v(2, &[(0, 2)]));
        e.insert(&v(2, &[(0, 1), (1, 1)]));
        let coords = e.express(&v(2, &[(0, 1), (1, 3)])).unwrap();
        // (1,3) = -1*(2,0) + 3*(1,1)
        assert_eq!(coords, alloc::vec![rint(-1), rint(3)]);
        assert!(e.express(&v(2, &[(0, 1)])).is_some());
        // half coefficient exercised
        let c2 = e.express(&v(2, &[(0, 1), (1, 0)])).unwrap();
        assert_eq!(c2, alloc::vec![rfrac(1, 2), rint(0)]);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // columns c0=(1,0), c1=(0,1), c2=c0+c1
        let mut m = SMat::zero(2, 3);
        m.add_entry(0, 0, rint(1));
        m.add_entry(1, 1, rint(1));
        m.add_entry(0, 2, rint(1));
        m.add_entry(1, 2, rint(1));
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        let kv = &k[0];
        // m * kv = 0
        assert!(m.apply(kv).is_zero());
    }
}
