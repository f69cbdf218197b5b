//! Extremal projector for the interior subalgebra on a fixed module.
//!
//! A finite-dimensional module `M` splits as `M = V⁺ ⊕ n⁻M`, where `V⁺` is
//! the joint kernel of the interior positive actions and `n⁻M` the span of
//! all lowered vectors. The projector is realized exactly as the linear
//! projection onto `V⁺` along `n⁻M`; this map is total.
//!
//! The same operator also has a series realization: for each interior
//! positive root,
//! `1 + Σ_k f^k e^k (-1)^k / (k! (h+ρ(h)+1)...(h+ρ(h)+k))`,
//! composed over a convex ordering of the positive roots (built from
//! mediant-ratio sorting, not plain height sorting, because a height tie
//! can break the between-ness requirement). On a module the series hits
//! zero denominators at weights whose highest component vanishes, so it is
//! kept only as a cross-check ([`Projector::series_apply`]) and agrees with
//! the linear projection wherever it is defined: both fix `V⁺` and kill
//! `n⁻M`, which characterizes the map uniquely.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::rat::{rint, rzero, Rat, Weight};
use crate::rep_engine::{Elim, Inserted, RepModule, SMat, SVec};
use crate::uea_core::{canonical_generators, AlgebraRank, GenClass, GenIndex, Uea};
use num_traits::Zero;

/// A zero denominator hit while the series still had nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularWeight {
    pub root: GenIndex,
    pub step: i64,
    pub weight: Weight,
}

impl core::fmt::Display for SingularWeight {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "singular weight: denominator vanished at step {} of the series for root F[{},{}]",
            self.step,
            self.root.i(),
            self.root.j()
        )
    }
}

struct ProjRoot {
    gen: GenIndex,
    e_mat: SMat,
    f_mat: SMat,
    /// `h_α` as a linear functional on full weights
    h_func: Vec<Rat>,
    rho_h: Rat,
    ratio: Rat,
}

/// The composite extremal projector on one module.
pub struct Projector {
    roots: Vec<ProjRoot>,
    dim_weights: Vec<Weight>,
    /// basis of `V⁺`, the joint kernel of the positive actions
    kernel: Vec<SVec>,
    /// tracked elimination over `[kernel basis | lowered vectors]`
    split: Elim,
}

fn root_vector(n: usize, g: GenIndex) -> Vec<Rat> {
    // ad-weight of F_{ij} is ε_i - ε_j with ε_i = sign(i) e_{|i|}
    let mut w = alloc::vec![rzero(); n];
    let mut add = |idx: i32, s: i64| {
        if idx > 0 {
            w[(idx - 1) as usize] = w[(idx - 1) as usize].clone() + rint(s);
        } else if idx < 0 {
            w[(-idx - 1) as usize] = w[(-idx - 1) as usize].clone() - rint(s);
        }
    };
    add(g.i(), 1);
    add(g.j(), -1);
    w
}

impl Projector {
    pub fn new(u: &Uea, module: &RepModule) -> Self {
        let rank = module.rank();
        let n = rank.n() as usize;
        let interior = AlgebraRank::new(rank.big_n() - 2).expect("interior rank");
        let positives: Vec<GenIndex> = canonical_generators(interior)
            .into_iter()
            .filter(|g| g.class() == GenClass::Positive)
            .collect();

        // half-sum of the positive root vectors
        let mut rho_vec = alloc::vec![rzero(); n];
        for g in &positives {
            for (slot, c) in root_vector(n, *g).into_iter().enumerate() {
                rho_vec[slot] = rho_vec[slot].clone() + c;
            }
        }
        for c in rho_vec.iter_mut() {
            *c = c.clone() / rint(2);
        }

        // simple roots: positives that are not sums of two positives
        let root_vecs: Vec<Vec<Rat>> = positives.iter().map(|g| root_vector(n, *g)).collect();
        let is_sum = |r: &Vec<Rat>| {
            for a in &root_vecs {
                for b in &root_vecs {
                    let sum: Vec<Rat> = a
                        .iter()
                        .zip(b)
                        .map(|(x, y)| x.clone() + y.clone())
                        .collect();
                    if &sum == r {
                        return true;
                    }
                }
            }
            false
        };
        let simples: Vec<Vec<Rat>> = root_vecs
            .iter()
            .filter(|r| !is_sum(r))
            .cloned()
            .collect();
        let mut simple_elim = Elim::new(n, true);
        for s in &simples {
            let mut col = SVec::zero(n);
            for (slot, c) in s.iter().enumerate() {
                col.add_at(slot, c.clone());
            }
            simple_elim.insert(&col);
        }

        let mut roots = Vec::new();
        for (g, rv) in positives.iter().zip(&root_vecs) {
            let e_elem = u.gen_elem(g.i(), g.j()).expect("interior generator");
            let y_elem = u.gen_elem(g.j(), g.i()).expect("interior generator");
            let t = u.commutator(&e_elem, &y_elem);
            // t is a Cartan combination; read it as a functional on weights
            let mut t_func = alloc::vec![rzero(); n];
            for (m, c) in t.terms() {
                let fs = m.factors();
                assert_eq!(fs.len(), 1, "root bracket must be a Cartan combination");
                assert_eq!(fs[0].class(), GenClass::Cartan);
                let r = (-fs[0].i()) as usize;
                // canonical Cartan generator F[-r,-r] has eigenvalue -w_r
                t_func[r - 1] = t_func[r - 1].clone() - c.clone();
            }
            // α(t): [t, e] = α(t)·e
            let te = u.commutator(&t, &e_elem);
            let (m_e, c_e) = e_elem.terms().next().expect("generator element");
            let alpha_t = te
                .terms()
                .find(|(m, _)| *m == m_e)
                .map(|(_, c)| c.clone() / c_e.clone())
                .expect("bracket proportional to the root vector");
            assert!(
                te.sub(&e_elem.scale(&alpha_t)).is_zero(),
                "[t,e] must be proportional to e"
            );
            let two_over = rint(2) / alpha_t;
            let h_func: Vec<Rat> = t_func
                .iter()
                .map(|c| c.clone() * two_over.clone())
                .collect();
            let rho_h: Rat = h_func
                .iter()
                .zip(&rho_vec)
                .map(|(a, b)| a.clone() * b.clone())
                .fold(rzero(), |acc, x| acc + x);
            let e_mat = module.elem_matrix(&e_elem);
            let f_mat = module.elem_matrix(&y_elem.scale(&two_over));

            // convex sort key: φ/height over simple-root coordinates
            let mut col = SVec::zero(n);
            for (slot, c) in rv.iter().enumerate() {
                col.add_at(slot, c.clone());
            }
            let coords = simple_elim
                .express(&col)
                .expect("positive root lies in the simple-root lattice");
            let mut height = rzero();
            let mut phi = rzero();
            let mut base = rint(3);
            for c in &coords {
                height = height + c.clone();
                phi = phi + c.clone() * base.clone();
                base = base * rint(3);
            }
            assert!(!height.is_zero());
            let ratio = phi / height;
            roots.push(ProjRoot {
                gen: *g,
                e_mat,
                f_mat,
                h_func,
                rho_h,
                ratio,
            });
        }

        roots.sort_by(|a, b| a.ratio.cmp(&b.ratio));
        for pair in roots.windows(2) {
            assert!(
                pair[0].ratio < pair[1].ratio,
                "convex sort keys must be strictly increasing"
            );
        }

        let dim_weights: Vec<Weight> = (0..module.dim())
            .map(|i| module.weight_of(i).clone())
            .collect();

        // M = V⁺ ⊕ n⁻M: insert a kernel basis first, then every lowered
        // vector; expressing v over this list reads off the V⁺ component.
        let dim = module.dim();
        let e_stack: Vec<&SMat> = roots.iter().map(|r| &r.e_mat).collect();
        let kernel = if e_stack.is_empty() {
            (0..dim).map(|j| SVec::unit(dim, j)).collect::<Vec<_>>()
        } else {
            crate::rep_engine::kernel_basis(&SMat::stack_rows(&e_stack))
        };
        let mut split = Elim::new(dim, true);
        for b in &kernel {
            match split.insert(b) {
                Inserted::Pivot(_) => {}
                Inserted::Dependent(_) => panic!("kernel basis must be independent"),
            }
        }
        for root in &roots {
            for j in 0..dim {
                split.insert(root.f_mat.col(j));
            }
        }
        assert_eq!(
            split.rank(),
            dim,
            "highest space plus lowered vectors must span the module"
        );
        Projector {
            roots,
            dim_weights,
            kernel,
            split,
        }
    }

    fn split_by_weight(&self, v: &SVec) -> BTreeMap<Weight, SVec> {
        let mut parts: BTreeMap<Weight, SVec> = BTreeMap::new();
        for (idx, c) in v.iter() {
            let w = self.dim_weights[idx].clone();
            parts
                .entry(w)
                .or_insert_with(|| SVec::zero(v.dim()))
                .add_at(idx, c.clone());
        }
        parts
    }

    fn apply_single(&self, root: &ProjRoot, v: &SVec) -> Result<SVec, SingularWeight> {
        let mut out = SVec::zero(v.dim());
        for (w, comp) in self.split_by_weight(v) {
            let h_plus_rho: Rat = root
                .h_func
                .iter()
                .zip(&w)
                .map(|(a, b)| a.clone() * b.clone())
                .fold(rzero(), |acc, x| acc + x)
                + root.rho_h.clone();
            out.add_scaled(&comp, &rint(1));
            let mut epow = comp;
            let mut coef = rint(1);
            let mut k: i64 = 1;
            loop {
                epow = root.e_mat.apply(&epow);
                if epow.is_zero() {
                    break;
                }
                let denom = h_plus_rho.clone() + rint(k);
                if denom.is_zero() {
                    return Err(SingularWeight {
                        root: root.gen,
                        step: k,
                        weight: w,
                    });
                }
                coef = coef * rint(-1) / (rint(k) * denom);
                let mut term = epow.clone();
                for _ in 0..k {
                    term = root.f_mat.apply(&term);
                }
                out.add_scaled(&term, &coef);
                k += 1;
            }
        }
        Ok(out)
    }

    /// Apply the projector: the `V⁺` component of `v` in `M = V⁺ ⊕ n⁻M`.
    /// Total — defined on every vector. The result is annihilated by every
    /// interior positive root action (asserted in debug builds).
    pub fn apply(&self, v: &SVec) -> SVec {
        let coords = self
            .split
            .express(v)
            .expect("kernel plus lowered vectors span the module");
        let mut out = SVec::zero(v.dim());
        for (b, c) in self.kernel.iter().zip(&coords) {
            if !c.is_zero() {
                out.add_scaled(b, c);
            }
        }
        for root in &self.roots {
            debug_assert!(
                root.e_mat.apply(&out).is_zero(),
                "projector output must be annihilated by F[{},{}]",
                root.gen.i(),
                root.gen.j()
            );
        }
        out
    }

    /// Apply the composite series realization. Fails with [`SingularWeight`]
    /// when a denominator vanishes while the series still has nonzero
    /// terms; wherever it succeeds it equals [`Projector::apply`].
    pub fn series_apply(&self, v: &SVec) -> Result<SVec, SingularWeight> {
        let mut out = v.clone();
        for root in self.roots.iter().rev() {
            out = self.apply_single(root, &out)?;
        }
        for root in &self.roots {
            assert!(
                root.e_mat.apply(&out).is_zero(),
                "projector output must be annihilated by F[{},{}]",
                root.gen.i(),
                root.gen.j()
            );
        }
        Ok(out)
    }

    /// Dimension of the projected space `V⁺`.
    pub fn highest_dim(&self) -> usize {
        self.kernel.len()
    }

    /// The `ρ(h_α)` values in application order (for diagnostics/tests).
    pub fn rho_values(&self) -> Vec<Rat> {
        self.roots.iter().map(|r| r.rho_h.clone()).collect()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .roots
            .iter()
            .map(|r| alloc::format!("F[{},{}]", r.gen.i(), r.gen.j()))
            .collect();
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_engine::standard_module;

    #[test]
    fn rho_values_small() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let p = Projector::new(&u, &m);
        assert_eq!(p.num_roots(), 1);
        assert_eq!(p.rho_values(), alloc::vec![rint(1)]);
    }

    #[test]
    fn rho_values_rank_seven() {
        let rank = AlgebraRank::new(7).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let p = Projector::new(&u, &m);
        assert_eq!(p.num_roots(), 4);
        let mut vals = p.rho_values();
        vals.sort();
        assert_eq!(vals, alloc::vec![rint(1), rint(1), rint(2), rint(3)]);
    }

    #[test]
    fn projector_fixes_highest_and_projects() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let p = Projector::new(&u, &m);
        assert_eq!(p.highest_dim(), 3);
        // e_{-2} and e_2 are interior-highest in the standard module
        let high = SVec::unit(5, 0);
        assert_eq!(p.apply(&high), high);
        // e_{-1} is interior-highest as well (weight (-1,0), killed by F[-1,0])
        let e_m1 = SVec::unit(5, 1);
        assert_eq!(p.apply(&e_m1), e_m1);
        // e_0 is not highest: F[-1,0] e_0 = e_{-1}; the projector must kill
        // the non-highest part of any vector containing e_0
        let e_0 = SVec::unit(5, 2);
        let img = p.apply(&e_0);
        // weight is preserved and the only weight-(0,0) highest vector is 0
        assert!(img.is_zero());
        assert_eq!(p.apply(&img), img);
    }

    #[test]
    fn series_agrees_where_defined_and_poles_sit_over_zero_spaces() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let p = Projector::new(&u, &m);
        for j in 0..m.dim() {
            let v = SVec::unit(m.dim(), j);
            let lin = p.apply(&v);
            match p.series_apply(&v) {
                Ok(sv) => assert_eq!(sv, lin, "series and linear projection differ at {j}"),
                Err(_) => {
                    // a pole can only occur where the highest component is 0
                    assert!(lin.is_zero(), "singular series over nonzero projection at {j}");
                }
            }
        }
        // e_1 (weight (1,0)) really is a pole of the series: the denominator
        // h+ρ(h)+1 vanishes while F[-1,0] e_1 is nonzero
        let e_1 = SVec::unit(5, 3);
        assert!(p.series_apply(&e_1).is_err());
        assert!(p.apply(&e_1).is_zero());
    }
}
