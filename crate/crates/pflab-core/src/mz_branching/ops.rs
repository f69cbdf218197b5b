//! Branching lowering operators realized as exact maps between
//! interior-highest spaces of a fixed module.
//!
//! All operators are built from one primitive: project the image of a
//! generator matrix back onto the interior-highest part, then multiply by
//! a weight-dependent scalar evaluated at the domain weight (scalars sit
//! to the right of the projected generator, so they act first).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::mz_branching::proj::Projector;
use crate::mz_branching::scalars::MzScalars;
use crate::rat::{rfrac, rint, rzero, Rat, Weight};
use crate::rep_engine::{all_highest_spaces, Elim, HighestSpace, RepModule, SMat, SVec};
use crate::uea_core::{canonical_generators, GenClass, Uea, UeaElement};
use num_traits::Zero;

/// A weight-dependent scalar in an operator hit a vanishing denominator.
#[derive(Clone, Debug)]
pub enum MzError {
    ZeroDenominator { context: String },
}

impl core::fmt::Display for MzError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MzError::ZeroDenominator { context } => {
                write!(f, "zero denominator: {context}")
            }
        }
    }
}

/// Which argument the numerator of the interpolation sum tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZNumerator {
    /// `Π_{j≠i} (u+g_j)/(g_i−g_j)` — numerator varies with the product
    /// index, the usual interpolation shape (default).
    VaryWithProduct,
    /// `Π_{j≠i} (u+g_i)/(g_i−g_j)` — numerator frozen at the outer index.
    FrozenAtTerm,
}

/// Operator workbench for one module: the projector, the highest spaces,
/// and tracked eliminators for expressing vectors in highest bases.
pub struct MzContext<'a> {
    u: &'a Uea,
    module: &'a RepModule,
    pub scal: MzScalars,
    proj: Projector,
    spaces: Vec<HighestSpace>,
    elims: BTreeMap<Weight, Elim>,
    pub z_num: ZNumerator,
}

impl<'a> MzContext<'a> {
    pub fn new(u: &'a Uea, module: &'a RepModule) -> Self {
        let n = module.rank().n();
        Self::with_scalars(u, module, MzScalars::new(n))
    }

    pub fn with_scalars(u: &'a Uea, module: &'a RepModule, scal: MzScalars) -> Self {
        assert_eq!(scal.n(), module.rank().n());
        let proj = Projector::new(u, module);
        let spaces = all_highest_spaces(module);
        let mut elims = BTreeMap::new();
        for hs in &spaces {
            let mut e = Elim::new(module.dim(), true);
            for b in &hs.basis {
                e.insert(b);
            }
            assert_eq!(e.rank(), hs.dim());
            elims.insert(hs.mu.clone(), e);
        }
        MzContext {
            u,
            module,
            scal,
            proj,
            spaces,
            elims,
            z_num: ZNumerator::VaryWithProduct,
        }
    }

    pub fn module(&self) -> &RepModule {
        self.module
    }

    pub fn uea(&self) -> &Uea {
        self.u
    }

    pub fn n(&self) -> i32 {
        self.module.rank().n()
    }

    pub fn spaces(&self) -> &[HighestSpace] {
        &self.spaces
    }

    pub fn space_of(&self, mu: &[Rat]) -> Option<&HighestSpace> {
        self.spaces.iter().find(|hs| hs.mu[..] == mu[..])
    }

    /// Coordinates of `v` in the stored basis of the `mu` highest space.
    pub fn express(&self, mu: &[Rat], v: &SVec) -> Option<Vec<Rat>> {
        self.elims.get(mu)?.express(v)
    }

    /// Interior-highest component of `v`; total.
    pub fn project(&self, v: &SVec) -> SVec {
        self.proj.apply(v)
    }

    pub fn projector(&self) -> &Projector {
        &self.proj
    }

    /// Interior weight shared by all support positions of `v`
    /// (`None` when mixed or zero).
    pub fn interior_mu(&self, v: &SVec) -> Option<Weight> {
        let n = self.n() as usize;
        let mut found: Option<Weight> = None;
        for i in v.support() {
            let mu = self.module.weight_of(i)[..n - 1].to_vec();
            match &found {
                None => found = Some(mu),
                Some(m) => {
                    if m != &mu {
                        return None;
                    }
                }
            }
        }
        found
    }

    /// Projected generator image: the unnormalized lowering primitive.
    pub fn z_check_apply(&self, i: i32, a: i32, v: &SVec) -> SVec {
        if v.is_zero() {
            return SVec::zero(v.dim());
        }
        let img = self.module.gen_mat(i, a).apply(v);
        self.project(&img)
    }

    /// Normalized lowering operator into column `±n`: the projected
    /// generator image times the falling product of weight scalars at the
    /// domain weight.
    pub fn z_apply(&self, i: i32, a: i32, v: &SVec) -> SVec {
        let n = self.n();
        assert!(a == n || a == -n, "second index must be ±n");
        assert!(i.abs() <= n - 1, "first index must be interior or zero");
        if v.is_zero() {
            return SVec::zero(v.dim());
        }
        let mu = self
            .interior_mu(v)
            .expect("operator domain must have a single interior weight");
        let s = self.scal.step_scalar(i, &mu);
        self.z_check_apply(i, a, v).scale(&s)
    }

    /// The distinguished `(n,0)` operator: projected `F[n,0]` image times
    /// the domain-weight product `Π_{i=1}^{n-1}(f_0+f_i)`.
    pub fn z_n0_apply(&self, v: &SVec) -> SVec {
        let n = self.n();
        if v.is_zero() {
            return SVec::zero(v.dim());
        }
        let mu = self
            .interior_mu(v)
            .expect("operator domain must have a single interior weight");
        let d = self.scal.d_mu(&mu);
        self.z_check_apply(n, 0, v).scale(&d)
    }

    /// One-parameter corner operator `Z(u)` for the `(n,-n)` corner:
    /// a generator term plus an interpolation sum over normalized
    /// lowering pairs. All scalars are evaluated at the domain weight.
    pub fn big_z_apply(&self, uval: &Rat, v: &SVec) -> Result<SVec, MzError> {
        let n = self.n();
        if v.is_zero() {
            return Ok(SVec::zero(v.dim()));
        }
        let mu = self
            .interior_mu(v)
            .expect("operator domain must have a single interior weight");
        let gs: BTreeMap<i32, Rat> = (-(n - 1)..=(n - 1))
            .map(|i| (i, self.scal.g(i, &mu)))
            .collect();

        // generator term: -(δ(u+ρ_n+1/2) + F[n,-n]) Π_i (u+g_i);
        // for the (n,-n) corner δ vanishes and F[n,-n] is zero, so the
        // whole term drops out, but keep the product shape for clarity
        let mut lead = rint(1);
        for g in gs.values() {
            lead = lead * (uval.clone() + g.clone());
        }
        let gen_part = self.module.gen_mat(n, -n).apply(v).scale(&(-lead));
        let mut out = self.project(&gen_part);

        for i in -(n - 1)..=(n - 1) {
            let g_i = &gs[&i];
            let mut coef = rint(1);
            for j in -(n - 1)..=(n - 1) {
                if j == i {
                    continue;
                }
                let g_j = &gs[&j];
                let den = g_i.clone() - g_j.clone();
                if den.is_zero() {
                    return Err(MzError::ZeroDenominator {
                        context: format!(
                            "corner operator at interior weight {:?}: g({i}) = g({j})",
                            mu
                        ),
                    });
                }
                let num = match self.z_num {
                    ZNumerator::VaryWithProduct => uval.clone() + g_j.clone(),
                    ZNumerator::FrozenAtTerm => uval.clone() + g_i.clone(),
                };
                coef = coef * num / den;
            }
            let w1 = self.z_apply(i, -n, v);
            let w2 = self.z_apply(-i, -n, &w1);
            out.add_scaled(&w2, &coef);
        }
        Ok(out)
    }

    /// Scalar action of an interior weight-zero element on a highest
    /// space: the all-Cartan part of the normal form, evaluated at `mu`.
    pub fn hc_eval(&self, x: &UeaElement, mu: &[Rat]) -> Rat {
        hc_value(x, mu)
    }

    /// Matrix of `v ↦ project(op v)` on the `mu` highest space, in its
    /// stored basis. `None` if some image leaves the space (wrong weight).
    pub fn highest_matrix(&self, mu: &[Rat], op: &SMat) -> Option<SMat> {
        let hs = self.space_of(mu)?;
        let mut out = SMat::zero(hs.dim(), hs.dim());
        for (c, b) in hs.basis.iter().enumerate() {
            let img = self.project(&op.apply(b));
            let coords = self.express(mu, &img)?;
            for (r, val) in coords.into_iter().enumerate() {
                out.add_entry(r, c, val);
            }
        }
        Some(out)
    }

    /// Branching basis vector for labels `(σ, ν)` between the module
    /// label `λ` (length n) and interior label `μ` (length n-1): a word
    /// of corner operators, lowering powers and optionally the `(n,0)`
    /// operator applied to the module's highest vector, rightmost first.
    pub fn xi_vector(
        &self,
        sigma: i64,
        nu: &[i64],
        lambda: &[i64],
        mu: &[Rat],
    ) -> Result<SVec, MzError> {
        let n = self.n();
        assert_eq!(nu.len(), n as usize);
        assert_eq!(lambda.len(), n as usize);
        assert_eq!(mu.len(), (n - 1) as usize);
        assert!(sigma == 0 || sigma == 1);

        let mut v = full_highest_vector(self.module);

        // corner block: k runs from λ_n+n up to γ_n-1 = ν_n+n-1,
        // largest value applied first
        let l_n = lambda[(n - 1) as usize] + n as i64;
        let gamma_n = nu[(n - 1) as usize] + n as i64;
        assert!(gamma_n >= l_n, "corner exponent must be nonnegative");
        for k in (l_n..gamma_n).rev() {
            v = self.big_z_apply(&rint(k), &v)?;
        }

        // lowering blocks, i = n-1 down to 1
        for i in (1..n).rev() {
            let idx = (i - 1) as usize;
            let down = nu[idx] - lambda[idx];
            assert!(down >= 0, "label must dominate the module label");
            for _ in 0..down {
                v = self.z_apply(i, -n, &v);
            }
            let mu_i = mu[idx].clone();
            let up_rat = rint(nu[idx]) - mu_i;
            assert!(
                up_rat.is_integer() && up_rat >= rzero(),
                "label must dominate the interior label"
            );
            let up: u64 = up_rat.to_integer().try_into().expect("small exponent");
            for _ in 0..up {
                v = self.z_apply(-i, -n, &v);
            }
        }

        if sigma == 1 {
            v = self.z_n0_apply(&v);
        }
        Ok(v)
    }

    /// Half-integer `ρ`-shift of the last slot plus one half, the scalar
    /// in the generator term of the corner operator.
    pub fn rho_n_plus_half(&self) -> Rat {
        self.scal.rho(self.n()) + rfrac(1, 2)
    }
}

/// The all-Cartan part of a normal form, evaluated at the interior weight
/// `mu` (canonical Cartan generator `F[-r,-r]` has eigenvalue `-mu_r`).
/// Module-free: this is a polynomial in the weight entries.
pub fn hc_value(x: &UeaElement, mu: &[Rat]) -> Rat {
    let mut total = rzero();
    for (m, c) in x.terms() {
        let fs = m.factors();
        if fs.iter().any(|g| g.class() != GenClass::Cartan) {
            continue;
        }
        let mut prod = c.clone();
        for g in fs {
            let r = (-g.i()) as usize;
            assert!(r >= 1 && r <= mu.len(), "Cartan factor outside the interior");
            prod = prod * (-mu[r - 1].clone());
        }
        total = total + prod;
    }
    total
}

/// The highest vector of the whole module: the one-dimensional joint
/// kernel of all positive canonical generator actions, normalized so its
/// leading coordinate is 1.
pub fn full_highest_vector(module: &RepModule) -> SVec {
    let gens = canonical_generators(module.rank());
    let mats: Vec<&SMat> = gens
        .iter()
        .filter(|g| g.class() == GenClass::Positive)
        .map(|g| module.canonical_gen_mat(*g))
        .collect();
    let stacked = SMat::stack_rows(&mats);
    let kernel = crate::rep_engine::kernel_basis(&stacked);
    assert_eq!(
        kernel.len(),
        1,
        "module must have a one-dimensional highest space"
    );
    let v = kernel.into_iter().next().unwrap();
    let (_, lead) = v.leading().expect("nonzero kernel vector");
    v.scale(&(rint(1) / lead.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_engine::standard_module;
    use crate::uea_core::AlgebraRank;

    fn setup() -> (Uea, RepModule) {
        let rank = AlgebraRank::new(5).unwrap();
        (Uea::new(rank), standard_module(rank))
    }

    #[test]
    fn full_highest_of_standard() {
        let (_, m) = setup();
        let v = full_highest_vector(&m);
        assert_eq!(v, SVec::unit(5, 0));
    }

    #[test]
    fn z_shifts_interior_weight() {
        let (u, m) = setup();
        let ctx = MzContext::new(&u, &m);
        // standard module: highest vector e_{-2}, interior weight (0)
        let xi = full_highest_vector(&m);
        assert_eq!(ctx.interior_mu(&xi), Some(alloc::vec![rint(0)]));
        // z_{-1,-2} lands in interior weight (-1): p(F[-1,-2] e_{-2}) = e_{-1}
        let w = ctx.z_apply(-1, -2, &xi);
        assert!(!w.is_zero());
        assert_eq!(ctx.interior_mu(&w), Some(alloc::vec![rint(-1)]));
        // z_{1,-2} raises slot 1, but p kills the image here: F[1,-2]
        // sends e_{-2} to e_1, whose interior-highest component is zero
        let w2 = ctx.z_apply(1, -2, &xi);
        assert!(w2.is_zero());
    }

    #[test]
    fn xi_vectors_standard_module_basis() {
        let (u, m) = setup();
        let ctx = MzContext::new(&u, &m);
        let lambda = [0i64, -1];
        // labels for μ = (0): ν_1 = 0 (so σ = 0 forced), ν_2 ∈ {0, -1}
        let mu = alloc::vec![rint(0)];
        let v00 = ctx.xi_vector(0, &[0, 0], &lambda, &mu).unwrap();
        assert!(!v00.is_zero());
        let v0m1 = ctx.xi_vector(0, &[0, -1], &lambda, &mu).unwrap();
        assert!(!v0m1.is_zero());
        let mut e = Elim::new(5, false);
        for v in [&v00, &v0m1] {
            assert_eq!(ctx.interior_mu(v), Some(mu.clone()));
            e.insert(v);
        }
        assert_eq!(e.rank(), 2);
        assert_eq!(ctx.space_of(&mu).unwrap().dim(), 2);
        // μ = (-1): single label ν = (0,-1) with one lowering step
        let mu2 = alloc::vec![rint(-1)];
        let w = ctx.xi_vector(0, &[0, -1], &lambda, &mu2).unwrap();
        assert!(!w.is_zero());
        assert_eq!(ctx.interior_mu(&w), Some(mu2.clone()));
        assert_eq!(ctx.space_of(&mu2).unwrap().dim(), 1);
    }

    #[test]
    fn hc_eval_cartan_words() {
        let (u, m) = setup();
        let ctx = MzContext::new(&u, &m);
        // F[1,1] = -F[-1,-1] acts as μ_1 on interior weight μ
        let x = u.gen_elem(1, 1).unwrap();
        let mu = alloc::vec![rfrac(7, 2)];
        assert_eq!(ctx.hc_eval(&x, &mu), rfrac(7, 2));
        let sq = u.multiply(&x, &x);
        assert_eq!(ctx.hc_eval(&sq, &mu), rfrac(49, 4));
    }
}
