//! Check battery for the branching machinery: projector behaviour,
//! lowering-operator structure, scalar operators on highest spaces,
//! the corner-operator basis and its image formulas, and the label /
//! table counting oracles.
//!
//! Scalar conventions that the printed source leaves ambiguous are fitted
//! from exact instances and reported as pinned choices rather than
//! hard-coded; see the `fit_*` functions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::subsets_of_size;
use crate::mz_branching::labels::{
    branching_labels, gt_tables, interleaves_interior, interleaves_module, BranchLabel,
};
use crate::mz_branching::ops::{full_highest_vector, MzContext, MzError};
use crate::mz_branching::scalars::{d_poly, MzScalars, TmScalarPin};
use crate::pfaffian::{pf_f, pf_hat, IndexSubset};
use crate::rat::{fmt_rat, fmt_weight, rfrac, rint, rzero, Rat, Weight};
use crate::rep_engine::{determinant, RepModule, SMat, SVec};
use crate::rep_engine::weyl_dim_odd_orthogonal;
use crate::report::{CheckRecord, Status};
use crate::uea_core::Uea;
use num_traits::Zero;

const WITNESS_LIMIT: usize = 200;

fn record(id: &str, anchor: &str, params: String, ok: bool, witness: String) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        anchor: anchor.into(),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        witness,
    }
}

fn pinned(id: &str, anchor: &str, params: String, ok: bool, witness: String) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        anchor: anchor.into(),
        params,
        status: if ok { Status::PassPinned } else { Status::Fail },
        witness,
    }
}

fn skipped(id: &str, anchor: &str, params: String, witness: String) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        anchor: anchor.into(),
        params,
        status: Status::SkippedSingular,
        witness,
    }
}

fn clip(s: String) -> String {
    if s.len() > WITNESS_LIMIT {
        let mut t: String = s.chars().take(WITNESS_LIMIT).collect();
        t.push_str("...");
        t
    } else {
        s
    }
}

fn fmt_svec(v: &SVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = v
        .iter()
        .map(|(i, c)| format!("{}*b{}", fmt_rat(c), i))
        .collect();
    clip(parts.join(" + "))
}

fn fmt_ints(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(","))
}

/// The module's label read off the full highest vector: nonpositive
/// integer entries `λ_1 ≥ … ≥ λ_n` in weight convention.
pub fn module_label(module: &RepModule) -> Vec<i64> {
    let v = full_highest_vector(module);
    let w = module
        .weight_of_vector(&v)
        .expect("highest vector must be a weight vector");
    w.iter()
        .map(|c| {
            assert!(c.is_integer(), "module label must be integral");
            let big = c.to_integer();
            i64::try_from(big).expect("small label")
        })
        .collect()
}

fn mu_ints(mu: &[Rat]) -> Vec<i64> {
    mu.iter()
        .map(|c| {
            assert!(c.is_integer());
            i64::try_from(c.to_integer()).expect("small weight")
        })
        .collect()
}

fn partition_of(label: &[i64]) -> Vec<i64> {
    let p: Vec<i64> = label.iter().rev().map(|x| -x).collect();
    assert!(p.iter().all(|x| *x >= 0));
    p
}

// ---------------------------------------------------------------------
// projector behaviour
// ---------------------------------------------------------------------

/// The projector fixes every interior-highest vector, is idempotent, its
/// output is annihilated by the interior raising actions (asserted inside
/// every application), and the series realization agrees with it wherever
/// the series has no vanishing denominator; at the singular weights the
/// projection itself is zero.
pub fn check_projector(ctx: &MzContext<'_>) -> Vec<CheckRecord> {
    let module = ctx.module();
    let mut out = Vec::new();
    let mut fixed = 0usize;
    let mut ok = true;
    let mut witness = String::new();
    for hs in ctx.spaces() {
        for b in &hs.basis {
            let img = ctx.project(b);
            if &img != b {
                ok = false;
                witness = format!("μ={} image {}", fmt_weight(&hs.mu), fmt_svec(&img));
            } else {
                fixed += 1;
            }
        }
    }
    out.push(record(
        "mz.projector-fixes-highest",
        "projector",
        format!("module={} vectors={}", module.label(), fixed),
        ok,
        witness,
    ));

    let mut ok2 = true;
    let mut wit2 = String::new();
    let mut checked = 0usize;
    for idx in 0..module.dim() {
        let v = SVec::unit(module.dim(), idx);
        let img = ctx.project(&v);
        if ctx.project(&img) != img {
            ok2 = false;
            wit2 = format!("basis {idx}: p²v ≠ pv");
        } else {
            checked += 1;
        }
    }
    out.push(record(
        "mz.projector-idempotent",
        "projector",
        format!("module={} vectors={}", module.label(), checked),
        ok2,
        wit2,
    ));

    let mut ok3 = true;
    let mut wit3 = String::new();
    let mut agreed = 0usize;
    let mut poles = 0usize;
    for idx in 0..module.dim() {
        let v = SVec::unit(module.dim(), idx);
        let lin = ctx.project(&v);
        match ctx.projector().series_apply(&v) {
            Ok(sv) => {
                if sv != lin {
                    ok3 = false;
                    wit3 = format!("basis {idx}: series disagrees with the projection");
                } else {
                    agreed += 1;
                }
            }
            Err(e) => {
                poles += 1;
                if !lin.is_zero() {
                    ok3 = false;
                    wit3 = format!("basis {idx}: {e} but the projection is nonzero");
                }
            }
        }
    }
    out.push(record(
        "mz.projector-series-agreement",
        "projector",
        format!(
            "module={} agreed={agreed} series-poles={poles}",
            module.label()
        ),
        ok3,
        wit3,
    ));
    out
}

// ---------------------------------------------------------------------
// lowering operators
// ---------------------------------------------------------------------

/// Projected generator images into column `±n` land in the predicted
/// highest space: slot `|i|` of the interior weight moves by `sign(i)`.
pub fn check_z_weight_shift(ctx: &MzContext<'_>) -> Vec<CheckRecord> {
    let n = ctx.n();
    let module = ctx.module();
    let mut out = Vec::new();
    for i in -(n - 1)..=(n - 1) {
        for a in [-n, n] {
            let mut ok = true;
            let mut witness = String::new();
            let mut moved = 0usize;
            for hs in ctx.spaces() {
                let mut target = hs.mu.clone();
                if i > 0 {
                    let s = (i - 1) as usize;
                    target[s] = target[s].clone() + rint(1);
                } else if i < 0 {
                    let s = (-i - 1) as usize;
                    target[s] = target[s].clone() - rint(1);
                }
                for b in &hs.basis {
                    let img = ctx.z_check_apply(i, a, b);
                    if img.is_zero() {
                        continue;
                    }
                    let in_target = ctx
                        .interior_mu(&img)
                        .map(|m| m == target)
                        .unwrap_or(false);
                    let expressible = ctx.express(&target, &img).is_some();
                    if !(in_target && expressible) {
                        ok = false;
                        witness = format!(
                            "μ={} image weight {:?}",
                            fmt_weight(&hs.mu),
                            ctx.interior_mu(&img).map(|m| fmt_weight(&m))
                        );
                    } else {
                        moved += 1;
                    }
                }
            }
            out.push(record(
                "mz.z-weight-shift",
                "lowering",
                format!("module={} i={i} a={a} nonzero-images={moved}", module.label()),
                ok,
                witness,
            ));
        }
    }
    out
}

/// The printed mirror rule relates the `(i,n)` and `(-n,-i)` projected
/// generators without a sign; in this realization the generators
/// themselves satisfy `F[-n,-i] = -F[i,n]`, so the observed relation
/// carries a minus sign. Recorded as a pinned deviation.
pub fn check_z_mirror(ctx: &MzContext<'_>) -> CheckRecord {
    let n = ctx.n();
    let module = ctx.module();
    let mut ok = true;
    let mut witness = String::new();
    let mut pairs = 0usize;
    for i in -(n - 1)..=(n - 1) {
        let mut sum = module.gen_mat(i, n);
        let mirrored = module.gen_mat(-n, -i);
        sum.add_scaled(&mirrored, &rint(1));
        if !sum.is_zero() {
            ok = false;
            witness = format!("i={i}: F[{i},{n}] + F[{},{}] ≠ 0", -n, -i);
        } else {
            pairs += 1;
        }
    }
    pinned(
        "mz.z-mirror-sign",
        "lowering",
        format!("module={} pairs={pairs} observed-sign=-1", module.label()),
        ok,
        witness,
    )
}

// ---------------------------------------------------------------------
// scalar operators on highest spaces
// ---------------------------------------------------------------------

fn interior_pool(n: i32) -> Vec<i32> {
    (-(n - 1)..=(n - 1)).collect()
}

/// Pfaffian operators over nonsymmetric interior index sets vanish on
/// every interior-highest vector after projection.
pub fn check_nonsymmetric_vanishing(ctx: &MzContext<'_>) -> Vec<CheckRecord> {
    let n = ctx.n();
    let u = ctx.uea();
    let module = ctx.module();
    let mut out = Vec::new();
    let pool = interior_pool(n);
    let mut size = 2usize;
    while size <= pool.len() {
        for elems in subsets_of_size(&pool, size) {
            let set = IndexSubset::new(module.rank(), &elems).expect("interior subset");
            if set.is_symmetric() {
                continue;
            }
            let pf = pf_f(u, &set).expect("pfaffian");
            let op = module.elem_matrix(&pf);
            let mut ok = true;
            let mut witness = String::new();
            let mut vectors = 0usize;
            for hs in ctx.spaces() {
                for b in &hs.basis {
                    let img = ctx.project(&op.apply(b));
                    if !img.is_zero() {
                        ok = false;
                        witness =
                            format!("μ={}: image {}", fmt_weight(&hs.mu), fmt_svec(&img));
                    } else {
                        vectors += 1;
                    }
                }
            }
            out.push(record(
                "mz.nonsymmetric-vanishing",
                "scalar-ops",
                format!("module={} I={} vectors={vectors}", module.label(), set),
                ok,
                witness,
            ));
        }
        size += 2;
    }
    out
}

/// For symmetric interior index sets the projected Pfaffian acts on each
/// highest space as a scalar, and the scalar equals the all-Cartan part
/// of the normal form evaluated at the space's weight (the
/// Harish-Chandra-style reduction: every non-Cartan contribution
/// projects away).
pub fn check_symmetric_hc(contexts: &[&MzContext<'_>]) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for ctx in contexts {
        let n = ctx.n();
        let u = ctx.uea();
        let module = ctx.module();
        let pool = interior_pool(n);
        let mut size = 2usize;
        while size <= pool.len() {
            for elems in subsets_of_size(&pool, size) {
                let set = IndexSubset::new(module.rank(), &elems).expect("interior subset");
                if !set.is_symmetric() {
                    continue;
                }
                let pf = pf_f(u, &set).expect("pfaffian");
                let op = module.elem_matrix(&pf);
                for hs in ctx.spaces() {
                    // scalar-operator check: matrix is a multiple of the
                    // identity on the space, multiple = Cartan-part value
                    let mat = match ctx.highest_matrix(&hs.mu, &op) {
                        Some(m) => m,
                        None => {
                            out.push(record(
                                "mz.symmetric-hc-operator",
                                "scalar-ops",
                                format!(
                                    "module={} I={} μ={}",
                                    module.label(),
                                    set,
                                    fmt_weight(&hs.mu)
                                ),
                                false,
                                "image leaves the highest space".into(),
                            ));
                            continue;
                        }
                    };
                    let d = hs.dim();
                    let c = mat.get(0, 0);
                    let scalar_ok = mat.sub(&SMat::identity(d).scale(&c)).is_zero();
                    let hc = ctx.hc_eval(&pf, &hs.mu);
                    let agree = hc == c;
                    out.push(record(
                        "mz.symmetric-hc-operator",
                        "scalar-ops",
                        format!(
                            "module={} I={} μ={} dim={}",
                            module.label(),
                            set,
                            fmt_weight(&hs.mu),
                            d
                        ),
                        scalar_ok && agree,
                        if scalar_ok && agree {
                            format!("scalar={}", fmt_rat(&c))
                        } else {
                            format!(
                                "matrix-scalar={} cartan-part={}",
                                fmt_rat(&c),
                                fmt_rat(&hc)
                            )
                        },
                    ));
                }
            }
            size += 2;
        }
    }
    out
}

/// Polynomial-level closed form for the symmetric-set scalar: the
/// all-Cartan part of the Pfaffian over `I = {±a_1,…,±a_r}`
/// (`a_1 < … < a_r`) equals `Π_t (μ_{a_t} − t + 1)` — the
/// factorial-polynomial shape `D_r` evaluated on the Cartan values in
/// descending index order with a uniform `−r/2` shift and no leading
/// `1/r!`. Verified on a weight grid covering every mixed degree.
///
/// The literal printed normalization `(1/r!)·D_r(μ_{a_1},…,μ_{a_r})`
/// does not reproduce the exact scalars (for a single pair it predicts
/// `μ_a + 1/2` where the identity `PfF_{{-a,a}} = F_aa` forces `μ_a`),
/// so the corrected form is pinned and the deviation is reported in the
/// witness.
pub fn check_symmetric_hc_closed_form(u: &Uea, n: i32) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let pool = interior_pool(n);
    let rank = u.rank();
    // grid: every (n-1)-tuple over {0,-1,-2}
    let vals = [rint(0), rint(-1), rint(-2)];
    let slots = (n - 1) as usize;
    let mut grid: Vec<Vec<Rat>> = alloc::vec![Vec::new()];
    for _ in 0..slots {
        let mut next = Vec::new();
        for g in &grid {
            for v in &vals {
                let mut h = g.clone();
                h.push(v.clone());
                next.push(h);
            }
        }
        grid = next;
    }

    let mut size = 2usize;
    while size <= pool.len() {
        for elems in subsets_of_size(&pool, size) {
            let set = IndexSubset::new(rank, &elems).expect("interior subset");
            if !set.is_symmetric() {
                continue;
            }
            let positives: Vec<i32> =
                set.elements().iter().copied().filter(|x| *x > 0).collect();
            let r = positives.len();
            let pf = pf_f(u, &set).expect("pfaffian");
            let mut ok = true;
            let mut printed_agrees = true;
            let mut witness = String::new();
            for mu in &grid {
                let actual = crate::mz_branching::ops::hc_value(&pf, mu);
                // corrected form: Π_t (μ_{a_t} - t + 1) = D_r on the
                // descending arguments shifted by -r/2, without 1/r!
                let mut corrected = rint(1);
                for (t, a) in positives.iter().enumerate() {
                    corrected = corrected
                        * (mu[(*a - 1) as usize].clone() - rint(t as i64));
                }
                if actual != corrected {
                    ok = false;
                    witness = format!(
                        "μ={}: cartan-part={} corrected-form={}",
                        fmt_weight(mu),
                        fmt_rat(&actual),
                        fmt_rat(&corrected)
                    );
                    break;
                }
                let args: Vec<Rat> = positives
                    .iter()
                    .map(|a| mu[(*a - 1) as usize].clone())
                    .collect();
                let mut fact = rint(1);
                for t in 1..=r as i64 {
                    fact = fact * rint(t);
                }
                if d_poly(&args) / fact != actual {
                    printed_agrees = false;
                }
            }
            if ok && witness.is_empty() {
                witness = if printed_agrees {
                    format!("corrected form confirmed on {} weights", grid.len())
                } else {
                    format!(
                        "corrected form confirmed on {} weights; printed factorial form deviates",
                        grid.len()
                    )
                };
            }
            out.push(pinned(
                "mz.symmetric-hc-closed-form",
                "scalar-ops",
                format!("N={} I={} r={}", rank.big_n(), set, r),
                ok,
                witness,
            ));
        }
        size += 2;
    }
    out
}

// ---------------------------------------------------------------------
// corner image: proportionality and the scalar pin
// ---------------------------------------------------------------------

/// On each highest space the projected hatted-Pfaffian operator is a
/// scalar multiple of the projected `(n,0)` generator; returns the
/// per-space records and the `(μ, scalar)` samples for the scalar pin.
pub fn check_tm_proportionality(
    ctx: &MzContext<'_>,
) -> (Vec<CheckRecord>, Vec<(Weight, Rat)>) {
    let n = ctx.n();
    let u = ctx.uea();
    let module = ctx.module();
    let mut out = Vec::new();
    let mut samples = Vec::new();
    let pf = pf_hat(u, n).expect("hatted pfaffian");
    let pf_op = module.elem_matrix(&pf);
    let zc_op = module.gen_mat(n, 0);
    for hs in ctx.spaces() {
        let params = format!("module={} μ={} dim={}", module.label(), fmt_weight(&hs.mu), hs.dim());
        let m_pf = match ctx.highest_matrix(&hs.mu, &pf_op) {
            Some(m) => m,
            None => {
                out.push(record(
                    "mz.tm-proportionality",
                    "corner-image",
                    params,
                    false,
                    "hatted image leaves the highest space".into(),
                ));
                continue;
            }
        };
        let m_z = match ctx.highest_matrix(&hs.mu, &zc_op) {
            Some(m) => m,
            None => {
                out.push(record(
                    "mz.tm-proportionality",
                    "corner-image",
                    params,
                    false,
                    "(n,0) image leaves the highest space".into(),
                ));
                continue;
            }
        };
        if m_z.is_zero() {
            let ok = m_pf.is_zero();
            out.push(record(
                "mz.tm-proportionality",
                "corner-image",
                params,
                ok,
                if ok {
                    "both operators vanish".into()
                } else {
                    "generator image vanishes but the hatted image does not".into()
                },
            ));
            continue;
        }
        // scalar candidate from the first nonzero entry of m_z
        let mut cand: Option<Rat> = None;
        'outer: for cidx in 0..m_z.num_cols() {
            for (r, v) in m_z.col(cidx).iter() {
                if !v.is_zero() {
                    cand = Some(m_pf.get(r, cidx) / v.clone());
                    break 'outer;
                }
            }
        }
        let c = cand.expect("nonzero matrix has a nonzero entry");
        let ok = m_pf.sub(&m_z.scale(&c)).is_zero();
        if ok {
            samples.push((hs.mu.clone(), c.clone()));
        }
        out.push(record(
            "mz.tm-proportionality",
            "corner-image",
            params,
            ok,
            format!("scalar={}", fmt_rat(&c)),
        ));
    }
    (out, samples)
}

/// Pin the corner-scalar reading from proportionality samples.
///
/// The printed scalar polynomial leaves two choices open: whether its
/// arguments are the raw Cartan eigenvalues `μ_i` or the shifted
/// eigenvalues `f_i(μ)`, and the overall sign on the interpolation sum
/// (`±4` at rank five). Each sample records the exact factor between the
/// projected hatted-Pfaffian matrix and the projected `(n,0)` generator
/// matrix on one highest space; that factor must equal `C(μ)·d(μ)`,
/// since the normalized corner operator carries the extra product
/// `d(μ)`. The four candidate readings separate at every sampled
/// weight, so one sample already pins the pair; remaining samples act
/// as consistency checks.
pub fn pin_tm_scalar(
    scal: &MzScalars,
    samples: &[(Weight, Rat)],
) -> (CheckRecord, Option<TmScalarPin>) {
    if samples.is_empty() {
        return (
            record(
                "mz.tm-scalar-pin",
                "corner-image",
                "samples=0".into(),
                false,
                "no proportionality samples available".into(),
            ),
            None,
        );
    }
    let mut winners: Vec<TmScalarPin> = Vec::new();
    for pin in TmScalarPin::ALL {
        let all_match = samples.iter().all(|(mu, c)| {
            scal.corner_scalar(&pin, mu) * scal.d_mu(mu) == *c
        });
        if all_match {
            winners.push(pin);
        }
    }
    let params = format!("samples={}", samples.len());
    match winners.len() {
        1 => {
            let pin = winners[0];
            let rec = CheckRecord {
                id: "mz.tm-scalar-pin".into(),
                anchor: "corner-image".into(),
                params,
                status: Status::PassPinned,
                witness: format!(
                    "{}; confirmed on {} sample(s)",
                    pin.describe(),
                    samples.len()
                ),
            };
            (rec, Some(pin))
        }
        0 => {
            let (mu, c) = &samples[0];
            (
                record(
                    "mz.tm-scalar-pin",
                    "corner-image",
                    params,
                    false,
                    clip(format!(
                        "no candidate reading matches; μ={} sample={} candidates={}",
                        fmt_weight(mu),
                        fmt_rat(c),
                        TmScalarPin::ALL
                            .iter()
                            .map(|p| fmt_rat(
                                &(scal.corner_scalar(p, mu) * scal.d_mu(mu))
                            ))
                            .collect::<Vec<_>>()
                            .join(",")
                    )),
                ),
                None,
            )
        }
        _ => (
            record(
                "mz.tm-scalar-pin",
                "corner-image",
                params,
                false,
                "multiple candidate readings match; samples do not separate them".into(),
            ),
            None,
        ),
    }
}

// ---------------------------------------------------------------------
// the corner-operator basis and the image formulas
// ---------------------------------------------------------------------

fn gamma_coeffs(nu: &[i64]) -> Result<Vec<Rat>, String> {
    // K_j = Π_{t≠j} (-γ_t²) / (γ_j² - γ_t²) with γ_t = ν_t + t
    let n = nu.len();
    let gam: Vec<Rat> = (0..n).map(|t| rint(nu[t] + (t as i64) + 1)).collect();
    let mut out = Vec::new();
    for j in 0..n {
        let mut k = rint(1);
        for t in 0..n {
            if t == j {
                continue;
            }
            let den = gam[j].clone() * gam[j].clone() - gam[t].clone() * gam[t].clone();
            if den.is_zero() {
                return Err(format!(
                    "γ_{}² = γ_{}² = {}",
                    j + 1,
                    t + 1,
                    fmt_rat(&(gam[t].clone() * gam[t].clone()))
                ));
            }
            k = k * (-(gam[t].clone() * gam[t].clone())) / den;
        }
        out.push(k);
    }
    Ok(out)
}

/// Build every labelled basis vector of one highest space. Labels whose
/// word hits a singular scalar are reported; the rest are returned.
fn build_xis(
    ctx: &MzContext<'_>,
    lambda: &[i64],
    mu: &[Rat],
    labels: &[BranchLabel],
) -> (Vec<(BranchLabel, SVec)>, Vec<(BranchLabel, MzError)>) {
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for l in labels {
        match ctx.xi_vector(l.sigma, &l.nu, lambda, mu) {
            Ok(v) => ok.push((l.clone(), v)),
            Err(e) => bad.push((l.clone(), e)),
        }
    }
    (ok, bad)
}

/// The labelled vectors form a basis of each highest space: counts
/// match, the coefficient matrix is invertible, and each lives in the
/// right space.
pub fn check_xi_basis(ctx: &MzContext<'_>, lambda: &[i64]) -> Vec<CheckRecord> {
    let module = ctx.module();
    let mut out = Vec::new();
    for hs in ctx.spaces() {
        let mu = &hs.mu;
        let labels = branching_labels(lambda, &mu_ints(mu));
        let params = format!(
            "module={} λ={} μ={} labels={} dim={}",
            module.label(),
            fmt_ints(lambda),
            fmt_weight(mu),
            labels.len(),
            hs.dim()
        );
        if labels.len() != hs.dim() {
            out.push(record(
                "mz.xi-basis",
                "corner-basis",
                params,
                false,
                "label count differs from the space dimension".into(),
            ));
            continue;
        }
        let (xis, bad) = build_xis(ctx, lambda, mu, &labels);
        if !bad.is_empty() {
            let (l, e) = &bad[0];
            out.push(skipped(
                "mz.xi-basis",
                "corner-basis",
                params,
                format!("{}: {}", l.render(), e),
            ));
            continue;
        }
        let d = hs.dim();
        let mut coeff = SMat::zero(d, d);
        let mut ok = true;
        let mut witness = String::new();
        for (c, (l, v)) in xis.iter().enumerate() {
            match ctx.express(mu, v) {
                Some(coords) => {
                    for (r, val) in coords.into_iter().enumerate() {
                        coeff.add_entry(r, c, val);
                    }
                }
                None => {
                    ok = false;
                    witness = format!("{} leaves the highest space", l.render());
                }
            }
            if v.is_zero() {
                ok = false;
                witness = format!("{} vanishes", l.render());
            }
        }
        if ok {
            let det = determinant(&coeff);
            ok = !det.is_zero();
            witness = format!("coefficient det={}", fmt_rat(&det));
        }
        out.push(record("mz.xi-basis", "corner-basis", params, ok, witness));
    }
    out
}

/// Image formulas for the projected hatted Pfaffian on the labelled
/// basis, plus the `(n,0)`-operator structure on it:
///   flag-0 labels: image is `C(μ)` times the flag-1 partner (the
///     normalized `(n,0)` image); the partner vanishes exactly when
///     ν_1 = 0;
///   flag-1 labels: the *unnormalized* `(n,0)` primitive returns the
///     flag-1 vector to the interpolation sum over raised labels with
///     unit coefficients (flag-return formula), and the projected
///     hatted Pfaffian image is that sum scaled by `C(μ)·d(μ)`.
///
/// Pinned reading: the normalizing product `d(μ)` belongs only to the
/// flag-raising step `ξ_{1,ν} = d(μ)·ž ξ_{0,ν}`; applying the
/// normalized operator to a flag-1 vector would overshoot the
/// interpolation sum by exactly one factor of `d(μ)`.
pub fn check_main_theorem(
    ctx: &MzContext<'_>,
    lambda: &[i64],
    pin: Option<&TmScalarPin>,
) -> Vec<CheckRecord> {
    let n = ctx.n();
    let u = ctx.uea();
    let module = ctx.module();
    let mut out = Vec::new();
    let pf = pf_hat(u, n).expect("hatted pfaffian");
    let pf_op = module.elem_matrix(&pf);
    let sign_n = if n % 2 == 0 { rint(1) } else { rint(-1) };

    for hs in ctx.spaces() {
        let mu = &hs.mu;
        let labels = branching_labels(lambda, &mu_ints(mu));
        let (xis, _bad) = build_xis(ctx, lambda, mu, &labels);
        let find =
            |sigma: i64, nu: &[i64]| xis.iter().find(|(l, _)| l.sigma == sigma && l.nu == nu);
        let d_mu = ctx.scal.d_mu(mu);
        // flag-0 scalar is C(μ); the per-space operator factor of the
        // corner identity is C(μ)·d(μ) and drives the flag-1 case
        let c_val = pin.map(|p| ctx.scal.corner_scalar(p, mu));

        for (l, v) in &xis {
            let params = format!(
                "module={} λ={} μ={} {}",
                module.label(),
                fmt_ints(lambda),
                fmt_weight(mu),
                l.render()
            );
            if l.sigma == 0 {
                // (n,0)-operator: vanishes iff ν_1 = 0
                let z_img = ctx.z_n0_apply(v);
                let expect_zero = l.nu[0] == 0;
                let ok = z_img.is_zero() == expect_zero;
                out.push(record(
                    "mz.z-n0-vanishing",
                    "corner-basis",
                    params.clone(),
                    ok,
                    format!(
                        "image {} (ν_1={})",
                        if z_img.is_zero() { "= 0" } else { "≠ 0" },
                        l.nu[0]
                    ),
                ));

                // flag-0 image formula
                let lhs = ctx.project(&pf_op.apply(v));
                match &c_val {
                    Some(c) => {
                        let rhs = z_img.scale(c);
                        let ok = lhs == rhs;
                        out.push(pinned(
                            "mz.main-sigma0",
                            "main-theorem",
                            params.clone(),
                            ok,
                            if ok {
                                format!("scalar={}", fmt_rat(c))
                            } else {
                                clip(format!(
                                    "lhs={} rhs={}",
                                    fmt_svec(&lhs),
                                    fmt_svec(&rhs)
                                ))
                            },
                        ));
                    }
                    None => {
                        out.push(skipped(
                            "mz.main-sigma0",
                            "main-theorem",
                            params.clone(),
                            "no pinned scalar available".into(),
                        ));
                    }
                }
            } else {
                // flag-1: interpolation sum over raised labels
                let ks = match gamma_coeffs(&l.nu) {
                    Ok(k) => k,
                    Err(msg) => {
                        out.push(skipped("mz.z-n0-gamma", "flag-return", params.clone(), msg.clone()));
                        out.push(skipped("mz.main-sigma1", "main-theorem", params, msg));
                        continue;
                    }
                };
                let mut rhs_gamma = SVec::zero(module.dim());
                let mut invalid_nonzero = None;
                for (j, k_j) in ks.iter().enumerate() {
                    let mut raised = l.nu.clone();
                    raised[j] += 1;
                    let valid = interleaves_module(&raised, lambda)
                        && interleaves_interior(&raised, &mu_ints(mu));
                    if !valid {
                        if !k_j.is_zero() {
                            invalid_nonzero = Some(format!(
                                "raised label {} invalid with coefficient {}",
                                fmt_ints(&raised),
                                fmt_rat(k_j)
                            ));
                        }
                        continue;
                    }
                    match find(0, &raised) {
                        Some((_, w)) => rhs_gamma.add_scaled(w, &(sign_n.clone() * k_j.clone())),
                        None => {
                            invalid_nonzero = Some(format!(
                                "raised label {} missing from the basis",
                                fmt_ints(&raised)
                            ));
                        }
                    }
                }
                if let Some(msg) = invalid_nonzero {
                    out.push(record("mz.z-n0-gamma", "flag-return", params.clone(), false, msg.clone()));
                    out.push(record("mz.main-sigma1", "main-theorem", params, false, msg));
                    continue;
                }

                // the flag-return formula: the unnormalized (n,0)
                // primitive sends the flag-1 vector to the signed
                // interpolation sum with unit coefficients
                let lhs_gamma = ctx.z_check_apply(n, 0, v);
                let ok = lhs_gamma == rhs_gamma;
                out.push(pinned(
                    "mz.z-n0-gamma",
                    "flag-return",
                    params.clone(),
                    ok,
                    if ok {
                        "unnormalized primitive, unit coefficients".into()
                    } else {
                        clip(format!(
                            "lhs={} rhs={}",
                            fmt_svec(&lhs_gamma),
                            fmt_svec(&rhs_gamma)
                        ))
                    },
                ));

                // flag-1 image formula: scalar C(μ)·d(μ) — the flag
                // vector already carries one d(μ) from its raising
                // step, matching the per-space corner identity
                let lhs = ctx.project(&pf_op.apply(v));
                match &c_val {
                    Some(c) => {
                        let ctm = c.clone() * d_mu.clone();
                        let rhs = rhs_gamma.scale(&ctm);
                        let ok = lhs == rhs;
                        out.push(pinned(
                            "mz.main-sigma1",
                            "main-theorem",
                            params.clone(),
                            ok,
                            if ok {
                                format!("scalar={}", fmt_rat(&ctm))
                            } else {
                                clip(format!(
                                    "lhs={} rhs={}",
                                    fmt_svec(&lhs),
                                    fmt_svec(&rhs)
                                ))
                            },
                        ));
                    }
                    None => {
                        out.push(skipped(
                            "mz.main-sigma1",
                            "main-theorem",
                            params.clone(),
                            "no pinned scalar available".into(),
                        ));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// pinning the zero-slot constant
// ---------------------------------------------------------------------

/// The printed sources give three mutually inconsistent values for the
/// zero-slot constant; fit it by requiring that the labelled vectors
/// form nonsingular bases and that the flag-return formula holds for
/// the unnormalized `(n,0)` primitive with unit coefficients. Returns
/// the fit record and the winning value.
pub fn fit_f0(
    u: &Uea,
    modules: &[(&RepModule, Vec<i64>)],
) -> (CheckRecord, Option<Rat>) {
    let candidates = [rzero(), rfrac(-1, 2), rfrac(1, 2)];
    let mut winners: Vec<Rat> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    for cand in &candidates {
        let mut failure: Option<String> = None;
        let mut gamma_confirmed = 0usize;
        'modloop: for (module, lambda) in modules {
            let n = module.rank().n();
            let ctx = MzContext::with_scalars(u, module, MzScalars::with_f0(n, cand.clone()));
            for hs in ctx.spaces() {
                let mu = &hs.mu;
                let at = format!("{} μ={}", module.label(), fmt_weight(mu));
                let labels = branching_labels(lambda, &mu_ints(mu));
                if labels.len() != hs.dim() {
                    failure = Some(format!("{at}: label count mismatch"));
                    break 'modloop;
                }
                let (xis, bad) = build_xis(&ctx, lambda, mu, &labels);
                if let Some((l, e)) = bad.first() {
                    failure = Some(format!("{at}: {} {e}", l.render()));
                    break 'modloop;
                }
                let mut elim = crate::rep_engine::Elim::new(module.dim(), false);
                for (l, v) in &xis {
                    if v.is_zero() {
                        failure = Some(format!("{at}: {} vanishes", l.render()));
                        break 'modloop;
                    }
                    elim.insert(v);
                }
                if elim.rank() != hs.dim() {
                    failure = Some(format!("{at}: vectors dependent"));
                    break 'modloop;
                }
                // flag-return formula for the unnormalized primitive
                let sign_n = if n % 2 == 0 { rint(1) } else { rint(-1) };
                for (l, v) in &xis {
                    if l.sigma != 1 {
                        continue;
                    }
                    let ks = match gamma_coeffs(&l.nu) {
                        Ok(k) => k,
                        Err(_) => continue,
                    };
                    let mut rhs = SVec::zero(module.dim());
                    let mut broken = false;
                    for (j, k_j) in ks.iter().enumerate() {
                        let mut raised = l.nu.clone();
                        raised[j] += 1;
                        let valid = interleaves_module(&raised, lambda)
                            && interleaves_interior(&raised, &mu_ints(mu));
                        if !valid {
                            if !k_j.is_zero() {
                                broken = true;
                            }
                            continue;
                        }
                        match xis.iter().find(|(x, _)| x.sigma == 0 && x.nu == raised) {
                            Some((_, w)) => rhs.add_scaled(w, &(sign_n.clone() * k_j.clone())),
                            None => broken = true,
                        }
                    }
                    if broken {
                        failure = Some(format!("{at}: {} raised-label structure broken", l.render()));
                        break 'modloop;
                    }
                    if ctx.z_check_apply(n, 0, v) != rhs {
                        failure = Some(format!("{at}: {} flag-return mismatch", l.render()));
                        break 'modloop;
                    }
                    gamma_confirmed += 1;
                }
            }
        }
        match failure {
            None if gamma_confirmed > 0 => {
                winners.push(cand.clone());
                notes.push(format!(
                    "{} ok ({} flag-return instances)",
                    fmt_rat(cand),
                    gamma_confirmed
                ));
            }
            None => notes.push(format!("{} vacuous", fmt_rat(cand))),
            Some(msg) => notes.push(format!("{} rejected: {}", fmt_rat(cand), msg)),
        }
    }
    if winners.len() == 1 {
        let w = winners.into_iter().next().unwrap();
        (
            pinned(
                "mz.f0-fit",
                "scalars",
                format!("candidates=0,-1/2,1/2 modules={}", modules.len()),
                true,
                format!("unique value {}", notes.join("; ")),
            ),
            Some(w),
        )
    } else {
        (
            record(
                "mz.f0-fit",
                "scalars",
                format!("candidates=0,-1/2,1/2 modules={}", modules.len()),
                false,
                format!("no unique winner: {}", notes.join("; ")),
            ),
            None,
        )
    }
}

// ---------------------------------------------------------------------
// counting oracles
// ---------------------------------------------------------------------

fn all_interior_labels(n: usize, floor: i64) -> Vec<Vec<i64>> {
    // weakly decreasing nonpositive vectors of length n-1 bounded below
    let mut out = Vec::new();
    let mut cur = alloc::vec![0i64; n - 1];
    fn rec(slot: usize, hi: i64, floor: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slot == cur.len() {
            out.push(cur.clone());
            return;
        }
        let mut v = hi;
        while v >= floor {
            cur[slot] = v;
            rec(slot + 1, v, floor, cur, out);
            v -= 1;
        }
    }
    rec(0, 0, floor, &mut cur, &mut out);
    out
}

/// Per-space label counts equal highest-space dimensions, including the
/// zero count for interior labels absent from the module.
pub fn check_label_count(ctx: &MzContext<'_>, lambda: &[i64]) -> Vec<CheckRecord> {
    let module = ctx.module();
    let n = lambda.len();
    let mut out = Vec::new();
    let floor = lambda[n - 1] - 1;
    for mu in all_interior_labels(n, floor) {
        let labels = branching_labels(lambda, &mu);
        let mu_rat: Vec<Rat> = mu.iter().map(|x| rint(*x)).collect();
        let dim = ctx.space_of(&mu_rat).map(|h| h.dim()).unwrap_or(0);
        let ok = labels.len() == dim;
        if dim == 0 && labels.is_empty() {
            continue; // uninformative; keep the report compact
        }
        out.push(record(
            "mz.label-count",
            "counting",
            format!(
                "module={} λ={} μ={}",
                module.label(),
                fmt_ints(lambda),
                fmt_ints(&mu)
            ),
            ok,
            format!("labels={} dim={}", labels.len(), dim),
        ));
    }
    out
}

/// Summing label counts against interior Weyl dimensions reproduces the
/// Weyl dimension of the module label (module-free identity).
pub fn check_label_completeness(lambda: &[i64]) -> CheckRecord {
    let n = lambda.len();
    let total_expected = weyl_dim_odd_orthogonal(n, &partition_of(lambda));
    let mut total = rzero();
    for mu in all_interior_labels(n, lambda[n - 1]) {
        let count = branching_labels(lambda, &mu).len();
        if count == 0 {
            continue;
        }
        let inner = weyl_dim_odd_orthogonal(n - 1, &partition_of(&mu));
        total = total + rint(count as i64) * inner;
    }
    let ok = total == total_expected;
    record(
        "mz.label-completeness",
        "counting",
        format!("λ={}", fmt_ints(lambda)),
        ok,
        format!(
            "label-weighted sum={} expected={}",
            fmt_rat(&total),
            fmt_rat(&total_expected)
        ),
    )
}

/// Basis-table counts match Weyl dimensions (with the nonpositivity cap
/// on the primed leading entries, without which the enumeration would
/// not terminate).
pub fn check_gt_count(lambda: &[i64]) -> CheckRecord {
    let n = lambda.len();
    let tables = gt_tables(lambda);
    let expected = weyl_dim_odd_orthogonal(n, &partition_of(lambda));
    let ok = rint(tables.len() as i64) == expected;
    record(
        "mz.gt-count",
        "counting",
        format!("λ={}", fmt_ints(lambda)),
        ok,
        format!("tables={} weyl={}", tables.len(), fmt_rat(&expected)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_engine::{standard_module, tensor_module, YoungShape};
    use crate::uea_core::AlgebraRank;

    fn assert_all_green(records: &[CheckRecord]) {
        for r in records {
            assert!(
                !r.status.is_failure(),
                "{} [{}] failed: {}",
                r.id,
                r.params,
                r.witness
            );
        }
    }

    #[test]
    fn projector_and_shift_records_standard() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let ctx = MzContext::new(&u, &m);
        assert_all_green(&check_projector(&ctx));
        assert_all_green(&check_z_weight_shift(&ctx));
        let rec = check_z_mirror(&ctx);
        assert!(!rec.status.is_failure());
    }

    #[test]
    fn nonsymmetric_vanishing_standard_five() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let ctx = MzContext::new(&u, &m);
        let recs = check_nonsymmetric_vanishing(&ctx);
        assert_eq!(recs.len(), 2); // {-1,0} and {0,1}
        assert_all_green(&recs);
    }

    #[test]
    fn symmetric_hc_operator_and_closed_form() {
        let rank5 = AlgebraRank::new(5).unwrap();
        let u5 = Uea::new(rank5);
        let m5 = standard_module(rank5);
        let ctx5 = MzContext::new(&u5, &m5);
        let rank7 = AlgebraRank::new(7).unwrap();
        let u7 = Uea::new(rank7);
        let m7 = standard_module(rank7);
        let ctx7 = MzContext::new(&u7, &m7);
        let recs = check_symmetric_hc(&[&ctx5, &ctx7]);
        assert_all_green(&recs);
        // one symmetric set at N=5, three at N=7
        let cf5 = check_symmetric_hc_closed_form(&u5, 2);
        assert_eq!(cf5.len(), 1);
        assert_all_green(&cf5);
        let cf7 = check_symmetric_hc_closed_form(&u7, 3);
        assert_eq!(cf7.len(), 3);
        assert_all_green(&cf7);
        // the printed factorial normalization deviates on every set
        for r in cf5.iter().chain(&cf7) {
            assert!(r.witness.contains("printed factorial form deviates"), "{}", r.witness);
        }
    }

    #[test]
    fn tm_proportionality_standard_and_adjoint() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let ctx = MzContext::new(&u, &m);
        let (recs, samples) = check_tm_proportionality(&ctx);
        assert_all_green(&recs);
        // on the standard module the (n,0) generator image vanishes on
        // every highest vector, so both sides are zero and no scalar
        // sample arises
        assert!(samples.is_empty());
        let adj = tensor_module(rank, &YoungShape::new(&[1, 1]).unwrap()).unwrap();
        let ctx_a = MzContext::new(&u, &adj.module);
        let (recs_a, samples_a) = check_tm_proportionality(&ctx_a);
        assert_all_green(&recs_a);
        assert!(!samples_a.is_empty());
    }

    #[test]
    fn f0_fit_unique_on_standard_and_adjoint() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let std_m = standard_module(rank);
        let adj = tensor_module(rank, &YoungShape::new(&[1, 1]).unwrap()).unwrap();
        let mods: Vec<(&RepModule, Vec<i64>)> = alloc::vec![
            (&std_m, alloc::vec![0, -1]),
            (&adj.module, alloc::vec![-1, -1]),
        ];
        let (rec, winner) = fit_f0(&u, &mods);
        assert!(!rec.status.is_failure(), "{}", rec.witness);
        assert_eq!(winner, Some(rzero()));
    }

    #[test]
    fn xi_basis_and_counts_standard() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let m = standard_module(rank);
        let ctx = MzContext::new(&u, &m);
        let lambda = module_label(&m);
        assert_eq!(lambda, alloc::vec![0, -1]);
        assert_all_green(&check_xi_basis(&ctx, &lambda));
        assert_all_green(&check_label_count(&ctx, &lambda));
    }

    #[test]
    fn label_completeness_and_gt_counts() {
        for lam in [
            alloc::vec![0i64, 0],
            alloc::vec![0, -1],
            alloc::vec![-1, -1],
            alloc::vec![0, -2],
            alloc::vec![-1, -2],
            alloc::vec![-2, -2],
        ] {
            let rec = check_label_completeness(&lam);
            assert!(!rec.status.is_failure(), "{}: {}", rec.params, rec.witness);
            let rec2 = check_gt_count(&lam);
            assert!(!rec2.status.is_failure(), "{}: {}", rec2.params, rec2.witness);
        }
        let rec3 = check_gt_count(&[0, 0, -1]);
        assert!(!rec3.status.is_failure(), "{}", rec3.witness);
    }

    #[test]
    fn main_theorem_standard_and_adjoint() {
        let rank = AlgebraRank::new(5).unwrap();
        let u = Uea::new(rank);
        let std_m = standard_module(rank);
        let adj = tensor_module(rank, &YoungShape::new(&[1, 1]).unwrap()).unwrap();
        let sym2 = tensor_module(rank, &YoungShape::new(&[2]).unwrap()).unwrap();
        let ctx_s = MzContext::new(&u, &std_m);
        let ctx_a = MzContext::new(&u, &adj.module);
        let ctx_2 = MzContext::new(&u, &sym2.module);
        let mut samples = Vec::new();
        for ctx in [&ctx_s, &ctx_a, &ctx_2] {
            let (recs, s) = check_tm_proportionality(ctx);
            assert_all_green(&recs);
            samples.extend(s);
        }
        let (pin_rec, pin) = pin_tm_scalar(&ctx_s.scal, &samples);
        assert!(!pin_rec.status.is_failure(), "{}", pin_rec.witness);
        let pin = pin.unwrap();
        assert_eq!(
            pin,
            TmScalarPin {
                shifted_args: true,
                sum_plus: false
            }
        );
        assert_all_green(&check_main_theorem(&ctx_s, &[0, -1], Some(&pin)));
        assert_all_green(&check_main_theorem(&ctx_a, &[-1, -1], Some(&pin)));
    }
}
