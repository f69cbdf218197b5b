//! Orchestrated verification suites.
//!
//! Each entry point assembles the per-component checkers into one
//! [`SuiteReport`] for a fixed algebra size `N`. Reports are
//! deterministic: sampled checks draw from a fixed-seed generator, and
//! records are sorted by id and parameters before the report is
//! returned, so identical inputs yield identical reports.
//!
//! Constants that had to be pinned empirically (ambiguous or mutually
//! inconsistent stated values) are re-fitted on every run and emitted in
//! the report's errata section, never silently absorbed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::subsets_of_size;
use crate::mz_branching::{
    check_gt_count, check_label_completeness, check_label_count, check_main_theorem,
    check_nonsymmetric_vanishing, check_projector, check_symmetric_hc,
    check_symmetric_hc_closed_form, check_tm_proportionality, check_xi_basis, check_z_mirror,
    check_z_weight_shift, fit_f0, pin_tm_scalar, MzContext, MzScalars, ZNumerator,
};
use crate::pfaffian::checks as pfc;
use crate::pfaffian::IndexSubset;
use crate::rat::{fmt_rat, rint};
use crate::rep_engine::checks as repc;
use crate::rep_engine::tensor::tensor_power_module;
use crate::rep_engine::{standard_module, tensor_module, RepModule, YoungShape};
use crate::report::{CheckRecord, SuiteReport};
use crate::uea_core::{AlgebraRank, Uea, UeaElement};

/// Configuration for one verification run.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// algebra size `N = 2n+1`; 5 and 7 are the exercised ranks
    pub big_n: i32,
    /// seed for sampled checks; the fixed default keeps reports stable
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(big_n: i32) -> Self {
        VerifyConfig {
            big_n,
            seed: 0x70f1ab,
        }
    }
}

/// Names of the runnable suites, in canonical order.
pub const SUITE_NAMES: [&str; 5] = [
    "algebra",
    "pfaffian-identities",
    "representations",
    "appendix",
    "mz",
];

/// Run one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<SuiteReport> {
    match name {
        "algebra" => Some(run_algebra(cfg)),
        "pfaffian-identities" => Some(run_pfaffian(cfg)),
        "representations" => Some(run_representations(cfg)),
        "appendix" => Some(run_appendix(cfg)),
        "mz" => Some(run_mz(cfg)),
        _ => None,
    }
}

/// Run every suite in canonical order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, cfg).expect("known suite"))
        .collect()
}

// ---------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------

fn rank_of(cfg: &VerifyConfig) -> AlgebraRank {
    AlgebraRank::new(cfg.big_n).expect("odd rank at least three")
}

fn rng_for(cfg: &VerifyConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt)
}

fn pick(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    (rng.next_u64() % bound as u64) as usize
}

/// Random element with up to `terms` PBW terms of degree at most `deg`,
/// with small nonzero integer coefficients.
fn random_element(u: &Uea, rng: &mut ChaCha8Rng, terms: usize, deg: usize) -> UeaElement {
    let gens = u.generators();
    let mut out = UeaElement::zero();
    for _ in 0..(1 + pick(rng, terms)) {
        let sign = if pick(rng, 2) == 0 { 1 } else { -1 };
        let coeff = rint(sign * (1 + pick(rng, 3)) as i64);
        let mut term = UeaElement::scalar(coeff);
        for _ in 0..pick(rng, deg + 1) {
            let g = gens[pick(rng, gens.len())];
            term = u.multiply(&term, &UeaElement::from_gen(g));
        }
        out = out.add(&term);
    }
    out
}

/// Sort records by id then parameters: report content is independent of
/// generation order.
fn finish(mut report: SuiteReport) -> SuiteReport {
    report
        .records
        .sort_by(|a, b| a.id.cmp(&b.id).then(a.params.cmp(&b.params)));
    report.errata.sort_by(|a, b| a.id.cmp(&b.id));
    report
}

fn push_all(report: &mut SuiteReport, records: Vec<CheckRecord>) {
    report.records.extend(records);
}

fn push_one(report: &mut SuiteReport, rec: CheckRecord) {
    report.records.push(rec);
}

/// Even-size subsets of the full index range, as index-set handles.
fn even_subsets(rank: AlgebraRank, size: usize) -> Vec<IndexSubset> {
    let indices = rank.indices();
    subsets_of_size(&indices, size)
        .into_iter()
        .map(|s| IndexSubset::new(rank, &s).expect("indices in range"))
        .collect()
}

struct ModuleSet {
    standard: RepModule,
    tensors: Vec<(RepModule, Vec<usize>, Vec<i64>)>, // (module, shape, partition)
}

/// The exercised modules for a rank: the standard module plus tensor
/// modules of shapes [1,1] and (rank five only) [2].
fn module_set(rank: AlgebraRank) -> ModuleSet {
    let mut shapes = alloc::vec![alloc::vec![1usize, 1]];
    if rank.big_n() == 5 {
        shapes.push(alloc::vec![2usize]);
    }
    let mut tensors = Vec::new();
    for shape in shapes {
        let ys = YoungShape::new(&shape).expect("valid shape");
        let bundle = tensor_module(rank, &ys).expect("nonzero component");
        let partition: Vec<i64> = shape.iter().map(|&r| r as i64).collect();
        tensors.push((bundle.module, shape, partition));
    }
    ModuleSet {
        standard: standard_module(rank),
        tensors,
    }
}

// ---------------------------------------------------------------------
// suite: algebra
// ---------------------------------------------------------------------

/// Structure-constant and straightening laws: antisymmetry, the Jacobi
/// identity, associativity of the straightening product, and the
/// coproduct homomorphism property.
pub fn run_algebra(cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("algebra");
    let rank = rank_of(cfg);
    let u = Uea::new(rank);
    let gens = u.generators();

    // antisymmetry [x,y] + [y,x] = 0, exhaustive over canonical pairs
    {
        let mut ok = true;
        let mut witness = String::new();
        'pairs: for &a in &gens {
            for &b in &gens {
                let s = u.bracket_generators(a, b).add(&u.bracket_generators(b, a));
                if !s.is_zero() {
                    ok = false;
                    witness = format!("pair ({}, {})", a, b);
                    break 'pairs;
                }
            }
        }
        report.push_bool(
            "alg.antisymmetry",
            "generator brackets are antisymmetric",
            &format!("N={} pairs={} exhaustive", cfg.big_n, gens.len() * gens.len()),
            ok,
            &witness,
        );
    }

    // Jacobi identity on generator triples: exhaustive at rank five,
    // seeded 500-triple sample at rank seven
    {
        let mut triples: Vec<[usize; 3]> = Vec::new();
        let exhaustive = cfg.big_n <= 5;
        if exhaustive {
            for a in 0..gens.len() {
                for b in (a + 1)..gens.len() {
                    for c in (b + 1)..gens.len() {
                        triples.push([a, b, c]);
                    }
                }
            }
        } else {
            let mut rng = rng_for(cfg, 1);
            for _ in 0..500 {
                triples.push([
                    pick(&mut rng, gens.len()),
                    pick(&mut rng, gens.len()),
                    pick(&mut rng, gens.len()),
                ]);
            }
        }
        let mut ok = true;
        let mut witness = String::new();
        for t in &triples {
            let (x, y, z) = (
                UeaElement::from_gen(gens[t[0]]),
                UeaElement::from_gen(gens[t[1]]),
                UeaElement::from_gen(gens[t[2]]),
            );
            let s = u
                .commutator(&u.commutator(&x, &y), &z)
                .add(&u.commutator(&u.commutator(&y, &z), &x))
                .add(&u.commutator(&u.commutator(&z, &x), &y));
            if !s.is_zero() {
                ok = false;
                witness = format!("triple ({}, {}, {})", gens[t[0]], gens[t[1]], gens[t[2]]);
                break;
            }
        }
        report.push_bool(
            "alg.jacobi",
            "generator brackets satisfy the Jacobi identity",
            &format!(
                "N={} triples={} {}",
                cfg.big_n,
                triples.len(),
                if exhaustive { "exhaustive" } else { "seeded-sample" }
            ),
            ok,
            &witness,
        );
    }

    // associativity of the straightening product on random low-degree
    // elements (rank five)
    if cfg.big_n == 5 {
        let mut rng = rng_for(cfg, 2);
        let trials = 100;
        let mut ok = true;
        let mut witness = String::new();
        for _ in 0..trials {
            let x = random_element(&u, &mut rng, 2, 2);
            let y = random_element(&u, &mut rng, 2, 2);
            let z = random_element(&u, &mut rng, 2, 2);
            let lhs = u.multiply(&u.multiply(&x, &y), &z);
            let rhs = u.multiply(&x, &u.multiply(&y, &z));
            if !lhs.sub(&rhs).is_zero() {
                ok = false;
                witness = format!("x={} y={} z={}", x.render(), y.render(), z.render());
                break;
            }
        }
        report.push_bool(
            "alg.associativity",
            "straightening product is associative",
            &format!("N={} triples={} seeded-sample deg<=2", cfg.big_n, trials),
            ok,
            &witness,
        );
    }

    // coproduct is an algebra map on random low-degree elements
    {
        let mut rng = rng_for(cfg, 3);
        let trials = if cfg.big_n == 5 { 40 } else { 10 };
        let mut ok = true;
        let mut witness = String::new();
        for _ in 0..trials {
            let x = random_element(&u, &mut rng, 2, 2);
            let y = random_element(&u, &mut rng, 2, 2);
            let lhs = u.coproduct(&u.multiply(&x, &y));
            let rhs = u.multiply_tensor(&u.coproduct(&x), &u.coproduct(&y));
            if !lhs.sub(&rhs).is_zero() {
                ok = false;
                witness = format!("x={} y={}", x.render(), y.render());
                break;
            }
        }
        report.push_bool(
            "alg.coproduct-hom",
            "coproduct respects the product",
            &format!("N={} pairs={} seeded-sample deg<=2", cfg.big_n, trials),
            ok,
            &witness,
        );
    }

    finish(report)
}

// ---------------------------------------------------------------------
// suite: pfaffian-identities
// ---------------------------------------------------------------------

/// Symbolic Pfaffian identities in the enveloping algebra: the four-case
/// replacement rule, its omitted-index consequences, the split and
/// expansion laws, the coproduct law, and the adjoint-weight invariant.
pub fn run_pfaffian(cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("pfaffian-identities");
    let rank = rank_of(cfg);
    let u = Uea::new(rank);
    let n = rank.n();
    let indices = rank.indices();

    // four-case replacement rule, exhaustive over subsets and generator
    // pairs
    let lemma_sizes: &[usize] = if cfg.big_n == 5 { &[2, 4] } else { &[2, 4, 6] };
    for &size in lemma_sizes {
        for set in even_subsets(rank, size) {
            for &j1 in &indices {
                for &j2 in &indices {
                    if j1 == j2 {
                        continue;
                    }
                    push_one(&mut report, pfc::check_commutator_lemma(&u, &set, j1, j2));
                }
            }
        }
    }

    // omitted-index consequences for every generator pair, plus
    // centrality of the extreme omitted-index Pfaffians
    for &i in &indices {
        for &j in &indices {
            if i == j {
                continue;
            }
            push_all(&mut report, pfc::check_commutator_corollary(&u, i, j));
        }
    }
    for hat in [n, -n] {
        push_one(&mut report, pfc::check_hat_interior_commute(&u, hat));
    }

    // split, averaged, expansion, and coproduct laws: exhaustive at rank
    // five for size four, seeded spot-checks at rank seven
    let mut split_sets: Vec<IndexSubset> = Vec::new();
    if cfg.big_n == 5 {
        split_sets.extend(even_subsets(rank, 4));
    } else {
        let mut rng = rng_for(cfg, 4);
        for size in [4usize, 6] {
            let all = even_subsets(rank, size);
            let with_low: Vec<&IndexSubset> =
                all.iter().filter(|s| s.contains(-n)).collect();
            // two seeded picks per size plus one guaranteed to contain
            // the lowest index so the expansion law is exercised
            for _ in 0..2 {
                split_sets.push(all[pick(&mut rng, all.len())].clone());
            }
            split_sets.push(with_low[pick(&mut rng, with_low.len())].clone());
        }
    }
    split_sets.sort_by(|a, b| a.elements().cmp(b.elements()));
    split_sets.dedup_by(|a, b| a.elements() == b.elements());
    for set in &split_sets {
        let k = set.len();
        let mut p = 0;
        while p <= k {
            push_one(&mut report, pfc::check_split_identity(&u, set, p, k - p));
            p += 2;
        }
        push_one(&mut report, pfc::check_split_averaged(&u, set));
        push_one(&mut report, pfc::check_coproduct_lemma(&u, set));
        if set.contains(-n) {
            push_one(&mut report, pfc::check_minor_n_expansion(&u, set));
        }
    }

    // adjoint-weight invariant on all omitted-index sets
    for &hat in &indices {
        let set = IndexSubset::hat(rank, hat).expect("index in range");
        push_one(&mut report, pfc::check_pf_ad_weight(&u, &set));
    }

    report.push_erratum(
        "pin.spectator-hypothesis",
        "the spectator-vanishing bracket holds for k outside {i,-i,j,-j}; \
         the narrower stated hypothesis (k different from i,j only) is \
         inconsistent with the two nonzero bracket cases and was widened",
    );

    finish(report)
}

// ---------------------------------------------------------------------
// suite: representations
// ---------------------------------------------------------------------

/// Explicit-module laws: the homomorphism and dimension invariants, the
/// central-element scalar, the branching completeness count, the
/// weight-shift law for Pfaffian matrices, and the omitted-index matrix
/// identities.
pub fn run_representations(cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("representations");
    let rank = rank_of(cfg);
    let u = Uea::new(rank);
    let n = rank.n();
    let ms = module_set(rank);

    let mut labelled: Vec<(&RepModule, Vec<i64>)> = Vec::new();
    labelled.push((&ms.standard, alloc::vec![1]));
    for (m, _, partition) in &ms.tensors {
        labelled.push((m, partition.clone()));
    }

    for (module, partition) in &labelled {
        push_one(&mut report, repc::check_module_hom(&u, module));
        push_one(&mut report, repc::check_dim_oracle(module, partition));
        push_one(&mut report, repc::check_central_scalar(&u, module));
        push_one(&mut report, repc::check_branching_completeness(module));
        push_all(&mut report, repc::check_hat_preserves_highest(&u, module));
        for which in [n, -n] {
            push_one(
                &mut report,
                repc::check_hat_interior_matrix(&u, module, which),
            );
        }
    }

    // omitted-index bracket rule as matrices, on the standard module and
    // the first tensor module
    let matrix_modules: [&RepModule; 2] = [&ms.standard, &ms.tensors[0].0];
    for module in matrix_modules {
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                push_all(&mut report, repc::check_hat_bracket_matrix(&u, module, i, j));
            }
        }
    }

    // weight-shift law for every even subset; all three modules at rank
    // five, the standard module at rank seven
    let shift_modules: Vec<&RepModule> = if cfg.big_n == 5 {
        labelled.iter().map(|(m, _)| *m).collect()
    } else {
        alloc::vec![&ms.standard]
    };
    let shift_sizes: &[usize] = if cfg.big_n == 5 { &[2, 4] } else { &[2, 4, 6] };
    for module in shift_modules {
        for &size in shift_sizes {
            for set in even_subsets(rank, size) {
                push_one(&mut report, repc::check_weight_shift(&u, module, &set));
            }
        }
    }

    // action is multiplicative on random low-degree elements
    {
        let mut rng = rng_for(cfg, 5);
        let trials = 30;
        let mut ok = true;
        let mut witness = String::new();
        for _ in 0..trials {
            let x = random_element(&u, &mut rng, 2, 2);
            let y = random_element(&u, &mut rng, 2, 2);
            let col = pick(&mut rng, ms.standard.dim());
            let v = crate::rep_engine::SVec::unit(ms.standard.dim(), col);
            let lhs = ms.standard.act(&u.multiply(&x, &y), &v);
            let rhs = ms.standard.act(&x, &ms.standard.act(&y, &v));
            if lhs != rhs {
                ok = false;
                witness = format!("x={} y={} basis={}", x.render(), y.render(), col);
                break;
            }
        }
        report.push_bool(
            "rep.act-multiplicative",
            "module action respects the straightening product",
            &format!("N={} samples={} seeded", cfg.big_n, trials),
            ok,
            &witness,
        );
    }

    finish(report)
}

// ---------------------------------------------------------------------
// suite: appendix
// ---------------------------------------------------------------------

/// Small-module vanishing and closed-form action laws: annihilation on
/// the standard module, vanishing on short tensor powers, the half-size
/// tensor closed form with its fitted global sign, and the tableau
/// action rule.
pub fn run_appendix(cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("appendix");
    let rank = rank_of(cfg);
    let u = Uea::new(rank);

    let annihilation_sizes: &[usize] = if cfg.big_n == 5 { &[4] } else { &[4, 6] };
    let standard = standard_module(rank);
    for &size in annihilation_sizes {
        push_one(&mut report, repc::check_annihilation(&u, &standard, size));
    }

    // short tensor powers: fewer factors than half the subset size
    for &size in annihilation_sizes {
        for factors in 1..(size / 2) {
            for set in even_subsets(rank, size) {
                push_one(
                    &mut report,
                    repc::check_short_tensor_vanishing(&u, &set, factors),
                );
            }
        }
    }

    // half-size tensor powers: closed form with one fitted sign per
    // subset size, then the place-subset expansion under that sign
    let half_sizes: &[usize] = if cfg.big_n == 5 { &[2, 4] } else { &[2, 4, 6] };
    let mut fitted_signs: Vec<(usize, i64)> = Vec::new();
    for &size in half_sizes {
        let (module, space) = tensor_power_module(rank, size / 2);
        let mut fitted: Option<i64> = None;
        for set in even_subsets(rank, size) {
            let (rec, f) = repc::fit_half_tensor_sign(&u, &set, &module, &space, fitted);
            fitted = f;
            push_one(&mut report, rec);
        }
        if let Some(eps) = fitted {
            fitted_signs.push((size, eps));
            for set in even_subsets(rank, size) {
                push_one(
                    &mut report,
                    repc::check_place_subset_expansion(&u, &set, &module, &space, eps),
                );
            }
        }
    }
    for (size, eps) in &fitted_signs {
        let predicted: i64 = if (size / 2) % 2 == 0 { 1 } else { -1 };
        report.push_erratum(
            &format!("pin.half-tensor-sign-{}", size),
            &format!(
                "global sign of the half-size tensor closed form for subsets \
                 of size {} fitted by direct action: {:+}; matches the \
                 alternating-in-half-size rule ({})",
                size,
                eps,
                if *eps == predicted { "yes" } else { "NO" }
            ),
        );
    }

    // tableau action rule for both exercised shapes (rank five)
    if cfg.big_n == 5 {
        let eps4 = fitted_signs
            .iter()
            .find(|(s, _)| *s == 4)
            .map(|(_, e)| *e)
            .expect("size-four sign fitted");
        for shape in [alloc::vec![1usize, 1], alloc::vec![2usize]] {
            let ys = YoungShape::new(&shape).expect("valid shape");
            let bundle = tensor_module(rank, &ys).expect("nonzero component");
            for set in even_subsets(rank, 4) {
                push_one(
                    &mut report,
                    repc::check_tableau_action(&u, &bundle, &set, eps4),
                );
            }
        }
    }

    finish(report)
}

// ---------------------------------------------------------------------
// suite: mz
// ---------------------------------------------------------------------

/// Branching-operator laws: projector structure, step-operator weight
/// shifts and mirror symmetry, the vanishing and closed-form value of
/// projected Pfaffians on highest spaces, the corner-operator
/// proportionality with its pinned scalar, the labelled corner bases,
/// the image formulas on them, and the counting oracles.
pub fn run_mz(cfg: &VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("mz");
    let rank = rank_of(cfg);
    let u = Uea::new(rank);
    let n = rank.n();
    let ms = module_set(rank);

    let mut labelled: Vec<(&RepModule, Vec<i64>)> = Vec::new();
    {
        let mut std_label = alloc::vec![0i64; n as usize];
        std_label[(n - 1) as usize] = -1;
        labelled.push((&ms.standard, std_label));
        for (m, shape, _) in &ms.tensors {
            // highest weight of the shape-[1,1] component is
            // (0,...,0,-1,-1); of the shape-[2] component (0,...,0,-2)
            let mut label = alloc::vec![0i64; n as usize];
            if shape.len() == 2 {
                label[(n - 1) as usize] = -1;
                label[(n - 2) as usize] = -1;
            } else {
                label[(n - 1) as usize] = -(shape[0] as i64);
            }
            labelled.push((m, label));
        }
    }

    // pin the zero-slot constant from the corner bases (rank five; the
    // pinned value is rank-independent and reused at rank seven)
    let mut f0 = crate::rat::rzero();
    if n == 2 {
        let (rec, winner) = fit_f0(&u, &labelled);
        push_one(&mut report, rec);
        if let Some(w) = winner {
            f0 = w;
        }
    }
    report.push_erratum(
        "pin.zero-slot",
        &format!(
            "the shifted zero-index eigenvalue appears with three different \
             stated values (0, -1/2, +1/2); the corner-basis construction \
             rejects the nonzero readings through structural zero \
             denominators and only f_0 = {} satisfies the flag-return \
             formula; pinned at rank five",
            fmt_rat(&f0)
        ),
    );

    let contexts: Vec<MzContext<'_>> = labelled
        .iter()
        .map(|(m, _)| MzContext::with_scalars(&u, m, MzScalars::with_f0(n, f0.clone())))
        .collect();

    for ctx in &contexts {
        push_all(&mut report, check_projector(ctx));
        push_all(&mut report, check_z_weight_shift(ctx));
        push_one(&mut report, check_z_mirror(ctx));
        push_all(&mut report, check_nonsymmetric_vanishing(ctx));
    }
    {
        let refs: Vec<&MzContext<'_>> = contexts.iter().collect();
        push_all(&mut report, check_symmetric_hc(&refs));
    }
    push_all(&mut report, check_symmetric_hc_closed_form(&u, n));
    report.push_erratum(
        "pin.symmetric-hc-form",
        "the projected symmetric-set Pfaffian evaluates on a highest space \
         of interior weight mu as the product of (mu_{a_t} - t + 1) over \
         the positive set indices a_1 < ... < a_r; this equals the stated \
         factorial product form only on descending arguments with uniform \
         shift -r/2 and without the 1/r! prefactor",
    );
    report.push_erratum(
        "pin.mirror-sign",
        "the interior-to-extreme step operator and its negated-index \
         mirror satisfy x + mirror(x) = 0: the mirror symmetry holds with \
         sign -1, not +1",
    );
    report.push_erratum(
        "note.projector-realization",
        "the projector is realized as the exact linear projection onto the \
         joint kernel of the interior raising operators along the span of \
         lowered vectors; the factored series realization agrees wherever \
         its denominators are nonzero, and its poles occur only over zero \
         highest spaces, where the projection is zero",
    );
    report.push_erratum(
        "pin.corner-numerator",
        &format!(
            "in the one-parameter corner operator the interpolation \
             numerator uses the running product index, not the outer term \
             index as stated ({:?})",
            ZNumerator::VaryWithProduct
        ),
    );

    // corner-operator proportionality and the scalar pin
    let mut samples = Vec::new();
    for ctx in &contexts {
        let (recs, s) = check_tm_proportionality(ctx);
        push_all(&mut report, recs);
        samples.extend(s);
    }
    let scal = MzScalars::with_f0(n, f0.clone());
    let mut pin = None;
    if n == 2 {
        let (rec, p) = pin_tm_scalar(&scal, &samples);
        if let Some(p) = &p {
            report.push_erratum(
                "pin.corner-scalar",
                &format!(
                    "corner-scalar polynomial reading pinned from the \
                     proportionality samples: {}",
                    p.describe()
                ),
            );
        }
        push_one(&mut report, rec);
        pin = p;
    }

    // labelled corner bases, image formulas, counting oracles (rank five)
    if n == 2 {
        for (ctx, (_, lambda)) in contexts.iter().zip(&labelled) {
            push_all(&mut report, check_xi_basis(ctx, lambda));
            push_all(&mut report, check_label_count(ctx, lambda));
            push_all(&mut report, check_main_theorem(ctx, lambda, pin.as_ref()));
        }
        report.push_erratum(
            "pin.flag-return-normalization",
            "the flag-return interpolation formula holds for the \
             unnormalized corner primitive with unit coefficients; with \
             the normalized operator both sides differ by exactly one \
             factor of the normalizing product d(mu), which belongs only \
             to the flag-raising step",
        );
        for lambda in [
            alloc::vec![0i64, 0],
            alloc::vec![0, -1],
            alloc::vec![-1, -1],
            alloc::vec![0, -2],
            alloc::vec![-1, -2],
            alloc::vec![-2, -2],
        ] {
            push_one(&mut report, check_label_completeness(&lambda));
            push_one(&mut report, check_gt_count(&lambda));
        }
        report.push_erratum(
            "note.table-cap",
            "table enumeration imposes the top cap (0 at and above the \
             first primed row) in addition to the stated interlacing \
             restrictions; without it the counts disagree with the \
             dimension oracle",
        );
    } else {
        // rank-seven counting spot check
        push_one(&mut report, check_gt_count(&[0, 0, -1]));
    }

    finish(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_green(report: &SuiteReport) {
        for r in &report.records {
            assert!(
                !r.status.is_failure(),
                "[{}] {} :: {}",
                r.id,
                r.params,
                r.witness
            );
        }
        assert!(report.all_green());
    }

    #[test]
    fn algebra_suite_rank_five() {
        let report = run_algebra(&VerifyConfig::new(5));
        assert_green(&report);
        assert!(report.records.iter().any(|r| r.id == "alg.jacobi"));
        assert!(report.records.iter().any(|r| r.id == "alg.associativity"));
    }

    #[test]
    fn suite_records_sorted() {
        let report = run_algebra(&VerifyConfig::new(5));
        let mut sorted = report.records.clone();
        sorted.sort_by(|a, b| a.id.cmp(&b.id).then(a.params.cmp(&b.params)));
        for (a, b) in report.records.iter().zip(&sorted) {
            assert_eq!(a.id, b.id);
            assert_eq!(a.params, b.params);
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nonsense", &VerifyConfig::new(5)).is_none());
    }

    #[test]
    #[ignore = "exercised through the command-line acceptance run"]
    fn all_suites_rank_five_green() {
        for report in run_all(&VerifyConfig::new(5)) {
            assert_green(&report);
        }
    }

    #[test]
    fn mz_suite_rank_five_green() {
        let report = run_mz(&VerifyConfig::new(5));
        assert_green(&report);
        assert!(report.skipped() == 0, "no singular skips expected");
        assert!(report
            .errata
            .iter()
            .any(|e| e.id == "pin.corner-scalar"));
    }
}
