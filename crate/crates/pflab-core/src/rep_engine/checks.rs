//! Module-level identity checks: homomorphism and dimension invariants,
//! weight shifts, annihilation laws, closed-form tensor actions, and the
//! tableau action procedure.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::{for_each_permutation, sort_sign, subsets_of_size};
use crate::pfaffian::{capelli, pf_f, pf_hat, IndexSubset};
use crate::rat::{rint, rzero, Weight};
use crate::report::{CheckRecord, Status};
use crate::uea_core::Uea;

use super::linalg::{SMat, SVec};
use super::rep::{all_highest_spaces, RepModule};
use super::tensor::{
    tableau_vector, tensor_power_module, TensorModuleBundle, TensorSpace,
};
use super::weyl::weyl_dim_odd_orthogonal;

fn record(id: &str, anchor: &str, params: String, ok: bool, witness: String) -> CheckRecord {
    CheckRecord {
        id: String::from(id),
        anchor: String::from(anchor),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        witness: if ok { String::new() } else { witness },
    }
}

fn parity_sign(x: i32) -> i64 {
    if x.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn fmt_svec_short(v: &SVec) -> String {
    let mut s = String::new();
    for (count, (idx, c)) in v.iter().enumerate() {
        if count >= 6 {
            s.push_str(" ...");
            break;
        }
        s.push_str(&format!(" {}@{}", c, idx));
    }
    if s.is_empty() {
        s.push_str(" 0");
    }
    s
}

/// Generator matrices satisfy every bracket relation.
pub fn check_module_hom(u: &Uea, module: &RepModule) -> CheckRecord {
    let res = module.hom_check(u);
    record(
        "rep.homomorphism",
        "generator matrices respect all bracket relations",
        format!("module={}", module.label()),
        res.is_ok(),
        res.err().unwrap_or_default(),
    )
}

/// Constructed dimension equals the closed-formula dimension.
pub fn check_dim_oracle(module: &RepModule, partition: &[i64]) -> CheckRecord {
    let n = module.rank().n() as usize;
    let expect = weyl_dim_odd_orthogonal(n, partition);
    let ok = expect == rint(module.dim() as i64);
    record(
        "rep.dim-oracle",
        "module dimension matches the closed product formula",
        format!("module={} partition={:?}", module.label(), partition),
        ok,
        format!("constructed dim {} vs formula {}", module.dim(), expect),
    )
}

/// The degree-two central sum acts as a scalar.
pub fn check_central_scalar(u: &Uea, module: &RepModule) -> CheckRecord {
    let c = capelli(u, 2).expect("even size");
    let mat = module.elem_matrix(&c);
    let scalar = mat.get(0, 0);
    let mut ident = SMat::identity(module.dim());
    ident = ident.scale(&scalar);
    let ok = mat == ident;
    record(
        "rep.central-scalar",
        "degree-two central sum acts by a scalar",
        format!("module={}", module.label()),
        ok,
        format!("matrix is not scalar; corner value {}", scalar),
    )
}

/// Matrix of `PfF_I` maps each weight space into the expected shifted
/// weight space.
pub fn check_weight_shift(u: &Uea, module: &RepModule, set: &IndexSubset) -> CheckRecord {
    let n = module.rank().n() as usize;
    let pf = pf_f(u, set).expect("even subset");
    let mat = module.elem_matrix(&pf);
    let mut shift = alloc::vec![rzero(); n];
    for &i in set.elements() {
        if i > 0 {
            let s = (i - 1) as usize;
            shift[s] = shift[s].clone() - rint(1);
        } else if i < 0 {
            let s = (-i - 1) as usize;
            shift[s] = shift[s].clone() + rint(1);
        }
    }
    let mut ok = true;
    let mut witness = String::new();
    'outer: for j in 0..module.dim() {
        let src = module.weight_of(j);
        let expect: Weight = src
            .iter()
            .zip(&shift)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        for (r, _) in mat.col(j).iter() {
            if module.weight_of(r) != &expect {
                ok = false;
                witness = format!(
                    "column {} hits row {} of weight {:?}, expected shift to {:?}",
                    j,
                    r,
                    module.weight_of(r),
                    expect
                );
                break 'outer;
            }
        }
    }
    record(
        "rep.weight-shift",
        "PfF_I shifts weights by minus the signed index sum",
        format!("module={} I={}", module.label(), set),
        ok,
        witness,
    )
}

/// Matrix form of the index-raising commutator law for omitted-index
/// Pfaffians.
pub fn check_hat_bracket_matrix(
    u: &Uea,
    module: &RepModule,
    i: i32,
    j: i32,
) -> Vec<CheckRecord> {
    let n = module.rank().n();
    assert!(i >= 1 && j >= 1 && i <= n && j <= n && i != j);
    let sign = parity_sign(i + j);
    let f_mat = module.gen_mat(i, -j);
    let mut out = Vec::new();

    let raise_lhs = module
        .elem_matrix(&pf_hat(u, -i).expect("hat"))
        .commutator(&f_mat);
    let raise_rhs = module
        .elem_matrix(&pf_hat(u, j).expect("hat"))
        .scale(&rint(sign));
    out.push(record(
        "rep.hat-bracket-matrix-raise",
        "bracket with F_{i,-j} maps hat(-i) Pfaffian to signed hat(j) Pfaffian",
        format!("module={} i={} j={}", module.label(), i, j),
        raise_lhs == raise_rhs,
        String::from("matrix commutator differs from signed Pfaffian matrix"),
    ));

    let lower_lhs = module
        .elem_matrix(&pf_hat(u, -j).expect("hat"))
        .commutator(&f_mat);
    let lower_rhs = module
        .elem_matrix(&pf_hat(u, i).expect("hat"))
        .scale(&rint(-sign));
    out.push(record(
        "rep.hat-bracket-matrix-lower",
        "bracket with F_{i,-j} maps hat(-j) Pfaffian to signed hat(i) Pfaffian",
        format!("module={} i={} j={}", module.label(), i, j),
        lower_lhs == lower_rhs,
        String::from("matrix commutator differs from signed Pfaffian matrix"),
    ));
    out
}

/// Matrix of an omitted-extreme-index Pfaffian commutes with every
/// interior generator matrix.
pub fn check_hat_interior_matrix(u: &Uea, module: &RepModule, which: i32) -> CheckRecord {
    let n = module.rank().n();
    assert!(which == n || which == -n);
    let pf_mat = module.elem_matrix(&pf_hat(u, which).expect("hat"));
    let mut ok = true;
    let mut witness = String::new();
    for g in crate::uea_core::canonical_generators(module.rank()) {
        if g.i().abs() >= n || g.j().abs() >= n {
            continue;
        }
        let gm = module.canonical_gen_mat(g);
        let comm = pf_mat.commutator(gm);
        if !comm.is_zero() {
            ok = false;
            witness = format!("does not commute with F[{},{}]", g.i(), g.j());
            break;
        }
    }
    record(
        "rep.hat-interior-matrix",
        "omitted-extreme-index Pfaffian matrix commutes with interior generators",
        format!("module={} hat={}", module.label(), which),
        ok,
        witness,
    )
}

/// Every Pfaffian over a subset of the given size acts as zero on the
/// module.
pub fn check_annihilation(u: &Uea, module: &RepModule, size: usize) -> CheckRecord {
    let indices = module.rank().indices();
    let mut ok = true;
    let mut witness = String::new();
    for subset in subsets_of_size(&indices, size) {
        let set = IndexSubset::new(module.rank(), &subset).expect("valid subset");
        let pf = pf_f(u, &set).expect("even subset");
        let mat = module.elem_matrix(&pf);
        if !mat.is_zero() {
            ok = false;
            witness = format!("PfF_{} acts nontrivially", set);
            break;
        }
    }
    record(
        "rep.annihilation",
        "all Pfaffians of this size act as zero",
        format!("module={} |I|={}", module.label(), size),
        ok,
        witness,
    )
}

/// Omitted-extreme-index Pfaffians map each relative highest space into
/// relative highest vectors with the same interior weight.
pub fn check_hat_preserves_highest(u: &Uea, module: &RepModule) -> Vec<CheckRecord> {
    let n = module.rank().n();
    let spaces = all_highest_spaces(module);
    let interior_pos = module.interior_positive_gens();
    let mut out = Vec::new();
    for which in [n, -n] {
        let pf_mat = module.elem_matrix(&pf_hat(u, which).expect("hat"));
        let mut ok = true;
        let mut witness = String::new();
        'outer: for hs in &spaces {
            for b in &hs.basis {
                let img = pf_mat.apply(b);
                if img.is_zero() {
                    continue;
                }
                for g in &interior_pos {
                    let killed = module.canonical_gen_mat(*g).apply(&img);
                    if !killed.is_zero() {
                        ok = false;
                        witness = format!(
                            "image from mu={:?} not killed by F[{},{}]",
                            hs.mu, g.i(), g.j()
                        );
                        break 'outer;
                    }
                }
                match module.weight_of_vector(&img) {
                    Some(w) => {
                        if w[..(n as usize - 1)] != hs.mu[..] {
                            ok = false;
                            witness = format!(
                                "interior weight changed: mu={:?} image weight={:?}",
                                hs.mu, w
                            );
                            break 'outer;
                        }
                    }
                    None => {
                        ok = false;
                        witness = format!("image from mu={:?} not a weight vector", hs.mu);
                        break 'outer;
                    }
                }
            }
        }
        out.push(record(
            "rep.hat-preserves-highest",
            "omitted-extreme-index Pfaffian preserves relative highest spaces and interior weights",
            format!("module={} hat={}", module.label(), which),
            ok,
            witness,
        ));
    }
    out
}

/// Relative highest spaces account for the whole module: the sum of
/// `dim V_mu^+` times the interior-module dimension formula equals the
/// module dimension.
pub fn check_branching_completeness(module: &RepModule) -> CheckRecord {
    let n = module.rank().n() as usize;
    let spaces = all_highest_spaces(module);
    let mut total = rzero();
    let mut bad: Option<String> = None;
    for hs in &spaces {
        let mut parts: Vec<i64> = Vec::new();
        let mut valid = true;
        for c in hs.mu.iter().rev() {
            if !c.is_integer() {
                valid = false;
                break;
            }
            use num_traits::ToPrimitive;
            let v = -c.to_integer().to_i64().unwrap_or(i64::MIN);
            parts.push(v);
        }
        if !valid
            || parts.iter().any(|&p| p < 0)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            bad = Some(format!("label {:?} is not a valid partition label", hs.mu));
            break;
        }
        total = total + rint(hs.basis.len() as i64) * weyl_dim_odd_orthogonal(n - 1, &parts);
    }
    let (ok, witness) = match bad {
        Some(w) => (false, w),
        None => {
            let ok = total == rint(module.dim() as i64);
            (
                ok,
                format!("sum {} vs module dim {}", total, module.dim()),
            )
        }
    };
    record(
        "rep.branching-completeness",
        "highest-space dimensions weighted by interior dimensions add up to the module dimension",
        format!("module={}", module.label()),
        ok,
        witness,
    )
}

/// A Pfaffian over `2t` indices acts as zero on tensor powers with fewer
/// than `t` factors.
pub fn check_short_tensor_vanishing(u: &Uea, set: &IndexSubset, factors: usize) -> CheckRecord {
    assert!(2 * factors < set.len());
    let (module, _) = tensor_power_module(u.rank(), factors);
    let pf = pf_f(u, set).expect("even subset");
    let mat = module.elem_matrix(&pf);
    record(
        "app.short-tensor-vanishing",
        "Pfaffian acts as zero on tensor powers with fewer factors than half its size",
        format!("N={} I={} factors={}", u.rank().big_n(), set, factors),
        mat.is_zero(),
        String::from("matrix is nonzero"),
    )
}

/// Closed-form replacement terms for a Pfaffian over `2t` indices applied
/// to `t` chosen entries, without the empirical overall sign: a list of
/// `(replacement entries, coefficient)`. Empty when the entries repeat or
/// leave the index set.
pub fn half_block_terms(set: &IndexSubset, entries: &[i32]) -> Vec<(Vec<i32>, i64)> {
    let t = entries.len();
    assert_eq!(set.len(), 2 * t);
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Vec::new();
    }
    if entries.iter().any(|e| !set.contains(*e)) {
        return Vec::new();
    }
    let comp: Vec<i32> = set
        .elements()
        .iter()
        .copied()
        .filter(|x| !entries.contains(x))
        .collect();
    // sign of the permutation arranging the sorted index set with the
    // complement at odd (first, third, ...) slots and the chosen entries
    // at even slots
    let mut seq = Vec::with_capacity(2 * t);
    for a in 0..t {
        seq.push(comp[a]);
        seq.push(entries[a]);
    }
    let gamma = sort_sign(&seq).expect("distinct indices");
    let k = 2 * t;
    let tri_sign = if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let scale = gamma * tri_sign;
    let mut out = Vec::new();
    for_each_permutation(t, |perm, sign| {
        let repl: Vec<i32> = perm.iter().map(|&p| -comp[p]).collect();
        out.push((repl, scale * sign));
    });
    out
}

/// Compare the direct action of a Pfaffian on the half-size tensor power
/// with the printed closed form, fitting the overall sign. Returns the
/// record and the fitted sign (when any instance was nonzero).
pub fn fit_half_tensor_sign(
    u: &Uea,
    set: &IndexSubset,
    module: &RepModule,
    space: &TensorSpace,
    prior: Option<i64>,
) -> (CheckRecord, Option<i64>) {
    let t = set.len() / 2;
    assert_eq!(space.factors(), t);
    let pf = pf_f(u, set).expect("even subset");
    let mut fitted = prior;
    let mut ok = true;
    let mut witness = String::new();
    for e in 0..space.dim() {
        let entries = space.entries_of(e);
        let direct = module.act(&pf, &SVec::unit(space.dim(), e));
        let mut printed = SVec::zero(space.dim());
        for (repl, c) in half_block_terms(set, &entries) {
            printed.add_at(space.elementary(&repl), rint(c));
        }
        if printed.is_zero() {
            if !direct.is_zero() {
                ok = false;
                witness = format!(
                    "entries {:?}: closed form vanishes, direct action gives{}",
                    entries,
                    fmt_svec_short(&direct)
                );
                break;
            }
            continue;
        }
        if direct.is_zero() {
            ok = false;
            witness = format!("entries {:?}: direct action vanishes, closed form does not", entries);
            break;
        }
        let eps = match fitted {
            Some(s) => s,
            None => {
                let plus = direct.sub(&printed).is_zero();
                let minus = {
                    let mut neg = printed.clone();
                    neg = neg.scale(&rint(-1));
                    direct.sub(&neg).is_zero()
                };
                let s = if plus {
                    1
                } else if minus {
                    -1
                } else {
                    ok = false;
                    witness = format!(
                        "entries {:?}: direct{} is not plus-or-minus the closed form{}",
                        entries,
                        fmt_svec_short(&direct),
                        fmt_svec_short(&printed)
                    );
                    break;
                };
                fitted = Some(s);
                s
            }
        };
        let scaled = printed.scale(&rint(eps));
        if !direct.sub(&scaled).is_zero() {
            ok = false;
            witness = format!(
                "entries {:?}: direct{} differs from {} times closed form{}",
                entries,
                fmt_svec_short(&direct),
                eps,
                fmt_svec_short(&scaled)
            );
            break;
        }
    }
    (
        record(
            "app.half-tensor-closed-form",
            "Pfaffian action on the half-size tensor power matches the alternating closed form up to one overall sign per size",
            format!("N={} I={}", u.rank().big_n(), set),
            ok,
            witness,
        ),
        fitted,
    )
}

/// Direct action on a longer tensor power equals the sum of closed-form
/// blocks over all half-size place subsets, with untouched places riding
/// along and no extra sign between blocks.
pub fn check_place_subset_expansion(
    u: &Uea,
    set: &IndexSubset,
    module: &RepModule,
    space: &TensorSpace,
    eps: i64,
) -> CheckRecord {
    let t = set.len() / 2;
    let f = space.factors();
    assert!(t <= f);
    let pf = pf_f(u, set).expect("even subset");
    let places: Vec<usize> = (0..f).collect();
    let place_subsets = subsets_of_size(&places, t);
    let mut ok = true;
    let mut witness = String::new();
    for e in 0..space.dim() {
        let entries = space.entries_of(e);
        let direct = module.act(&pf, &SVec::unit(space.dim(), e));
        let mut expected = SVec::zero(space.dim());
        for s in &place_subsets {
            let chosen: Vec<i32> = s.iter().map(|&p| entries[p]).collect();
            for (repl, c) in half_block_terms(set, &chosen) {
                let mut ne = entries.clone();
                for (slot, &p) in s.iter().enumerate() {
                    ne[p] = repl[slot];
                }
                expected.add_at(space.elementary(&ne), rint(c * eps));
            }
        }
        if !direct.sub(&expected).is_zero() {
            ok = false;
            witness = format!(
                "entries {:?}: direct{} vs place-sum{}",
                entries,
                fmt_svec_short(&direct),
                fmt_svec_short(&expected)
            );
            break;
        }
    }
    record(
        "app.place-subset-expansion",
        "Pfaffian action on longer tensor powers is the sum of closed-form blocks over half-size place subsets",
        format!("N={} I={} factors={}", u.rank().big_n(), set, f),
        ok,
        witness,
    )
}

/// The three-step tableau procedure (choose places, alternate negated
/// complement replacements, scale) reproduces the direct Pfaffian action
/// on every tableau vector of the bundle's shape.
pub fn check_tableau_action(
    u: &Uea,
    bundle: &TensorModuleBundle,
    set: &IndexSubset,
    eps: i64,
) -> CheckRecord {
    let space = &bundle.space;
    let m = space.factors();
    let t = set.len() / 2;
    assert!(t <= m);
    let (power, _) = tensor_power_module(u.rank(), m);
    let pf = pf_f(u, set).expect("even subset");
    let places: Vec<usize> = (0..m).collect();
    let place_subsets = subsets_of_size(&places, t);
    let mut cache: alloc::collections::BTreeMap<Vec<i32>, SVec> = alloc::collections::BTreeMap::new();
    let range = u.rank().indices();
    let mut ok = true;
    let mut witness = String::new();
    let mut filling = alloc::vec![0usize; m];
    'outer: loop {
        let entries: Vec<i32> = filling.iter().map(|&d| range[d]).collect();
        let v_t = cache
            .entry(entries.clone())
            .or_insert_with(|| tableau_vector(space, &bundle.ctx, &bundle.shape, &entries))
            .clone();
        let direct = power.act(&pf, &v_t);
        let mut predicted = SVec::zero(space.dim());
        for s in &place_subsets {
            let chosen: Vec<i32> = s.iter().map(|&p| entries[p]).collect();
            for (repl, c) in half_block_terms(set, &chosen) {
                let mut ne = entries.clone();
                for (slot, &p) in s.iter().enumerate() {
                    ne[p] = repl[slot];
                }
                let v_new = cache
                    .entry(ne.clone())
                    .or_insert_with(|| {
                        tableau_vector(space, &bundle.ctx, &bundle.shape, &ne)
                    })
                    .clone();
                predicted.add_scaled(&v_new, &rint(c * eps));
            }
        }
        if !direct.sub(&predicted).is_zero() {
            ok = false;
            witness = format!(
                "filling {:?}: direct{} vs procedure{}",
                entries,
                fmt_svec_short(&direct),
                fmt_svec_short(&predicted)
            );
            break 'outer;
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            filling[pos] += 1;
            if filling[pos] < range.len() {
                break;
            }
            filling[pos] = 0;
        }
    }
    record(
        "app.tableau-action",
        "three-step tableau replacement procedure equals the direct Pfaffian action",
        format!(
            "N={} shape={} I={}",
            u.rank().big_n(),
            bundle.shape.render(),
            set
        ),
        ok,
        witness,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_engine::rep::standard_module;
    use crate::rep_engine::tensor::tensor_module;
    use crate::rep_engine::tensor::YoungShape;
    use crate::uea_core::AlgebraRank;

    fn setup() -> (Uea, RepModule) {
        let rank = AlgebraRank::new(5).unwrap();
        (Uea::new(rank), standard_module(rank))
    }

    #[test]
    fn standard_module_invariants() {
        let (u, m) = setup();
        assert_eq!(check_module_hom(&u, &m).status, Status::Pass);
        assert_eq!(check_dim_oracle(&m, &[1]).status, Status::Pass);
        assert_eq!(check_central_scalar(&u, &m).status, Status::Pass);
        assert_eq!(check_branching_completeness(&m).status, Status::Pass);
    }

    #[test]
    fn standard_annihilation_and_shift() {
        let (u, m) = setup();
        assert_eq!(check_annihilation(&u, &m, 4).status, Status::Pass);
        let set = IndexSubset::new(m.rank(), &[-1, 2]).unwrap();
        assert_eq!(check_weight_shift(&u, &m, &set).status, Status::Pass);
    }

    #[test]
    fn hat_matrix_identities() {
        let (u, m) = setup();
        for r in check_hat_bracket_matrix(&u, &m, 1, 2) {
            assert_eq!(r.status, Status::Pass, "{} {}", r.id, r.witness);
        }
        assert_eq!(check_hat_interior_matrix(&u, &m, 2).status, Status::Pass);
        assert_eq!(check_hat_interior_matrix(&u, &m, -2).status, Status::Pass);
    }

    #[test]
    fn hat_preserves_highest_on_standard() {
        let (u, m) = setup();
        for r in check_hat_preserves_highest(&u, &m) {
            assert_eq!(r.status, Status::Pass, "{} {}", r.id, r.witness);
        }
    }

    #[test]
    fn half_tensor_sign_is_minus_for_pairs() {
        let (u, _) = setup();
        let (module, space) = tensor_power_module(u.rank(), 1);
        let mut fitted = None;
        for pair in subsets_of_size(&u.rank().indices(), 2) {
            let set = IndexSubset::new(u.rank(), &pair).unwrap();
            let (rec, f) = fit_half_tensor_sign(&u, &set, &module, &space, fitted);
            assert_eq!(rec.status, Status::Pass, "{} {}", rec.params, rec.witness);
            fitted = f;
        }
        assert_eq!(fitted, Some(-1));
    }

    #[test]
    fn short_vanishing_smallest_case() {
        let (u, _) = setup();
        let set = IndexSubset::new(u.rank(), &[-2, -1, 1, 2]).unwrap();
        assert_eq!(
            check_short_tensor_vanishing(&u, &set, 1).status,
            Status::Pass
        );
    }

    #[test]
    fn tableau_action_one_instance() {
        let (u, _) = setup();
        let bundle = tensor_module(u.rank(), &YoungShape::new(&[1, 1]).unwrap()).unwrap();
        // fit the size-four sign first on the half tensor power
        let (module2, space2) = tensor_power_module(u.rank(), 2);
        let set = IndexSubset::new(u.rank(), &[-2, -1, 1, 2]).unwrap();
        let (rec, fitted) = fit_half_tensor_sign(&u, &set, &module2, &space2, None);
        assert_eq!(rec.status, Status::Pass, "{}", rec.witness);
        let eps = fitted.expect("nonzero instance exists");
        assert_eq!(eps, 1, "expected plus one for size four");
        let r = check_tableau_action(&u, &bundle, &set, eps);
        assert_eq!(r.status, Status::Pass, "{}", r.witness);
    }
}
