//! Exact PBW-equality checks for the Pfaffian commutator and summation
//! identities.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::sort_sign;
use crate::rat::{factorial, rfrac, rint, Rat};
use crate::report::{CheckRecord, Status};
use crate::uea_core::{TensorUeaElement, Uea, UeaElement};

use super::construct::{pf_f, pf_hat, pf_seq, short_render};
use super::subset::{even_splits, splits_of_size, IndexSubset};

const WITNESS_LIMIT: usize = 240;

fn record(id: &str, anchor: &str, params: String, ok: bool, diff_witness: String) -> CheckRecord {
    CheckRecord {
        id: String::from(id),
        anchor: String::from(anchor),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        witness: if ok { String::new() } else { diff_witness },
    }
}

fn equality_record(
    id: &str,
    anchor: &str,
    params: String,
    lhs: &UeaElement,
    rhs: &UeaElement,
) -> CheckRecord {
    let diff = lhs.sub(rhs);
    let ok = diff.is_zero();
    record(
        id,
        anchor,
        params,
        ok,
        format!("lhs-rhs = {}", short_render(&diff, WITNESS_LIMIT)),
    )
}

fn parity_sign(x: i32) -> i64 {
    if x.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Four-case replacement rule for `[PfF_I, F_{j1,-j2}]`:
/// no membership -> 0; `j1` in `I` -> `PfF` with `j1` replaced by `-j2`;
/// `j2` in `I` -> minus `PfF` with `j2` replaced by `-j1`; both -> the sum.
pub fn check_commutator_lemma(
    u: &Uea,
    i_set: &IndexSubset,
    j1: i32,
    j2: i32,
) -> CheckRecord {
    assert!(j1 != j2, "generator F_(j1,-j2) degenerates when j1 = j2");
    let pf = pf_f(u, i_set).expect("valid even subset");
    let g = u.gen_elem(j1, -j2).expect("indices in range");
    let lhs = u.commutator(&pf, &g);
    let in1 = i_set.contains(j1);
    let in2 = i_set.contains(j2);
    let mut rhs = UeaElement::zero();
    if in1 {
        rhs = rhs.add(&pf_seq(u, &i_set.replaced(j1, -j2)).expect("range"));
    }
    if in2 {
        rhs = rhs.sub(&pf_seq(u, &i_set.replaced(j2, -j1)).expect("range"));
    }
    let case = match (in1, in2) {
        (false, false) => 1,
        (true, false) => 2,
        (false, true) => 3,
        (true, true) => 4,
    };
    equality_record(
        "pf.commutator-rule",
        "bracket of PfF_I with F_(j1,-j2) equals the signed index-replacement combination",
        format!(
            "N={} I={} j1={} j2={} case={}",
            u.rank().big_n(),
            i_set,
            j1,
            j2,
            case
        ),
        &lhs,
        &rhs,
    )
}

/// Hat-Pfaffian consequences of the replacement rule for a fixed pair
/// `i != j`: the two nonzero brackets and the vanishing of all others.
/// The vanishing statement is checked for every spectator index `k` with
/// `k` outside `{i,-i,j,-j}`; the printed hypothesis `k != i,j` alone is
/// inconsistent with the nonzero cases, so the closed reading is used.
pub fn check_commutator_corollary(u: &Uea, i: i32, j: i32) -> Vec<CheckRecord> {
    assert!(i != j);
    let n = u.rank().n();
    let g = u.gen_elem(i, -j).expect("range");
    let sign = parity_sign(i + j);
    let mut out = Vec::new();

    let lhs1 = u.commutator(&pf_hat(u, -i).expect("range"), &g);
    let rhs1 = pf_hat(u, j).expect("range").scale(&rint(sign));
    out.push(equality_record(
        "pf.hat-bracket-raise",
        "bracket of the hat-Pfaffian at -i with F_(i,-j) is the parity-signed hat-Pfaffian at j",
        format!("N={} i={} j={}", u.rank().big_n(), i, j),
        &lhs1,
        &rhs1,
    ));

    let lhs2 = u.commutator(&pf_hat(u, -j).expect("range"), &g);
    let rhs2 = pf_hat(u, i).expect("range").scale(&rint(-sign));
    out.push(equality_record(
        "pf.hat-bracket-lower",
        "bracket of the hat-Pfaffian at -j with F_(i,-j) is minus the parity-signed hat-Pfaffian at i",
        format!("N={} i={} j={}", u.rank().big_n(), i, j),
        &lhs2,
        &rhs2,
    ));

    let mut ok = true;
    let mut witness = String::new();
    for k in -n..=n {
        if k == i || k == -i || k == j || k == -j {
            continue;
        }
        let lhs = u.commutator(&pf_hat(u, k).expect("range"), &g);
        if !lhs.is_zero() {
            ok = false;
            witness = format!("k={} gives {}", k, short_render(&lhs, WITNESS_LIMIT));
            break;
        }
    }
    out.push(record(
        "pf.hat-bracket-spectator",
        "hat-Pfaffians at spectator indices commute with F_(i,-j)",
        format!("N={} i={} j={}", u.rank().big_n(), i, j),
        ok,
        witness,
    ));
    out
}

/// The hat-Pfaffians at the extreme indices commute with every generator
/// of the interior subalgebra.
pub fn check_hat_interior_commute(u: &Uea, hat: i32) -> CheckRecord {
    let n = u.rank().n();
    assert!(hat == n || hat == -n);
    let pf = pf_hat(u, hat).expect("range");
    let mut ok = true;
    let mut witness = String::new();
    for g in u.generators() {
        if g.i().abs() >= n || g.j().abs() >= n {
            continue;
        }
        let c = u.commutator(&pf, &UeaElement::from_gen(g));
        if !c.is_zero() {
            ok = false;
            witness = format!("[pf,{}] = {}", g, short_render(&c, WITNESS_LIMIT));
            break;
        }
    }
    record(
        "pf.hat-interior-central",
        "extreme hat-Pfaffians commute with the interior subalgebra",
        format!("N={} hat={}", u.rank().big_n(), hat),
        ok,
        witness,
    )
}

fn split_prefactor(p: usize, q: usize) -> Rat {
    let k = p + q;
    factorial((p / 2) as u64) * factorial((q / 2) as u64) * factorial((k / 2) as u64).recip()
}

/// `PfF_I` as the prefactored sum over signed splits with fixed even
/// block sizes `(p, q)`.
pub fn check_split_identity(u: &Uea, i_set: &IndexSubset, p: usize, q: usize) -> CheckRecord {
    assert!(p % 2 == 0 && q % 2 == 0 && p + q == i_set.len());
    let lhs = pf_f(u, i_set).expect("valid subset");
    let mut rhs = UeaElement::zero();
    for sp in splits_of_size(i_set, p) {
        let a = pf_f(u, &sp.first).expect("valid");
        let b = pf_f(u, &sp.second).expect("valid");
        rhs.add_assign_scaled(&u.multiply(&a, &b), &rint(sp.sign));
    }
    let rhs = rhs.scale(&split_prefactor(p, q));
    equality_record(
        "pf.split-fixed",
        "PfF_I equals the prefactored signed sum over splits of fixed even sizes",
        format!("N={} I={} p={} q={}", u.rank().big_n(), i_set, p, q),
        &lhs,
        &rhs,
    )
}

/// `PfF_I` as the averaged signed sum over all even splits, with overall
/// factor `1/(k/2+1)`.
pub fn check_split_averaged(u: &Uea, i_set: &IndexSubset) -> CheckRecord {
    let k = i_set.len();
    let lhs = pf_f(u, i_set).expect("valid subset");
    let mut rhs = UeaElement::zero();
    for sp in even_splits(i_set) {
        let pre = split_prefactor(sp.first.len(), sp.second.len());
        let a = pf_f(u, &sp.first).expect("valid");
        let b = pf_f(u, &sp.second).expect("valid");
        rhs.add_assign_scaled(&u.multiply(&a, &b), &(pre * rint(sp.sign)));
    }
    let rhs = rhs.scale(&rfrac(1, (k / 2 + 1) as i64));
    equality_record(
        "pf.split-averaged",
        "PfF_I equals the averaged signed sum over all even splits",
        format!("N={} I={}", u.rank().big_n(), i_set),
        &lhs,
        &rhs,
    )
}

/// Expansion of `PfF_I` along `-n`: signed middle-factor sum
/// `Σ_i Σ_{splits} pre · sign(I', -n, i, I'') · PfF_{I'} F_{n,i} PfF_{I''}`.
pub fn check_minor_n_expansion(u: &Uea, i_set: &IndexSubset) -> CheckRecord {
    let n = u.rank().n();
    assert!(i_set.contains(-n), "expansion requires -n in I");
    let k = i_set.len();
    let lhs = pf_f(u, i_set).expect("valid subset");
    let mut rhs = UeaElement::zero();
    for &i in i_set.elements() {
        if i == -n {
            continue;
        }
        let core = i_set.without(-n).without(i);
        let fni = u.gen_elem(n, i).expect("range");
        let mut p = 0;
        while p <= core.len() {
            for sp in splits_of_size(&core, p) {
                let mut concat: Vec<i32> = sp.first.elements().to_vec();
                concat.push(-n);
                concat.push(i);
                concat.extend_from_slice(sp.second.elements());
                let sign = sort_sign(&concat).expect("distinct");
                let pre = split_prefactor(sp.first.len(), sp.second.len())
                    * factorial((core.len() / 2) as u64)
                    * factorial((k / 2) as u64).recip();
                let a = pf_f(u, &sp.first).expect("valid");
                let b = pf_f(u, &sp.second).expect("valid");
                let term = u.multiply(&u.multiply(&a, &fni), &b);
                rhs.add_assign_scaled(&term, &(pre * rint(sign)));
            }
            p += 2;
        }
    }
    equality_record(
        "pf.minor-expansion",
        "PfF_I expands along -n into signed split products with middle factor F_(n,i)",
        format!("N={} I={}", u.rank().big_n(), i_set),
        &lhs,
        &rhs,
    )
}

/// Coproduct of `PfF_I` as the signed sum of split Pfaffian tensors.
pub fn check_coproduct_lemma(u: &Uea, i_set: &IndexSubset) -> CheckRecord {
    let lhs = u.coproduct(&pf_f(u, i_set).expect("valid subset"));
    let mut rhs = TensorUeaElement::zero();
    for sp in even_splits(i_set) {
        let a = pf_f(u, &sp.first).expect("valid");
        let b = pf_f(u, &sp.second).expect("valid");
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                rhs.add_term(
                    ma.clone(),
                    mb.clone(),
                    ca.clone() * cb.clone() * rint(sp.sign),
                );
            }
        }
    }
    let diff = lhs.sub(&rhs);
    let ok = diff.is_zero();
    record(
        "pf.coproduct-splits",
        "coproduct of PfF_I is the signed sum of split Pfaffian tensors",
        format!("N={} I={}", u.rank().big_n(), i_set),
        ok,
        format!("tensor diff has {} terms", diff.num_terms()),
    )
}

/// Every PBW term of `PfF_I` carries the adjoint weight `-Σ_{i∈I} ε_i`.
pub fn check_pf_ad_weight(u: &Uea, i_set: &IndexSubset) -> CheckRecord {
    let n = u.rank().n() as usize;
    let mut expected = alloc::vec![0i64; n];
    for &i in i_set.elements() {
        crate::uea_core::add_unit(&mut expected, i, -1);
    }
    let pf = pf_f(u, i_set).expect("valid subset");
    let mut ok = true;
    let mut witness = String::new();
    for (m, _) in pf.terms() {
        if u.ad_weight(m) != expected {
            ok = false;
            witness = format!("term {} has weight {:?}", m, u.ad_weight(m));
            break;
        }
    }
    record(
        "pf.ad-weight",
        "every PBW term of PfF_I shifts weights by the negated index sum",
        format!("N={} I={}", u.rank().big_n(), i_set),
        ok,
        witness,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea_core::AlgebraRank;

    fn uea5() -> Uea {
        Uea::new(AlgebraRank::new(5).unwrap())
    }

    #[test]
    fn commutator_rule_spot_cases() {
        let u = uea5();
        // case 1: disjoint pair
        let i01 = IndexSubset::new(u.rank(), &[0, 1]).unwrap();
        assert_eq!(check_commutator_lemma(&u, &i01, 2, -2).status, Status::Pass);
        // case 4 on a hat set
        let hat_m2 = IndexSubset::hat(u.rank(), -2).unwrap();
        assert_eq!(check_commutator_lemma(&u, &hat_m2, 2, 1).status, Status::Pass);
    }

    #[test]
    fn corollary_spot_case() {
        let u = uea5();
        for r in check_commutator_corollary(&u, 2, 1) {
            assert_eq!(r.status, Status::Pass, "{} {}", r.id, r.witness);
        }
    }

    #[test]
    fn extreme_hats_commute_with_interior() {
        let u = uea5();
        for hat in [2, -2] {
            let r = check_hat_interior_commute(&u, hat);
            assert_eq!(r.status, Status::Pass, "{}", r.witness);
        }
    }

    #[test]
    fn split_identities_small() {
        let u = uea5();
        let i_set = IndexSubset::new(u.rank(), &[-2, -1, 0, 1]).unwrap();
        assert_eq!(check_split_identity(&u, &i_set, 2, 2).status, Status::Pass);
        assert_eq!(check_split_identity(&u, &i_set, 0, 4).status, Status::Pass);
        assert_eq!(check_split_averaged(&u, &i_set).status, Status::Pass);
    }

    #[test]
    fn minor_expansion_two_element() {
        let u = uea5();
        let i_set = IndexSubset::new(u.rank(), &[-2, 2]).unwrap();
        let r = check_minor_n_expansion(&u, &i_set);
        assert_eq!(r.status, Status::Pass, "{}", r.witness);
    }

    #[test]
    fn coproduct_two_element() {
        let u = uea5();
        let i_set = IndexSubset::new(u.rank(), &[-2, 0]).unwrap();
        assert_eq!(check_coproduct_lemma(&u, &i_set).status, Status::Pass);
    }

    #[test]
    fn ad_weight_on_hat_sets() {
        let u = uea5();
        for hat in [-2, -1, 0, 1, 2] {
            let i_set = IndexSubset::hat(u.rank(), hat).unwrap();
            assert_eq!(check_pf_ad_weight(&u, &i_set).status, Status::Pass);
        }
    }
}
