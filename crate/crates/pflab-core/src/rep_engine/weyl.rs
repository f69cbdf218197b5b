//! Dimension oracle for irreducible odd-orthogonal modules, plus the
//! dictionary between partition labels and lowest-weight-style labels.
//!
//! The oracle is an independent closed formula (a product over positive
//! roots), used to cross-check dimensions produced by the linear-algebra
//! construction path.

use alloc::vec::Vec;

use crate::rat::{rfrac, rint, Rat, Weight};
use num_traits::{One, Signed};

/// Dimension of the irreducible module of `so(2n+1)` with partition
/// label `lambda` (weakly decreasing nonnegative integers, at most `n`
/// parts).
pub fn weyl_dim_odd_orthogonal(n: usize, lambda: &[i64]) -> Rat {
    assert!(lambda.len() <= n, "too many parts");
    assert!(
        lambda.windows(2).all(|w| w[0] >= w[1]) && lambda.iter().all(|&p| p >= 0),
        "label must be a partition"
    );
    let mut parts = alloc::vec![0i64; n];
    parts[..lambda.len()].copy_from_slice(lambda);
    // shifted coordinates l_i = λ_i + (n - i) + 1/2 (1-based i), in units
    // of halves to stay integral: L_i = 2λ_i + 2(n - i) + 1
    let l: Vec<i64> = (0..n).map(|i| 2 * parts[i] + 2 * (n - 1 - i) as i64 + 1).collect();
    let r: Vec<i64> = (0..n).map(|i| 2 * (n - 1 - i) as i64 + 1).collect();
    let mut num = Rat::one();
    let mut den = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= rint(l[i] * l[i] - l[j] * l[j]);
            den *= rint(r[i] * r[i] - r[j] * r[j]);
        }
        num *= rint(l[i]);
        den *= rint(r[i]);
    }
    let dim = num / den;
    assert!(dim.is_integer() && dim.is_positive(), "dimension oracle must be a positive integer");
    dim
}

/// Convert a nonpositive lowest-weight-style label `(μ_1,..,μ_n)` with
/// `0 >= μ_1 >= .. >= μ_n` into the partition `(-μ_n, .., -μ_1)` used by
/// the dimension oracle.
pub fn partition_from_label(mu: &[Rat]) -> Vec<i64> {
    let mut out: Vec<i64> = mu
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "label entries must be integers");
            let v = c.to_integer();
            use num_traits::ToPrimitive;
            -v.to_i64().expect("label entry fits in 64 bits")
        })
        .collect();
    out.reverse();
    assert!(
        out.windows(2).all(|w| w[0] >= w[1]) && out.iter().all(|&p| p >= 0),
        "label must be nonpositive and weakly decreasing"
    );
    out
}

/// Lowest-weight-style label for a partition: `μ_i = -λ_{n+1-i}` padded
/// with zeros.
pub fn label_from_partition(n: usize, lambda: &[i64]) -> Weight {
    let mut parts = alloc::vec![0i64; n];
    parts[..lambda.len()].copy_from_slice(lambda);
    (0..n).map(|i| rint(-parts[n - 1 - i])).collect()
}

/// Half-integer helper for spots where the oracle needs `1/2` steps.
pub fn half(k: i64) -> Rat {
    rfrac(k, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_dimensions_rank_two() {
        assert_eq!(weyl_dim_odd_orthogonal(2, &[]), rint(1));
        assert_eq!(weyl_dim_odd_orthogonal(2, &[1]), rint(5));
        assert_eq!(weyl_dim_odd_orthogonal(2, &[1, 1]), rint(10));
        assert_eq!(weyl_dim_odd_orthogonal(2, &[2]), rint(14));
        assert_eq!(weyl_dim_odd_orthogonal(2, &[2, 1]), rint(35));
        assert_eq!(weyl_dim_odd_orthogonal(2, &[2, 2]), rint(35));
    }

    #[test]
    fn known_dimensions_rank_three() {
        assert_eq!(weyl_dim_odd_orthogonal(3, &[1]), rint(7));
        assert_eq!(weyl_dim_odd_orthogonal(3, &[1, 1]), rint(21));
        assert_eq!(weyl_dim_odd_orthogonal(3, &[2]), rint(27));
    }

    #[test]
    fn label_dictionary_roundtrip() {
        let lbl = label_from_partition(2, &[2, 1]);
        assert_eq!(lbl, alloc::vec![rint(-1), rint(-2)]);
        assert_eq!(partition_from_label(&lbl), alloc::vec![2, 1]);
        let lbl1 = label_from_partition(2, &[1]);
        assert_eq!(lbl1, alloc::vec![rint(0), rint(-1)]);
    }
}
