//! Permutations, matchings, subsets, and sign bookkeeping.
//!
//! All signs are computed by explicit inversion counting on concrete
//! sequences, so no orientation convention is left implicit.

use alloc::vec::Vec;

/// Parity sign of a sequence of distinct comparable items: `+1` if the
/// number of inversions is even, `-1` otherwise. `None` if two items
/// compare equal.
pub fn sort_sign<T: Ord>(seq: &[T]) -> Option<i64> {
    let mut inv = 0u64;
    for a in 0..seq.len() {
        for b in (a + 1)..seq.len() {
            match seq[a].cmp(&seq[b]) {
                core::cmp::Ordering::Greater => inv += 1,
                core::cmp::Ordering::Equal => return None,
                core::cmp::Ordering::Less => {}
            }
        }
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

/// Sign of the permutation `perm` of `{0,..,k-1}` (inversion parity).
pub fn permutation_sign(perm: &[usize]) -> i64 {
    sort_sign(perm).expect("permutation entries must be distinct")
}

/// Visit every permutation of `{0,..,k-1}` together with its sign.
///
/// Enumeration order is lexicographic; the sign is maintained
/// incrementally (picking the `t`-th smallest remaining element
/// contributes `t` inversions).
pub fn for_each_permutation<F: FnMut(&[usize], i64)>(k: usize, mut f: F) {
    let mut remaining: Vec<usize> = (0..k).collect();
    let mut prefix: Vec<usize> = Vec::with_capacity(k);
    fn rec<F: FnMut(&[usize], i64)>(
        remaining: &mut Vec<usize>,
        prefix: &mut Vec<usize>,
        sign: i64,
        f: &mut F,
    ) {
        if remaining.is_empty() {
            f(prefix, sign);
            return;
        }
        for t in 0..remaining.len() {
            let x = remaining.remove(t);
            prefix.push(x);
            let flip = if t % 2 == 0 { 1 } else { -1 };
            rec(remaining, prefix, sign * flip, f);
            prefix.pop();
            remaining.insert(t, x);
        }
    }
    rec(&mut remaining, &mut prefix, 1, &mut f);
}

/// Visit every perfect matching of `{0,..,k-1}` (k even) as a pair list
/// `[(a_1,b_1),..,(a_m,b_m)]` with `a_t < b_t` and `a_1 < a_2 < ..`,
/// together with the inversion sign of the flattened sequence.
pub fn for_each_matching<F: FnMut(&[(usize, usize)], i64)>(k: usize, mut f: F) {
    assert!(k % 2 == 0, "matchings need an even ground set");
    let mut used = alloc::vec![false; k];
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(k / 2);
    fn rec<F: FnMut(&[(usize, usize)], i64)>(
        used: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        f: &mut F,
    ) {
        let a = match used.iter().position(|u| !u) {
            None => {
                let flat: Vec<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
                f(pairs, permutation_sign(&flat));
                return;
            }
            Some(a) => a,
        };
        used[a] = true;
        for b in (a + 1)..used.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push((a, b));
            rec(used, pairs, f);
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
    }
    rec(&mut used, &mut pairs, &mut f);
}

/// All size-`k` subsets of `items`, each in the original order, enumerated
/// lexicographically by position.
pub fn subsets_of_size<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        // advance the index combination
        let n = items.len();
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] + 1 <= n - (k - pos) {
                idx[pos] += 1;
                for later in (pos + 1)..k {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sort_sign_basics() {
        assert_eq!(sort_sign(&[1, 2, 3]), Some(1));
        assert_eq!(sort_sign(&[2, 1, 3]), Some(-1));
        assert_eq!(sort_sign(&[3, 2, 1]), Some(-1));
        assert_eq!(sort_sign(&[1, 1]), None);
        assert_eq!(sort_sign::<i32>(&[]), Some(1));
    }

    #[test]
    fn permutation_enumeration() {
        let mut count = 0;
        let mut sign_sum = 0i64;
        for_each_permutation(4, |perm, sign| {
            count += 1;
            assert_eq!(sign, permutation_sign(perm));
            sign_sum += sign;
        });
        assert_eq!(count, 24);
        assert_eq!(sign_sum, 0);
    }

    #[test]
    fn matching_enumeration() {
        let mut count = 0;
        for_each_matching(6, |pairs, _| {
            assert_eq!(pairs.len(), 3);
            count += 1;
        });
        // 5!! = 15 perfect matchings on six points
        assert_eq!(count, 15);
    }

    #[test]
    fn subset_enumeration() {
        let s = subsets_of_size(&[1, 2, 3, 4], 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s[0], alloc::vec![1, 2]);
        assert_eq!(s[5], alloc::vec![3, 4]);
        assert_eq!(subsets_of_size(&[1, 2], 0).len(), 1);
        assert_eq!(subsets_of_size(&[1, 2], 3).len(), 0);
    }
}
