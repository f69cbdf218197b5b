//! Index bookkeeping: rank data and canonical generator pairs.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Errors raised by index-level constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainError {
    /// N must be at least 3.
    RankTooSmall(i32),
    /// Index outside `{-n,...,n}` (or 0 for even N).
    IndexOutOfRange { index: i32, big_n: i32 },
    /// Operation requires odd N.
    OddRankRequired(i32),
    /// Operation requires an even-cardinality index set.
    OddCardinality(usize),
    /// Subset elements must be strictly increasing and in range.
    BadSubset,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::RankTooSmall(n) => write!(f, "rank N={n} too small, need N >= 3"),
            DomainError::IndexOutOfRange { index, big_n } => {
                write!(f, "index {index} out of range for N={big_n}")
            }
            DomainError::OddRankRequired(n) => write!(f, "N={n} is even, odd rank required"),
            DomainError::OddCardinality(k) => write!(f, "index set has odd size {k}"),
            DomainError::BadSubset => write!(f, "subset must be strictly increasing and in range"),
        }
    }
}

/// Rank data for `o_N`: the index set is `{-n,...,n}` with `n = floor(N/2)`,
/// containing 0 iff N is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraRank {
    big_n: i32,
    half: i32,
}

impl AlgebraRank {
    pub fn new(big_n: i32) -> Result<Self, DomainError> {
        if big_n < 3 {
            return Err(DomainError::RankTooSmall(big_n));
        }
        Ok(AlgebraRank {
            big_n,
            half: big_n / 2,
        })
    }

    /// N itself.
    pub fn big_n(&self) -> i32 {
        self.big_n
    }

    /// n = floor(N/2): the number of positive indices.
    pub fn n(&self) -> i32 {
        self.half
    }

    pub fn is_odd(&self) -> bool {
        self.big_n % 2 == 1
    }

    pub fn contains(&self, i: i32) -> bool {
        if i == 0 {
            self.is_odd()
        } else {
            i.abs() <= self.half
        }
    }

    /// All indices in increasing order.
    pub fn indices(&self) -> Vec<i32> {
        let mut out = Vec::new();
        for i in -self.half..=self.half {
            if i == 0 && !self.is_odd() {
                continue;
            }
            out.push(i);
        }
        out
    }
}

/// Root/Cartan classification of a canonical generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenClass {
    /// i > j: lowering block (first in the PBW order).
    Negative,
    /// i = j != 0: Cartan block.
    Cartan,
    /// i < j: raising block (last in the PBW order).
    Positive,
}

/// A canonical nonzero generator pair: the lexicographically smaller of
/// `(i,j)` and `(-j,-i)`, never of the zero form `(i,-i)`.
///
/// The derived `Ord` is the PBW total order: lowering block, then Cartan,
/// then raising, lexicographic on `(i,j)` inside each block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenIndex {
    i: i32,
    j: i32,
}

impl GenIndex {
    pub fn i(&self) -> i32 {
        self.i
    }

    pub fn j(&self) -> i32 {
        self.j
    }

    pub fn class(&self) -> GenClass {
        match self.i.cmp(&self.j) {
            Ordering::Greater => GenClass::Negative,
            Ordering::Equal => GenClass::Cartan,
            Ordering::Less => GenClass::Positive,
        }
    }

    fn block_rank(&self) -> u8 {
        match self.class() {
            GenClass::Negative => 0,
            GenClass::Cartan => 1,
            GenClass::Positive => 2,
        }
    }

    /// The root attached to the generator, as integer coordinates on
    /// `(e_1,...,e_n)` with `e_{-r} = -e_r`, `e_0 = 0`.
    pub fn root(&self, n: i32) -> Vec<i64> {
        let mut w = alloc::vec![0i64; n as usize];
        add_unit(&mut w, self.i, 1);
        add_unit(&mut w, self.j, -1);
        w
    }
}

pub(crate) fn add_unit(w: &mut [i64], index: i32, scale: i64) {
    if index > 0 {
        w[(index - 1) as usize] += scale;
    } else if index < 0 {
        w[(-index - 1) as usize] -= scale;
    }
}

impl PartialOrd for GenIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GenIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.block_rank(), self.i, self.j).cmp(&(other.block_rank(), other.i, other.j))
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F[{},{}]", self.i, self.j)
    }
}

/// Outcome of mapping an arbitrary in-range pair onto the canonical set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canonical {
    /// `(i,-i)` pairs denote the zero element (forced by `F_ij = -F_{-j,-i}`).
    Zero,
    /// `sign * F[rep]` equals the requested `F[i,j]`.
    Gen { sign: i32, rep: GenIndex },
}

impl Canonical {
    pub fn sign(&self) -> i32 {
        match self {
            Canonical::Zero => 0,
            Canonical::Gen { sign, .. } => *sign,
        }
    }

    pub fn rep(&self) -> Option<GenIndex> {
        match self {
            Canonical::Zero => None,
            Canonical::Gen { rep, .. } => Some(*rep),
        }
    }
}

/// Maps `(i,j)` to `(sign, canonical pair)` under `F_ij = -F_{-j,-i}`,
/// with `(i,-i)` collapsing to zero.
pub fn canonicalize_generator(
    rank: AlgebraRank,
    i: i32,
    j: i32,
) -> Result<Canonical, DomainError> {
    for idx in [i, j] {
        if !rank.contains(idx) {
            return Err(DomainError::IndexOutOfRange {
                index: idx,
                big_n: rank.big_n(),
            });
        }
    }
    if j == -i {
        return Ok(Canonical::Zero);
    }
    let mirror = (-j, -i);
    if (i, j) <= mirror {
        Ok(Canonical::Gen {
            sign: 1,
            rep: GenIndex { i, j },
        })
    } else {
        Ok(Canonical::Gen {
            sign: -1,
            rep: GenIndex {
                i: mirror.0,
                j: mirror.1,
            },
        })
    }
}

/// All canonical generators of `o_N` in PBW order.
pub fn canonical_generators(rank: AlgebraRank) -> Vec<GenIndex> {
    let mut out = Vec::new();
    for i in rank.indices() {
        for j in rank.indices() {
            if let Ok(Canonical::Gen { sign: 1, rep }) = canonicalize_generator(rank, i, j) {
                if (rep.i, rep.j) == (i, j) {
                    out.push(rep);
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank5() -> AlgebraRank {
        AlgebraRank::new(5).unwrap()
    }

    #[test]
    fn canonicalize_mirror_rule() {
        // (1,2) mirrors to (-2,-1) with a sign flip.
        let c = canonicalize_generator(rank5(), 1, 2).unwrap();
        match c {
            Canonical::Gen { sign, rep } => {
                assert_eq!(sign, -1);
                assert_eq!((rep.i(), rep.j()), (-2, -1));
            }
            _ => panic!("expected generator"),
        }
        // (i,-i) collapses to zero.
        assert_eq!(canonicalize_generator(rank5(), 1, -1).unwrap(), Canonical::Zero);
        // already canonical
        let c = canonicalize_generator(rank5(), -2, -1).unwrap();
        assert_eq!(c.sign(), 1);
    }

    #[test]
    fn generator_census() {
        // dim o_5 = 10, dim o_7 = 21
        assert_eq!(canonical_generators(rank5()).len(), 10);
        assert_eq!(
            canonical_generators(AlgebraRank::new(7).unwrap()).len(),
            21
        );
    }

    #[test]
    fn pbw_order_blocks() {
        let gens = canonical_generators(rank5());
        let mut seen_cartan = false;
        let mut seen_positive = false;
        for g in gens {
            match g.class() {
                GenClass::Negative => {
                    assert!(!seen_cartan && !seen_positive);
                }
                GenClass::Cartan => {
                    seen_cartan = true;
                    assert!(!seen_positive);
                }
                GenClass::Positive => {
                    seen_positive = true;
                }
            }
        }
        assert!(seen_cartan && seen_positive);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(canonicalize_generator(rank5(), 3, 0).is_err());
        // 0 is not an index for even N
        let r6 = AlgebraRank::new(6).unwrap();
        assert!(canonicalize_generator(r6, 0, 1).is_err());
    }
}
