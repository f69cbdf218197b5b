//! Exact arithmetic in the enveloping algebra of `o_N` (split realization).
//!
//! The generators are `F_ij = E_ij - E_{-j,-i}` with indices in
//! `{-n,...,n}` (0 present iff N is odd). The only linear relations are
//! `F_ij = -F_{-j,-i}`, so each nonzero generator has a canonical
//! representative; words in canonical generators are straightened to PBW
//! normal form over a fixed total order (lowering block, then Cartan block,
//! then raising block, lexicographic inside each block).

mod algebra;
mod element;
mod index;

pub use algebra::Uea;
pub use element::{PbwMonomial, TensorUeaElement, UeaElement};
pub use index::{
    canonical_generators, canonicalize_generator, AlgebraRank, Canonical, DomainError, GenClass,
    GenIndex,
};

pub(crate) use index::add_unit;
