//! Noncommutative Pfaffians `PfF_I`, Capelli-type central elements, and
//! exact checks of their commutator, splitting, expansion, and coproduct
//! identities.
//!
//! The canonical evaluation path is the full permutation sum; the
//! matching sum and the classical cofactor recursion (on a commutative
//! symbol ring) serve as independently-derived cross-checks.

pub mod checks;
pub mod comm;
pub mod construct;
pub mod subset;

pub use construct::{capelli, pf_f, pf_generic, pf_hat, pf_seq, pf_via_matchings, PfError, PfRing};
pub use subset::{even_splits, splits_of_size, IndexSubset, SignedSplit};
