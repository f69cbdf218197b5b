//! Exact computer-algebra core for the odd orthogonal Lie algebras `o_N` in
//! their split realization.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! equality means identical canonical forms, and every identity checker
//! reports exact pass/fail rather than tolerances.
//!
//! Module map:
//! - [`combinat`]: permutations, matchings, subsets, inversion signs.
//! - [`uea_core`]: canonical generators, PBW straightening, products,
//!   brackets, and the coproduct in the enveloping algebra.
//! - [`pfaffian`]: noncommutative Pfaffians over generator arrays, central
//!   sums built from them, and the identity checkers for their commutation,
//!   splitting, expansion, and coproduct laws.
//! - [`rep_engine`]: exact finite-dimensional modules (standard and
//!   Young-symmetrized traceless tensor constructions), weight spaces, and
//!   relative highest-vector spaces.
//! - [`mz_branching`]: extremal projector, raising/lowering operators between
//!   relative highest-vector spaces, the evaluation polynomials attached to
//!   them, branching labels, and the lowering-chain basis with its action
//!   formulas.
//! - [`verify`]: the suite runner producing structured reports.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI, and caching live in the
//! companion binary crate.

#![no_std]

extern crate alloc;

pub mod combinat;
pub mod mz_branching;
pub mod pfaffian;
pub mod rat;
pub mod rep_engine;
pub mod report;
pub mod uea_core;
pub mod verify;
