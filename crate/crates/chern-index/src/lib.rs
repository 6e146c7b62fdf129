//! Exact computation of Chern-class subgroup indices for quotients
//! `G = SL_n / mu_ell`.
//!
//! Representations of `G` pull back to `BSL_n`, where `H^4` and `H^6` are
//! each infinite cyclic, generated by `c_2` and `c_3`. The images of the
//! degree-2 and degree-3 Chern classes of representations form subgroups
//! `d Z` of these, and the positive generator `d` is the "index" computed
//! here. Everything is exact integer and rational arithmetic: the basis of
//! the representation ring is enumerated explicitly, Chern data comes from
//! closed forms cross-checked against a truncated Chern-character engine,
//! and the connective-K-theory image is extracted from an integer lattice
//! in Hermite normal form.

pub mod arith;
pub mod cli;
mod error;
pub mod indices;
pub mod kulattice;
pub mod reps;
pub mod symfunc;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
