//! Exact computations in the descent algebra of the symmetric group.
//!
//! The crate implements the group algebra `ℚ[S_n]` with its B-basis
//! `B_α` (sums of permutations whose descents lie in `Set(α)`), the
//! left-to-right-minima basis `β_w = B_{cLRM′(w)} · w`, Dynkin elements in
//! the free algebra, and the filtration of `ℚ[S_n]` by the right ideals
//! `B_α ℚ[S_n]`. Every structural statement about these objects can be
//! checked exhaustively for small `n` through the [`suites`] module.
//!
//! All arithmetic is exact ([`Rational`]).

pub mod compositions;
pub mod error;
pub mod filtration;
pub mod free_algebra;
pub mod group_algebra;
pub mod linalg;
pub mod permutations;
pub mod rational;
pub mod report;
pub mod suites;

pub use compositions::{Composition, MarginMatrix, Partition, Subset};
pub use error::{Error, Result};
pub use group_algebra::GroupAlgebraElement;
pub use permutations::Permutation;
pub use rational::Rational;
