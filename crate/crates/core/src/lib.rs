//! Exact computations for deciding when a quotient singularity `ℂ^m/G` by a
//! finite matrix group is exceptional.
//!
//! Everything here works over cyclotomic fields `ℚ(ζ_n)` with arbitrary
//! precision rationals; there is no floating-point path. The crate is
//! `no_std` and only needs `alloc`.
//!
//! The layers, bottom up:
//! - [`exactnum`]: rationals and cyclotomic numbers, plus the literal grammar.
//! - [`linalg`]: exact Gaussian elimination over a cyclotomic field.
//! - [`matgroup`]: breadth-first closure of finite matrix groups and their
//!   structural subgroups, reflections and spectra.
//! - [`reptheory`]: power traces, Molien coefficients, invariant and
//!   semiinvariant spaces with explicit polynomial bases.
//! - [`classify`]: structural tags, the semiinvariant exceptionality test,
//!   ages and the canonical / ε-log-terminal screens.
//! - [`catalog`]: built-in groups with self-verification.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod catalog;
pub mod classify;
mod error;
pub mod exactnum;
pub mod linalg;
pub mod matgroup;
pub mod reptheory;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, CyclotomicField, Rational};
pub use matgroup::{FiniteMatrixGroup, SquareMatrix, Subgroup};
pub use reptheory::HomogeneousPolynomial;
