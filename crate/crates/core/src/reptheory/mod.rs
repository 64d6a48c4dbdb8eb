//! Representation-theoretic data of a finite matrix group: symmetric-power
//! traces, Molien coefficients, character norms, and explicit bases of
//! invariants and semiinvariants.
//!
//! Polynomials are functions on `V`, so `g` acts on them by `f ↦ f∘g⁻¹`.
//! Monomials are ordered graded-lexicographically.

mod invariants;
mod molien;
mod poly;
mod semiinv;

pub use invariants::{invariant_basis, DEFAULT_WORK_BOUND};
pub use molien::{character_norm, invariant_dimension, molien_prefix, sym_trace, sym_trace_at, DEFAULT_MOLIEN_DEGREE};
pub use poly::{HomogeneousPolynomial, MonomialBasis, SubstitutionTable};
pub use semiinv::{
    first_semiinvariant_degree, semiinv_basis, semiinv_dimension, semiinvariant_report, verify_semiinvariants,
    SemiinvariantDegree, SemiinvariantReport,
};
