//! Exact eigenstructure of the binomial matrix `R = (C(i−1, n−j))`.
//!
//! `R` has eigenvalues `±φ^k` in the golden-ratio field Q(√5), with
//! eigenvectors given by explicit binomial sums. This crate evaluates those
//! closed forms with exact arithmetic, checks every identity that links them
//! (generating functions, coefficient extraction, the eigen-equation), and
//! builds the resulting diagonalization `R = U·diag(λ)·U⁻¹`.
//!
//! Indexing: functions that mirror the matrix-entry notation (`eigenvalue`,
//! `eigvec_entry`, `gen_fun`, [`BinomialMatrix::entry`], …) take 1-based
//! indices. The generic [`GoldenMatrix`] and [`IntMatrix`] containers are
//! 0-based.

pub mod binomial;
pub mod constants;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod ring;
pub mod spectral;

pub use binomial::{binom, BinomialMatrix};
pub use constants::GoldenConstants;
pub use error::{Error, Result};
pub use matrix::{GoldenMatrix, GoldenVector, IntMatrix};
pub use poly::GoldenPoly;
pub use report::{Check, Counterexample, Report};
pub use ring::GoldenNumber;
pub use spectral::{
    build_r, build_u, eigenvalue, eigvec, eigvec_entry, gen_fun, lhs_closed_poly,
    lhs_intermediate_poly, lhs_row_poly, matrix_power, rhs_closed_poly, rhs_scaled_poly,
    rhs_substituted_poly, spectral_decompose, trace_det_identities, verify_eigenpair, verify_note,
    EigenpairCheck, Eigensystem, EntryMismatch, SpectralDecomposition, Spectrum,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
