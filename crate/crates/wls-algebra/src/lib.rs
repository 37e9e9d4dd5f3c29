//! Combination algebra over Creative-Commons-style license designations.
//!
//! When datasets are mashed up, their licenses combine too. This crate
//! models that combination over twelve symbolic designations (the
//! public-domain mark, the CC0 waiver, eight attribution licenses,
//! All Rights Reserved, and No License) with two interchangeable
//! engines:
//!
//! - the **matrix engine** ([`combine_matrix`]), driven cell-by-cell by
//!   the golden 12×12 table embedded at
//!   `resources/license_matrix.csv`;
//! - the **OR engine** ([`combine_or`]), a semilattice join that unions
//!   the NC/ND/SA restriction bits of CC licenses.
//!
//! `X` (incompatible) is the absorbing result for combinations no
//! designation can express. [`combine_all`] folds a whole stack of
//! licenses right-to-left, and [`validate_algebra`] / [`engines_diff`]
//! audit the algebraic claims instead of assuming them.
//!
//! Everything here is an immutable value and every function is pure;
//! the crate is safe for unrestricted concurrent use.

mod attributes;
mod combine;
mod designation;
mod matrix;
mod or_engine;
mod validate;

pub use attributes::{
    decode_attributes, encode_attributes, AttributeFlags, AttributeVector, LicenseClass,
    MalformedVector,
};
pub use combine::{combine_all, combine_pair, Engine};
pub use designation::{CombinationOutcome, LicenseDesignation, UnknownCode};
pub use matrix::{combine_matrix, LicenseMatrix, MatrixCsvError, MatrixMode, LICENSE_MATRIX_CSV};
pub use or_engine::{combine_or, or_join};
pub use validate::{
    engines_diff, validate_algebra, AlgebraReport, AssociativityViolation, EngineDisagreement,
    SymmetryViolation,
};
