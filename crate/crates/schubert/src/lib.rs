//! Exact lattice-point counting for Schubert matroid polytopes.
//!
//! The counting core evaluates the constrained-path summation for
//! `i(SM_n(S), t)` over an r-sequence, reconstructs Ehrhart polynomials by
//! exact rational interpolation, and ships the closed forms for the uniform,
//! minimal, sparse paving and (a,b)-Catalan families. Everything is checked
//! against independent oracles: brute-force lattice-point enumeration through
//! rank inequalities, and Kohnert-diagram / divided-difference key
//! polynomials.

pub mod combinatorics;
pub mod ehrhart;
pub mod matroid;
pub mod oracles;
pub mod poly;
pub mod scan;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("duplicate interpolation node t = {0}")]
    DuplicateNode(i64),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
