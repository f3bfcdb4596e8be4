//! Exact rational kernel for checking K-stability computations on Fano
//! varieties built from double covers, and on their toric models.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exact;
pub mod fixtures;
pub mod formulas;
pub mod functionals;
pub mod git;
pub mod invariants;
pub mod toric;
pub mod zariski;

pub use error::{Error, Result};
pub use exact::{q, qi, Rational};

/// Two-variable polynomial over the rationals.
pub type Poly = exact::Polynomial<Rational>;
