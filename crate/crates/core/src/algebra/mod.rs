//! Exact scalar, polynomial and truncated-series arithmetic.
//!
//! Every coefficient is a [`BigRational`]; nothing in this crate rounds.

mod json;
mod poly;
mod series;
mod tpoly;

pub use json::{MonoJson, SeriesJson, TermJson};
pub use num_rational::BigRational;
pub use poly::{CatalyticPoly, Exponents, MAX_ARITY};
pub use series::{Image, Substitution, TruncSeries};
pub use tpoly::TPoly;

use num_bigint::BigInt;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Conventional variable names for an arity: `x` alone, or `x1, x2, x3`.
pub fn var_names(arity: usize) -> Vec<String> {
    match arity {
        0 => Vec::new(),
        1 => vec!["x".to_string()],
        n => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}
