//! Exact enumeration of Ferrers diagrams with a Ferrers-shaped gate or wicket.
//!
//! The crate builds half-perimeter generating functions row by row with the
//! umbral transfer matrix method, then checks them from several directions:
//!
//! * [`umbral`] applies the row operators and solves the evolution equations
//!   for plain, gated and wicketed Ferrers diagrams as truncated series in `t`
//!   with catalytic width variables.
//! * [`oracle`] enumerates the same objects cell by cell and counts boundary
//!   edges, independently of any generating function.
//! * [`analysis`] verifies the quadratic equations satisfied by the series,
//!   rediscovers them from coefficients by exact linear algebra, and checks the
//!   Catalan factorization of the wicketed series.
//! * [`algebra`] is the exact arithmetic underneath: rationals, sparse
//!   catalytic polynomials and truncated power series.
//!
//! ```
//! use umbral_ferrers::umbral::{pipeline, Target};
//!
//! let psi = pipeline(Target::Wicketed, 10).unwrap().specialize_to_one();
//! let coeffs: Vec<i64> = (8..=10).map(|k| psi.scalar_coeff(k).to_integer().try_into().unwrap()).collect();
//! assert_eq!(coeffs, vec![1, 8, 41]);
//! ```

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod crosscheck;
pub mod error;
pub mod oracle;
pub mod umbral;

pub use error::{Error, Result};
