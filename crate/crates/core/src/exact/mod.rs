//! Exact scalar and polynomial arithmetic.
//!
//! Everything downstream is built on three carriers: [`BigRational`] for
//! plain rationals, [`GaussianRational`] for rationals with an imaginary
//! part, and [`MultiPoly`], a sparse multivariate polynomial whose
//! coefficients are Gaussian rationals. [`TruncatedSeries`] adds one formal
//! variable `t` on top of `MultiPoly` for generating-function work.

mod gaussian;
mod parse;
mod poly;
mod ring;
mod series;

pub use gaussian::GaussianRational;
pub use num_rational::BigRational;
pub use parse::parse_poly;
pub use poly::{Monomial, MultiPoly};
pub use ring::{rational, rational_frac, Ring};
pub use series::TruncatedSeries;
