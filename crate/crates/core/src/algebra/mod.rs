//! Exact arithmetic: rationals, dense polynomials, truncated power series,
//! integer matrices and binomial coefficients.

mod combinat;
mod matrix;
mod poly;
mod scalar;
mod series;

pub use combinat::{binom, binom_int, factorial, multi_binom, multi_binom_int};
pub use matrix::{poly_det_i_minus_tm, IntMatrix};
pub use poly::DensePoly;
pub use scalar::ExactScalar;
pub use series::TruncSeries;
