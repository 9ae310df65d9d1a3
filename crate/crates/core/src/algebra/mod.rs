//! Exact arithmetic: dense univariate polynomials over ℤ and ℚ, and truncated
//! power series whose coefficients live in any such ring (including
//! polynomial rings, which gives series in `x` with coefficients in `ℚ[s]`).
//!
//! Nothing here uses floating point. Polynomials are kept in canonical form
//! (no trailing zero coefficients, zero is the empty vector) so derived
//! equality is mathematical equality.

mod poly;
mod render;
mod series;

pub use poly::{Coeff, IntPoly, Poly, RatPoly};
pub use render::{latex, latex_series, plain, plain_series};
pub use series::{BiSeries, Series, TruncatedSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
