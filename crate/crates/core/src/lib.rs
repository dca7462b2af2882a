//! Exact evaluation of binomial and ballot-number sum families, together with
//! the divisibility predicates, recurrences, closed forms and searches that
//! go with them.
//!
//! All sum values are exact ([`ExactInt`]); normalized sums and series
//! coefficients are exact rationals ([`ExactRat`]). Valuation and Lucas
//! helpers are generic over unsigned machine integers, and the bivariate
//! series engine is generic over any [`Scalar`] field.

pub mod arith;
pub mod closed;
pub mod error;
pub mod scalar;
pub mod series;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use series::TruncatedSeries2;
pub use sums::{BallotSumSpec, BinomialFactor, ChainSpec, Closure, Sign, Weight};

/// Arbitrary-precision signed integer used for every sum, binomial and modulus.
pub type ExactInt = num_bigint::BigInt;

/// Arbitrary-precision rational with positive denominator, always reduced.
pub type ExactRat = num_rational::BigRational;

/// Bivariate truncated series with exact rational coefficients.
pub type RationalSeries = TruncatedSeries2<ExactRat>;

/// Bivariate truncated series over `f64`, for quick approximate sanity checks.
pub type FloatSeries = TruncatedSeries2<f64>;
