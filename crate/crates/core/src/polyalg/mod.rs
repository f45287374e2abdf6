//! Exact multivariate polynomial arithmetic over the rationals, plus the
//! dense/sparse exact linear algebra everything else is built on.
//!
//! All coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere in this crate.

mod grading;
mod matrix;
mod poly;
mod text;

pub use grading::{coefficient_rows, graded_span_rank, monomials_of_degree, DegreeBasis};
pub use matrix::{sparse_rank, RationalMatrix};
pub use poly::{apply_diff_operator, Monomial, Polynomial};
pub use text::parse_polynomial;

/// Arbitrary-precision exact rational scalar. Always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}
