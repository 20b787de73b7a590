//! Exact linear algebra over the rationals for algebras generated by
//! positive matrices.
//!
//! Everything here is computed in exact arithmetic: matrices of
//! arbitrary-precision rationals, word-closure bases of matrix algebras,
//! triangularizability via the trace-form radical, coordinate-ideal
//! lattice structure of nonnegative matrices, super-commutant cones with
//! an exact simplex, and identity checks for positive idempotents.
//!
//! The dense kernels ([`mat`], [`poly`], [`span`], [`charpoly`]) are
//! generic over a [`Scalar`] field type; the rest of the crate works with
//! the concrete aliases [`Rat`], [`Mat`] and [`Poly`] fixed at the crate
//! root, since positivity and exactness are the whole point.

pub mod charpoly;
pub mod check;
mod error;
pub mod gen;
pub mod idempot;
pub mod io;
pub mod lattice;
pub mod mat;
pub mod poly;
pub mod report;
pub mod repro;
pub mod rng;
mod scalar;
pub mod simplex;
pub mod span;
pub mod spanalg;
pub mod supercone;

pub use error::Error;
pub use scalar::Scalar;

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms. No rounding, ever.
pub type Rat = num_rational::BigRational;

/// Dense rational matrix, the workhorse of the crate.
pub type Mat = mat::Matrix<Rat>;

/// Rational polynomial, coefficients stored lowest degree first.
pub type Poly = poly::Polynomial<Rat>;

/// Shorthand for an exact integer-valued rational.
pub fn rat(n: i64) -> Rat {
    use num_traits::FromPrimitive;
    Rat::from_i64(n).expect("i64 always converts")
}

/// Shorthand for the exact fraction `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    use num_bigint::BigInt;
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}
