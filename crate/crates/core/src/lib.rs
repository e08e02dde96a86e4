//! Exact computation of Molien generating functions for the SO(3) action on
//! N spatial vectors: closed forms, integrity-basis style decompositions into
//! sums of fractions with nonnegative numerators, and independent
//! cross-checks (Clebsch-Gordan coupling series, Gauss-Legendre quadrature,
//! finite-group averaging).
//!
//! The symbolic core is generic over the coefficient field through the
//! [`Scalar`] trait; the concrete exact instantiation over arbitrary
//! precision rationals is exposed through the `Rat`, `Poly`, `Fraction` and
//! `Series` aliases at the crate root.

pub mod algebra;
pub mod coupling;
pub mod covariants;
pub mod decompose;
pub mod error;
pub mod finite;
pub mod fixtures;
pub mod molien;
pub mod output;
pub mod rotation;
pub mod verify;

pub use algebra::fraction::RationalFraction;
pub use algebra::poly::Polynomial;
pub use algebra::scalar::Scalar;
pub use algebra::series::TruncatedSeries;
pub use error::MolienError;

/// Exact rational coefficient: arbitrary-precision numerator and positive
/// denominator, always in lowest terms.
pub type Rat = num::BigRational;
/// Arbitrary-precision integer.
pub type Int = num::BigInt;

/// Univariate polynomial in the degree-counting variable with exact rational
/// coefficients.
pub type Poly = Polynomial<Rat>;
/// Polynomial over a canonical `(1-t)^a (1-t^2)^b` denominator.
pub type Fraction = RationalFraction<Rat>;
/// Exact power series truncated at a fixed order.
pub type Series = TruncatedSeries<Rat>;

/// Convenience constructor for an exact rational from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Convenience constructor for an exact integer coefficient.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
