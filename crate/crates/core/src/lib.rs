//! Trace ideals, stable ideals and Arf rings made executable.
//!
//! Two engines share the work:
//!
//! * [`semigroup`], [`ideal`] and [`census`] handle monomial ideals of
//!   numerical semigroup rings `k[[t^H]]` exactly, as sets of integers.
//! * [`oracle`] models a subalgebra of `k[[t]]` and its (possibly
//!   non-monomial) ideals by exact linear algebra modulo `t^N`. It is generic
//!   over the coefficient field; [`RationalAlgebra`] and [`RationalIdeal`] fix
//!   it to big rationals.
//!
//! [`laws`] turns the structural theorems about trace ideals into checks that
//! run over every semigroup with a bounded conductor, and [`report`] bundles
//! the worked examples and those checks into a [`report::VerificationReport`].

pub mod census;
pub mod error;
pub mod ideal;
pub mod laws;
pub mod oracle;
pub mod parse;
pub mod report;
pub mod semigroup;

pub use error::{Error, Result};
pub use ideal::SemigroupIdeal;
pub use oracle::{ExactField, Polynomial, SubspaceIdeal, TruncatedSubalgebra};
pub use semigroup::{GorensteinFlavors, NumericalSemigroup};

/// Arbitrary-precision rationals, the default coefficient field.
pub type Rational = num_rational::BigRational;

pub type RationalPolynomial = Polynomial<Rational>;
pub type RationalAlgebra = TruncatedSubalgebra<Rational>;
pub type RationalIdeal = SubspaceIdeal<Rational>;

/// Machine-word rationals; adequate for small coefficients and short
/// precisions; large coefficients overflow.
pub type SmallRational = num_rational::Rational64;
pub type SmallRationalAlgebra = TruncatedSubalgebra<SmallRational>;
