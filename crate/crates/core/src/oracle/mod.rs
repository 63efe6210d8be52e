//! Finite-precision model of a one-branch ring `R ⊆ k[[t]]` and its ideals.
//!
//! Everything is exact linear algebra over an [`ExactField`] modulo `t^N`.
//! An ideal of valuation `v` contains every series of valuation at least
//! `v + conductor`, so its image modulo `t^g` determines it once
//! `g >= v + conductor`; each [`SubspaceIdeal`] carries the precision `g` up
//! to which its image is certified, and any decision that would need more
//! precision is refused with [`Error::PrecisionTooLow`](crate::Error).

mod algebra;
mod echelon;
mod field;
mod ideal;
mod polynomial;

pub use algebra::TruncatedSubalgebra;
pub use echelon::{nullspace, Echelon};
pub use field::ExactField;
pub use ideal::SubspaceIdeal;
pub use polynomial::{parse_polynomial_list, Polynomial};
