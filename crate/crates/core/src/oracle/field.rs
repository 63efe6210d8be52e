use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Num;

/// A field with exact arithmetic: zero tests are decisions, not tolerances.
///
/// Floating-point types are deliberately not implemented; echelon forms
/// over them would need pivot thresholds.
pub trait ExactField:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromStr + Send + Sync + 'static
{
}

impl ExactField for Ratio<i64> {}
impl ExactField for Ratio<i128> {}
impl ExactField for Ratio<BigInt> {}
