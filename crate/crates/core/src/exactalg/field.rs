use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Scalar type the linear algebra is generic over.
///
/// Every algorithm in this crate divides, so implementors must be fields.
/// The intended instances are exact: [`crate::Rational`] (arbitrary
/// precision) and `Ratio<i64>` for small checks where overflow is ruled out.
pub trait Field:
    Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + FromPrimitive + Send + Sync + 'static
{
    fn from_int(i: i64) -> Self {
        Self::from_i64(i).expect("integer not representable in scalar type")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> Field for T where
    T: Num
        + Neg<Output = T>
        + Clone
        + PartialEq
        + Debug
        + Display
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}
