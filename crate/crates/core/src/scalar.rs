//! Field scalars accepted by the series engine.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A field element: exact (`BigRational`, `Ratio<i64>`) or floating (`f32`, `f64`).
///
/// Division by a nonzero element must be supported. Nothing here requires
/// exactness; exact identity checks pick an exact type through
/// [`crate::RationalSeries`].
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer is representable")
    }

    fn half() -> Self {
        Self::one() / Self::from_int(2)
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}
