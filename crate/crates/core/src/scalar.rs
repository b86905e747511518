//! Scalar abstractions.
//!
//! Everything with a square root, exponential or logarithm in it is generic
//! over [`Real`] (implemented for `f32` and `f64`). The terminating
//! hypergeometric sums only need field operations, so they are generic over
//! [`Field`] instead, which also admits exact rationals.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// Floating point scalar: f32 or f64.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts a small integer (quantum number, loop counter) into `Self`.
    #[inline]
    fn int(k: i64) -> Self {
        Self::from_i64(k).expect("integer representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Anything with `+ - * /` and exact small-integer embedding.
pub trait Field: Clone + Num + FromPrimitive {
    #[inline]
    fn int(k: i64) -> Self {
        Self::from_i64(k).expect("integer representable")
    }
}

impl<T: Clone + Num + FromPrimitive> Field for T {}
