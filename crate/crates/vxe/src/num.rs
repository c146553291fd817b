//! Scalar abstraction for the numeric parts of the crate.
//!
//! Everything spectral is written against [`Real`], so the same code runs in
//! `f32` and `f64`. The crate root exports `f64` aliases for the common types;
//! `f64` is the precision the documented tolerances are stated for.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar usable for spectral computations.
///
/// Implemented for `f32` and `f64`. The supertraits cover arithmetic,
/// float constants (`PI`), conversions from primitives, and summation.
pub trait Real:
    Float + FloatConst + NumAssign + FromPrimitive + Sum<Self> + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` constant into this scalar type.
    ///
    /// Panics only if the value is not representable at all, which cannot
    /// happen for the finite literals this crate feeds it.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant must convert")
    }

    /// Converts a vertex count or index into this scalar type.
    #[inline]
    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("usize must convert to float")
    }
}

impl Real for f32 {}
impl Real for f64 {}
