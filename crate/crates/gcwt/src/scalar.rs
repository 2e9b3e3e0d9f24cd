//! Scalar abstraction: the numeric core is generic over the real float type.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::iter::Sum;

/// Real scalar the toolkit is generic over (f32 or f64).
///
/// Bundles the floating-point traits the math needs plus `rustfft`'s
/// requirements, so every downstream module can take a single bound.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + rustfft::FftNum + Send + Sync + 'static
{
    /// Convert an f64 literal into the scalar type.
    #[inline]
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("f64 constant not representable")
    }

    /// Complex constant from f64 parts.
    #[inline]
    fn cx(re: f64, im: f64) -> Complex<Self> {
        Complex::new(Self::c(re), Self::c(im))
    }

    /// e^{i phi} as a complex number.
    #[inline]
    fn cis(phi: Self) -> Complex<Self> {
        Complex::new(phi.cos(), phi.sin())
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
