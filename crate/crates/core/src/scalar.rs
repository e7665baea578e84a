//! Scalar abstraction for the thermodynamic and relativistic formulas.
//!
//! Every SI-unit module is generic over [`Scalar`]. In practice `f64` is the
//! instantiation that can hold the quantities involved: the headline rate of
//! ~5e50 ops/s exceeds `f32::MAX` and the Planck time sits below
//! `f32::MIN_POSITIVE`. `f32` still satisfies the trait and is usable for the
//! natural-unit quantum simulator and for small dimensionless checks.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating point type usable by the limits engine: `f32` or `f64`.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Converts an `f64` literal into this type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Lossy conversion used for diagnostics and error payloads.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both are zero.
pub fn rel_diff<T: Scalar>(a: T, b: T) -> T {
    let scale = a.abs().max(b.abs());
    if scale == T::zero() {
        T::zero()
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lit_round_trips_f64() {
        assert_eq!(f64::lit(1.0545e-34), 1.0545e-34);
        assert_eq!(f32::lit(0.5), 0.5f32);
    }

    #[test]
    fn rel_diff_is_symmetric_and_zero_safe() {
        assert_eq!(rel_diff(0.0f64, 0.0), 0.0);
        assert_eq!(rel_diff(1.0f64, 2.0), rel_diff(2.0, 1.0));
        assert!((rel_diff(100.0f64, 101.0) - 1.0 / 101.0).abs() < 1e-15);
    }
}
