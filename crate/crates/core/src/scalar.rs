//! Floating-point scalar abstraction shared by the graph and spectral layers.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar type the eigensolver and walk evaluation are generic over.
///
/// Implemented for `f32` and `f64`. The default tolerances throughout the
/// crate are calibrated for `f64`; `f32` callers should loosen them.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Machine epsilon as a plain `f64`, used when scaling tolerances.
    const EPSILON_F64: f64;

    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to every Scalar")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const EPSILON_F64: f64 = f32::EPSILON as f64;
}

impl Scalar for f64 {
    const EPSILON_F64: f64 = f64::EPSILON;
}
