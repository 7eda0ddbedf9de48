use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar for the analytic side of the library: `f32` or `f64`.
///
/// Everything with a complex or real-valued output (character values, Gauss
/// sums, eigenvalues, spectral reports) is generic over this trait; the
/// integer side (residue arithmetic, counting) is exact and stays on `u64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Conversion for tolerances and small constants.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable")
    }

    /// Conversion for counts, residues and moduli (rounds above the mantissa).
    fn of_u64(x: u64) -> Self {
        Self::from_u64(x).expect("integer not representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
