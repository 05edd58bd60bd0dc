//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All math is written against [`Real`], which is implemented for `f32` and
//! `f64`. Physical inputs (molecule presets, CODATA constants) are stored as
//! `f64` literals and converted on entry with [`Real::lit`].

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable throughout the crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Converts an unsigned count (quantum number, index) into this scalar type.
    #[inline]
    fn from_count(k: u32) -> Self {
        Self::from_u32(k).expect("count representable in scalar type")
    }

    /// Loose relative tolerance appropriate to this precision: `max(floor, 1e3 * eps)`.
    #[inline]
    fn tol_floor(floor: f64) -> Self {
        let t = Self::lit(1e3) * Self::epsilon();
        Self::lit(floor).max(t)
    }
}

impl Real for f32 {}
impl Real for f64 {}
