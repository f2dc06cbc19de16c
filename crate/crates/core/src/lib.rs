//! Exact generalized Fourier transforms of distribution terms, Fourier-based
//! fractional derivatives of distributions and trigonometric series, and
//! closed-form evaluation of `∫ sinⁿx / xᵐ dx`, together with independent
//! numerical oracles for every closed form.
//!
//! Symbolic results live in exact arithmetic ([`Rational`], [`GaussPiCoeff`],
//! [`ExactValue`]). Numeric code (pointwise evaluation, series sampling,
//! quadrature) is generic over a floating-point scalar implementing [`Real`];
//! the `*64` aliases below fix it to `f64`.

pub mod cli;
pub mod dist;
pub mod exact;
pub mod quad;
pub mod series;
pub mod sinc;
pub mod verify;

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

pub use dist::{DistError, DistExpr, DistTerm, Domain, Side};
pub use exact::{CoeffError, ExactError, ExactValue, GaussPiCoeff, Rational};
pub use quad::{QuadError, QuadResult, Range};
pub use series::{SeriesCoeff, SeriesError, TrigSeries};
pub use sinc::SincError;

/// Floating-point scalar used by the numeric side of the crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64`; exact for `f64` itself.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to every Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub type Complex<F> = num_complex::Complex<F>;
pub type Complex64 = Complex<f64>;
pub type QuadResult64 = QuadResult<f64>;
