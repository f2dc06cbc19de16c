//! Trigonometric series on a 2π period and their fractional derivatives by
//! coefficient rotation.

mod coeff;
mod io;

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::dist::is_half_or_integer;
use crate::exact::{int, rat, Rational};
use crate::Real;

pub use coeff::SeriesCoeff;
pub use io::{read_series_csv, write_samples_csv, write_samples_svg, write_series_csv};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("unsupported order {0}: must be >= 0 with denominator 1 or 2")]
    UnsupportedAlpha(String),
    #[error("unknown series {0:?} (expected sawtooth or absx)")]
    UnknownName(String),
    #[error("series order must be >= 1")]
    InvalidOrder,
    #[error("cannot parse coefficient {text:?} at byte {offset}: expected {expected}")]
    BadCoefficient {
        text: String,
        offset: usize,
        expected: String,
    },
    #[error("series csv line {line}: {message}")]
    Csv { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for SeriesError {
    fn from(e: std::io::Error) -> Self {
        SeriesError::Io(e.to_string())
    }
}

/// `mean + Σ (aₙ cos nx + bₙ sin nx)`. Harmonics are keyed by frequency;
/// entries with both coefficients zero are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TrigSeries {
    mean: SeriesCoeff,
    harmonics: BTreeMap<u32, (SeriesCoeff, SeriesCoeff)>,
}

impl TrigSeries {
    pub fn new(mean: SeriesCoeff) -> Self {
        TrigSeries {
            mean,
            harmonics: BTreeMap::new(),
        }
    }

    /// Adds `a cos nx + b sin nx`, `n ≥ 1`, merging with an existing entry.
    pub fn add_harmonic(&mut self, n: u32, a: SeriesCoeff, b: SeriesCoeff) {
        assert!(n >= 1, "harmonic frequency must be >= 1");
        let (a, b) = match self.harmonics.remove(&n) {
            Some((a0, b0)) => (&a0 + &a, &b0 + &b),
            None => (a, b),
        };
        if !(a.is_zero() && b.is_zero()) {
            self.harmonics.insert(n, (a, b));
        }
    }

    pub fn with_harmonic(mut self, n: u32, a: SeriesCoeff, b: SeriesCoeff) -> Self {
        self.add_harmonic(n, a, b);
        self
    }

    pub fn mean(&self) -> &SeriesCoeff {
        &self.mean
    }

    pub fn harmonics(&self) -> impl Iterator<Item = (u32, &SeriesCoeff, &SeriesCoeff)> {
        self.harmonics.iter().map(|(n, (a, b))| (*n, a, b))
    }

    pub fn harmonic(&self, n: u32) -> Option<(&SeriesCoeff, &SeriesCoeff)> {
        self.harmonics.get(&n).map(|(a, b)| (a, b))
    }

    pub fn len(&self) -> usize {
        self.harmonics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mean.is_zero() && self.harmonics.is_empty()
    }
}

/// `(cos tπ/4, sin tπ/4)`
fn quarter_turn(t: i64) -> (SeriesCoeff, SeriesCoeff) {
    let h = SeriesCoeff::sqrt(&rat(1, 2));
    let one = SeriesCoeff::one();
    let z = SeriesCoeff::zero();
    match t.rem_euclid(8) {
        0 => (one, z),
        1 => (h.clone(), h),
        2 => (z, one),
        3 => (-&h, h),
        4 => (-one, z),
        5 => (-&h, -h),
        6 => (z, -one),
        _ => (h.clone(), -h),
    }
}

/// `n^α` for α a non-negative multiple of 1/2.
fn power(n: u32, twice_alpha: i64) -> SeriesCoeff {
    let whole = Rational::from_integer(n.into()).pow((twice_alpha / 2) as i32);
    let c = SeriesCoeff::rational(whole);
    if twice_alpha % 2 == 1 {
        &c * &SeriesCoeff::sqrt(&int(i64::from(n)))
    } else {
        c
    }
}

/// Derivative of order α by rotating each harmonic through απ/2 and scaling
/// by nᵅ. The mean is dropped for α > 0.
pub fn frac_deriv_series(s: &TrigSeries, alpha: &Rational) -> Result<TrigSeries, SeriesError> {
    if *alpha < Rational::zero() || !is_half_or_integer(alpha) {
        return Err(SeriesError::UnsupportedAlpha(alpha.to_string()));
    }
    if alpha.is_zero() {
        return Ok(s.clone());
    }
    let twice = (alpha * int(2))
        .to_integer()
        .to_i64()
        .ok_or_else(|| SeriesError::UnsupportedAlpha(alpha.to_string()))?;
    let (c, sn) = quarter_turn(twice);
    let mut out = TrigSeries::new(SeriesCoeff::zero());
    for (n, a, b) in s.harmonics() {
        let scale = power(n, twice);
        let a2 = &scale * &(&(a * &c) + &(b * &sn));
        let b2 = &scale * &(&(b * &c) - &(a * &sn));
        out.add_harmonic(n, a2, b2);
    }
    Ok(out)
}

/// Truncations of the sawtooth `f(x) = x` on `(-π, π)` and of `|x|`, with
/// `order` non-zero harmonics.
pub fn builtin_series(name: &str, order: u32) -> Result<TrigSeries, SeriesError> {
    if !matches!(name, "sawtooth" | "absx") {
        return Err(SeriesError::UnknownName(name.to_string()));
    }
    if order == 0 {
        return Err(SeriesError::InvalidOrder);
    }
    let z = SeriesCoeff::zero;
    let s = match name {
        "sawtooth" => (1..=order).fold(TrigSeries::new(z()), |s, n| {
            let sign = if n % 2 == 1 { 2 } else { -2 };
            s.with_harmonic(n, z(), SeriesCoeff::rational(rat(sign, i64::from(n))))
        }),
        _ => (0..order).fold(
            TrigSeries::new(SeriesCoeff::pi_power(rat(1, 2), 1)),
            |s, j| {
                let k = 2 * i64::from(j) + 1;
                let a = SeriesCoeff::pi_power(rat(-4, k * k), -1);
                s.with_harmonic(k as u32, a, z())
            },
        ),
    };
    Ok(s)
}

/// Neumaier-compensated sum.
#[derive(Clone, Copy)]
struct Compensated<F> {
    sum: F,
    carry: F,
}

impl<F: Real> Compensated<F> {
    fn new() -> Self {
        Compensated {
            sum: F::zero(),
            carry: F::zero(),
        }
    }

    fn add(&mut self, x: F) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry = self.carry + ((self.sum - t) + x);
        } else {
            self.carry = self.carry + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    fn value(self) -> F {
        self.sum + self.carry
    }
}

/// Evaluates the series at each point.
pub fn sample_series<F: Real>(s: &TrigSeries, xs: &[F]) -> Vec<F> {
    let mean = F::of(s.mean().to_f64());
    let coeffs: Vec<(F, F, F)> = s
        .harmonics()
        .map(|(n, a, b)| (F::of(f64::from(n)), F::of(a.to_f64()), F::of(b.to_f64())))
        .collect();
    xs.iter()
        .map(|&x| {
            let mut acc = Compensated::new();
            acc.add(mean);
            for &(n, a, b) in &coeffs {
                let (sin, cos) = (n * x).sin_cos();
                acc.add(a * cos);
                acc.add(b * sin);
            }
            acc.value()
        })
        .collect()
}

/// `count` equally spaced points from `xmin` to `xmax` inclusive.
pub fn grid(xmin: f64, xmax: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![xmin],
        _ => {
            let step = (xmax - xmin) / (count - 1) as f64;
            (0..count)
                .map(|i| {
                    if i + 1 == count {
                        xmax
                    } else {
                        xmin + step * i as f64
                    }
                })
                .collect()
        }
    }
}
