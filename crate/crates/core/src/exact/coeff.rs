use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{biguint_to_f64, int, mul_radicands, rat, rational_to_f64, sqrt_rational, Rational};
use crate::{Complex, Real};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("cannot add coefficients carrying pi^({left}/2) and pi^({right}/2)")]
    AddPowerMismatch { left: i32, right: i32 },
    #[error("cannot add coefficients carrying sqrt({left}) and sqrt({right})")]
    AddRadicalMismatch { left: BigUint, right: BigUint },
    #[error("division by zero coefficient")]
    DivisionByZero,
}

/// The transcendental/irrational part shared by coefficients that can be
/// added to each other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffClass {
    pub pi_half_power: i32,
    pub radicand: BigUint,
}

impl CoeffClass {
    pub fn unit() -> Self {
        CoeffClass {
            pi_half_power: 0,
            radicand: BigUint::one(),
        }
    }
}

/// Exact scalar `(re + im·i) · √radicand · π^(pi_half_power/2)`.
///
/// `radicand` is squarefree. Zero is always stored as `0 · π⁰ · √1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussPiCoeff {
    re: Rational,
    im: Rational,
    pi_half_power: i32,
    radicand: BigUint,
}

impl GaussPiCoeff {
    pub fn new(re: Rational, im: Rational, pi_half_power: i32) -> Self {
        Self::with_class(
            re,
            im,
            CoeffClass {
                pi_half_power,
                radicand: BigUint::one(),
            },
        )
    }

    pub fn with_class(re: Rational, im: Rational, class: CoeffClass) -> Self {
        let mut c = GaussPiCoeff {
            re,
            im,
            pi_half_power: class.pi_half_power,
            radicand: class.radicand,
        };
        c.canonicalize();
        c
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one(), 0)
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q, Rational::zero(), 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// `π^(h/2)`.
    pub fn pi_pow_half(h: i32) -> Self {
        Self::new(Rational::one(), Rational::zero(), h)
    }

    /// `√q` for a non-negative rational.
    pub fn sqrt(q: &Rational) -> Self {
        let (outer, radicand) = sqrt_rational(q);
        Self::with_class(
            outer,
            Rational::zero(),
            CoeffClass {
                pi_half_power: 0,
                radicand,
            },
        )
    }

    /// `iⁿ` for any integer `n`.
    pub fn i_pow(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => Self::from_int(1),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    /// `e^{iπj/4}`, an eighth root of unity.
    pub fn eighth_root(j: i64) -> Self {
        let j = j.rem_euclid(8);
        if j % 2 == 0 {
            return Self::i_pow(j / 2);
        }
        // e^{iπ/4}·i^{(j-1)/2}, with e^{iπ/4} = (1+i)/2 · √2
        let base = Self::with_class(
            rat(1, 2),
            rat(1, 2),
            CoeffClass {
                pi_half_power: 0,
                radicand: BigUint::from(2u32),
            },
        );
        base * Self::i_pow((j - 1) / 2)
    }

    /// `e^{iπα/2}` for α with denominator 1 or 2; `None` otherwise.
    pub fn i_pow_rational(alpha: &Rational) -> Option<Self> {
        let twice = alpha * int(2);
        if !twice.is_integer() {
            return None;
        }
        let j: i64 = num_traits::ToPrimitive::to_i64(&twice.to_integer())?;
        Some(Self::eighth_root(j))
    }

    fn canonicalize(&mut self) {
        if self.re.is_zero() && self.im.is_zero() {
            self.pi_half_power = 0;
            self.radicand = BigUint::one();
        }
        assert!(!self.radicand.is_zero(), "radicand must be positive");
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn pi_half_power(&self) -> i32 {
        self.pi_half_power
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn class(&self) -> CoeffClass {
        CoeffClass {
            pi_half_power: self.pi_half_power,
            radicand: self.radicand.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && self.pi_half_power == 0 && self.radicand.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The same class with the Gaussian part replaced.
    pub fn with_gaussian(&self, re: Rational, im: Rational) -> Self {
        Self::with_class(re, im, self.class())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_half_power != other.pi_half_power {
            return Err(CoeffError::AddPowerMismatch {
                left: self.pi_half_power,
                right: other.pi_half_power,
            });
        }
        if self.radicand != other.radicand {
            return Err(CoeffError::AddRadicalMismatch {
                left: self.radicand.clone(),
                right: other.radicand.clone(),
            });
        }
        Ok(self.with_gaussian(&self.re + &other.re, &self.im + &other.im))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoeffError> {
        self.add(&-other.clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.with_gaussian(&self.re * q, &self.im * q)
    }

    pub fn conj(&self) -> Self {
        self.with_gaussian(self.re.clone(), -&self.im)
    }

    pub fn recip(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        // 1/((a+bi)√s π^{h/2}) = (a-bi)/(a²+b²) · √s/s · π^{-h/2}
        let norm = &self.re * &self.re + &self.im * &self.im;
        let s = Rational::from_integer(BigInt::from(self.radicand.clone()));
        let factor = (norm * s).recip();
        Ok(Self::with_class(
            &self.re * &factor,
            -&self.im * &factor,
            CoeffClass {
                pi_half_power: -self.pi_half_power,
                radicand: self.radicand.clone(),
            },
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.clone() * other.recip()?)
    }

    pub fn to_complex<F: Real>(&self) -> Complex<F> {
        let scale = biguint_to_f64(&self.radicand).sqrt()
            * std::f64::consts::PI.powf(f64::from(self.pi_half_power) / 2.0);
        Complex::new(
            F::of(rational_to_f64(&self.re) * scale),
            F::of(rational_to_f64(&self.im) * scale),
        )
    }
}

impl Mul for GaussPiCoeff {
    type Output = GaussPiCoeff;

    fn mul(self, rhs: GaussPiCoeff) -> GaussPiCoeff {
        &self * &rhs
    }
}

impl Mul for &GaussPiCoeff {
    type Output = GaussPiCoeff;

    fn mul(self, rhs: &GaussPiCoeff) -> GaussPiCoeff {
        let (outer, radicand) = mul_radicands(&self.radicand, &rhs.radicand);
        let outer = Rational::from_integer(BigInt::from(outer));
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussPiCoeff::with_class(
            re * &outer,
            im * &outer,
            CoeffClass {
                pi_half_power: self.pi_half_power + rhs.pi_half_power,
                radicand,
            },
        )
    }
}

impl Neg for GaussPiCoeff {
    type Output = GaussPiCoeff;

    fn neg(self) -> GaussPiCoeff {
        let class = self.class();
        GaussPiCoeff::with_class(-self.re, -self.im, class)
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl GaussPiCoeff {
    /// Renders the Gaussian part alone: `3/4`, `-2i`, `(1-1/2i)`.
    pub(crate) fn fmt_gaussian(re: &Rational, im: &Rational) -> String {
        match (re.is_zero(), im.is_zero()) {
            (_, true) => fmt_rational(re),
            (true, false) => {
                if im.is_one() {
                    "i".to_string()
                } else if (-im).is_one() {
                    "-i".to_string()
                } else {
                    format!("{}i", fmt_rational(im))
                }
            }
            (false, false) => {
                let sign = if im.is_negative() { '-' } else { '+' };
                format!("({}{}{}i)", fmt_rational(re), sign, fmt_rational(&im.abs()))
            }
        }
    }

    /// Factors after the Gaussian part, e.g. `["sqrt(2)", "pi^(-1/2)"]`.
    pub(crate) fn fmt_class_factors(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.radicand.is_one() {
            out.push(format!("sqrt({})", self.radicand));
        }
        let h = self.pi_half_power;
        match h {
            0 => {}
            2 => out.push("pi".to_string()),
            _ if h.is_even() && h > 0 => out.push(format!("pi^{}", h / 2)),
            _ if h.is_even() => out.push(format!("pi^({})", h / 2)),
            _ => out.push(format!("pi^({}/2)", h)),
        }
        out
    }

    /// Splits off an overall sign so the coefficient can be printed after
    /// ` - `. Returns `(negative, magnitude)`; only purely real or purely
    /// imaginary values are split.
    pub(crate) fn split_sign(&self) -> (bool, GaussPiCoeff) {
        let negative = (self.im.is_zero() && self.re.is_negative())
            || (self.re.is_zero() && self.im.is_negative());
        if negative {
            (true, -self.clone())
        } else {
            (false, self.clone())
        }
    }
}

impl fmt::Display for GaussPiCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let factors = self.fmt_class_factors();
        let gaussian = Self::fmt_gaussian(&self.re, &self.im);
        if gaussian != "1" || factors.is_empty() {
            parts.push(gaussian);
        }
        parts.extend(factors);
        write!(f, "{}", parts.join("*"))
    }
}
