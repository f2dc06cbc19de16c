//! Exact arithmetic: big rationals, Gaussian rationals scaled by
//! half-integer powers of π (and square roots of integers), and real values
//! in the rational span of `{1, π, ln p}`.

mod coeff;
mod consts;
mod value;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) use coeff::fmt_rational;
pub use coeff::{CoeffClass, CoeffError, GaussPiCoeff};
pub use value::{ExactError, ExactValue};

pub(crate) use consts::{ln_fixed, pi_fixed, FIXED_BITS};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Trial-division factorisation; fine for the small arguments that appear
/// inside logarithms here.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Splits `n = outer² · radicand` with `radicand` squarefree.
pub(crate) fn squarefree_split(n: &BigUint) -> (BigUint, BigUint) {
    const TRIAL_LIMIT: u32 = 1_000_000;
    let mut rest = n.clone();
    let mut outer = BigUint::one();
    let mut radicand = BigUint::one();
    if rest.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut p = 2u32;
    while p <= TRIAL_LIMIT && BigUint::from(p) * p <= rest {
        let mut e = 0u32;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        outer *= BigUint::from(p).pow(e / 2);
        if e % 2 == 1 {
            radicand *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            outer *= r;
        } else {
            radicand *= rest;
        }
    }
    (outer, radicand)
}

/// `√s · √t = outer · √radicand` for squarefree `s`, `t`.
pub(crate) fn mul_radicands(s: &BigUint, t: &BigUint) -> (BigUint, BigUint) {
    let g = num_integer::Integer::gcd(s, t);
    let radicand = (s / &g) * (t / &g);
    (g, radicand)
}

/// `√q = outer · √radicand` with rational `outer`, for `q ≥ 0`.
pub(crate) fn sqrt_rational(q: &Rational) -> (Rational, BigUint) {
    assert!(!q.is_negative(), "square root of a negative rational");
    let num = q.numer().abs().to_biguint().expect("non-negative");
    let den = q.denom().to_biguint().expect("positive");
    // √(p/q) = √(p·q) / q
    let (outer, radicand) = squarefree_split(&(num * &den));
    (
        Rational::new(BigInt::from(outer), BigInt::from(den)),
        radicand,
    )
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn biguint_to_f64(n: &BigUint) -> f64 {
    n.to_f64().unwrap_or(f64::INFINITY)
}
