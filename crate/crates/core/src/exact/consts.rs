//! Fixed-point approximations of π and ln p, scaled by 2^FIXED_BITS.
//! Used only to round exact values to binary64.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) const FIXED_BITS: u32 = 320;

fn one() -> BigInt {
    BigInt::one() << FIXED_BITS
}

/// `atanh(u/v)·2^FIXED_BITS` for `0 ≤ u/v ≤ 1/2`.
fn atanh_fixed(u: &BigInt, v: &BigInt) -> BigInt {
    let u2 = u * u;
    let v2 = v * v;
    let mut power = one() * u / v;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        sum += &power / (2 * k + 1);
        power = power * &u2 / &v2;
        k += 1;
    }
    sum
}

/// `atan(1/x)·2^FIXED_BITS`.
fn acot_fixed(x: u32) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut power = one() / x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

pub(crate) fn pi_fixed() -> BigInt {
    // Machin: π = 16·acot 5 − 4·acot 239
    acot_fixed(5) * 16 - acot_fixed(239) * 4
}

/// `ln n · 2^FIXED_BITS` for `n ≥ 1`.
pub(crate) fn ln_fixed(n: u64) -> BigInt {
    assert!(n >= 1, "logarithm of zero");
    if n == 1 {
        return BigInt::zero();
    }
    let e = 63 - n.leading_zeros();
    let base = 1u64 << e;
    // ln n = e·ln 2 + 2·atanh((n − 2^e)/(n + 2^e)), argument < 1/3
    let ln2 = atanh_fixed(&BigInt::one(), &BigInt::from(3)) * 2;
    let rest = atanh_fixed(
        &BigInt::from(n - base),
        &(BigInt::from(n) + BigInt::from(base)),
    ) * 2;
    ln2 * e + rest
}
