//! Closed forms of `∫ sinⁿx / xᵐ dx` over the real line and the half line.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{binomial, factorial, ExactValue, Rational};
use crate::quad::Range;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SincError {
    #[error("need n >= m >= 1, got n={n}, m={m}")]
    DomainError { n: u32, m: u32 },
    #[error("integral of sin^{n}(x)/x^{m} over [0, inf) diverges")]
    Divergent { n: u32, m: u32 },
    #[error("closed form for n={n}, m={m} has a non-zero imaginary part")]
    NonReal { n: u32, m: u32 },
}

fn check(n: u32, m: u32) -> Result<(), SincError> {
    if m == 0 || n < m {
        Err(SincError::DomainError { n, m })
    } else {
        Ok(())
    }
}

/// `iᵏ` as `(re, im)`.
fn i_pow(k: i64) -> (i64, i64) {
    match k.rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    }
}

fn sign(v: i64) -> i64 {
    v.signum()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `Σ (−1)ˡ C(n,l) w(l)` over `l = 0..=n`.
fn alternating_sum(n: u32, mut w: impl FnMut(i64) -> BigInt) -> BigInt {
    (0..=n).fold(BigInt::zero(), |acc, l| {
        let term = binomial(n, l) * w(i64::from(l));
        if l % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

fn pow(base: i64, e: u32) -> BigInt {
    big(base).pow(e)
}

/// Multiplies the integer sum by a power of `i` and insists the result is
/// real.
fn real_part(n: u32, m: u32, k: i64, s: BigInt) -> Result<BigInt, SincError> {
    let (re, im) = i_pow(k);
    if im != 0 && !s.is_zero() {
        return Err(SincError::NonReal { n, m });
    }
    Ok(s * big(re))
}

/// `∫_ℝ sinⁿx/xᵐ dx = π/(2ⁿ i^{n+m} (m−1)!) Σ (−1)ˡ C(n,l) (2l−n)^{m−1} sgn(2l−n)`.
pub fn full_line(n: u32, m: u32) -> Result<ExactValue, SincError> {
    check(n, m)?;
    let n_i = i64::from(n);
    let s = alternating_sum(n, |l| pow(2 * l - n_i, m - 1) * big(sign(2 * l - n_i)));
    let s = real_part(n, m, -i64::from(n + m), s)?;
    let den = (BigInt::one() << n) * factorial(m - 1);
    Ok(ExactValue::pi_multiple(Rational::new(s, den)))
}

/// Diagonal case `m = n` summed over `l ≤ n/2` only.
pub fn full_line_diag(n: u32) -> Result<ExactValue, SincError> {
    check(n, n)?;
    let n_i = i64::from(n);
    let s = (0..=n / 2).fold(BigInt::zero(), |acc, l| {
        let term = binomial(n, l) * pow(n_i - 2 * i64::from(l), n - 1);
        if l % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    let den = (BigInt::one() << (n - 1)) * factorial(n - 1);
    Ok(ExactValue::pi_multiple(Rational::new(s, den)))
}

/// The half-line closed form evaluated as written, with the `l = n/2` term
/// omitted. Finite even for `m = 1`, `n` even, where the integral itself
/// diverges.
pub fn half_line_formula(n: u32, m: u32) -> Result<ExactValue, SincError> {
    check(n, m)?;
    let n_i = i64::from(n);
    let m_i = i64::from(m);
    let den = (BigInt::one() << n) * factorial(m - 1);
    let skip = |l: i64| 2 * l == n_i;
    if (n - m).is_multiple_of(2) {
        // −i^{m−n}/(2ⁿ(m−1)!) · (π/2) · Σ′ (−1)ˡ C(n,l)(n−2l)^{m−1} sgn(2l−n)
        let s = alternating_sum(n, |l| {
            if skip(l) {
                BigInt::zero()
            } else {
                pow(n_i - 2 * l, m - 1) * big(sign(2 * l - n_i))
            }
        });
        let s = -real_part(n, m, m_i - n_i, s)?;
        Ok(ExactValue::pi_multiple(Rational::new(s, den * 2)))
    } else {
        // i^{m−n+1}/(2ⁿ(m−1)!) · Σ′ (−1)ˡ C(n,l)(n−2l)^{m−1} ln|2l−n|
        let (re, im) = i_pow(m_i - n_i + 1);
        if im != 0 {
            return Err(SincError::NonReal { n, m });
        }
        let mut v = ExactValue::zero();
        for l in 0..=n {
            let l_i = i64::from(l);
            let arg = (2 * l_i - n_i).unsigned_abs();
            if skip(l_i) || arg == 1 {
                continue;
            }
            let mut c = binomial(n, l) * pow(n_i - 2 * l_i, m - 1) * big(re);
            if l % 2 == 1 {
                c = -c;
            }
            let q = Rational::new(c, den.clone());
            v = &v + &ExactValue::ln_multiple(q, arg).expect("argument >= 2");
        }
        Ok(v)
    }
}

/// `∫₀^∞ sinⁿx/xᵐ dx`. For `m = 1` and even `n` the integrand decays only
/// like `2^{−n}C(n,n/2)/x` and the integral diverges.
pub fn half_line(n: u32, m: u32) -> Result<ExactValue, SincError> {
    check(n, m)?;
    if m == 1 && n.is_multiple_of(2) {
        return Err(SincError::Divergent { n, m });
    }
    half_line_formula(n, m)
}

pub fn sincint(n: u32, m: u32, range: Range) -> Result<ExactValue, SincError> {
    match range {
        Range::Full => full_line(n, m),
        Range::Half => half_line(n, m),
    }
}

/// `A_{m−1}` from `A₀ = 1`, `A_j = A_{j−1}/j`.
#[allow(non_snake_case)]
pub fn antideriv_coeff_A(m: u32) -> Rational {
    assert!(m >= 1, "m must be >= 1");
    (1..m).fold(Rational::one(), |a, j| {
        a / Rational::from_integer(BigInt::from(j))
    })
}

/// CSV rows `n,m,range,exact,float` for `1 ≤ m ≤ n ≤ max_n`; divergent
/// entries print `divergent` and `inf`.
pub fn table_csv(max_n: u32) -> String {
    let mut out = String::from("n,m,range,exact,float\n");
    for n in 1..=max_n {
        for m in 1..=n {
            for range in [Range::Full, Range::Half] {
                let (exact, float) = match sincint(n, m, range) {
                    Ok(v) => {
                        let f = v.eval_float().map(|f| format!("{f:.16e}"));
                        (v.to_string(), f.unwrap_or_else(|_| "overflow".into()))
                    }
                    Err(_) => ("divergent".into(), "inf".into()),
                };
                writeln!(out, "{n},{m},{range},\"{exact}\",{float}").expect("string write");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn pi(q: Rational) -> ExactValue {
        ExactValue::pi_multiple(q)
    }

    fn ln(q: Rational, p: u64) -> ExactValue {
        ExactValue::ln_multiple(q, p).unwrap()
    }

    #[test]
    fn full_line_examples() {
        assert_eq!(full_line(3, 3).unwrap(), pi(rat(3, 4)));
        assert_eq!(full_line(4, 4).unwrap(), pi(rat(2, 3)));
        assert_eq!(full_line(5, 5).unwrap(), pi(rat(115, 192)));
        assert_eq!(full_line(6, 6).unwrap(), pi(rat(11, 20)));
        assert!(full_line(3, 2).unwrap().is_zero());
        assert_eq!(full_line(2, 2).unwrap(), pi(int(1)));
        assert_eq!(full_line(1, 1).unwrap(), pi(int(1)));
    }

    #[test]
    fn diagonal() {
        assert_eq!(full_line_diag(1).unwrap(), pi(int(1)));
        assert_eq!(full_line_diag(4).unwrap(), pi(rat(2, 3)));
        assert_eq!(full_line_diag(5).unwrap(), pi(rat(115, 192)));
        for n in 1..=20 {
            assert_eq!(
                full_line_diag(n).unwrap(),
                full_line(n, n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn half_line_examples() {
        assert_eq!(half_line(3, 2).unwrap(), ln(rat(3, 4), 3));
        assert_eq!(half_line(4, 3).unwrap(), ln(int(1), 2));
        assert_eq!(
            half_line(5, 4).unwrap(),
            ln(rat(125, 96), 5) + ln(rat(-45, 32), 3)
        );
        assert_eq!(half_line(3, 1).unwrap(), pi(rat(1, 4)));
        assert_eq!(half_line(1, 1).unwrap(), pi(rat(1, 2)));
        assert_eq!(half_line(2, 2).unwrap(), pi(rat(1, 2)));
    }

    #[test]
    fn divergent_and_domain() {
        assert_eq!(half_line(2, 1), Err(SincError::Divergent { n: 2, m: 1 }));
        // the formula alone yields ln2/2 here
        assert_eq!(half_line_formula(2, 1).unwrap(), ln(rat(1, 2), 2));
        assert!(full_line(2, 1).unwrap().is_zero());
        assert_eq!(full_line(2, 3), Err(SincError::DomainError { n: 2, m: 3 }));
        assert_eq!(half_line(1, 0), Err(SincError::DomainError { n: 1, m: 0 }));
    }

    #[test]
    fn parity_and_halving() {
        for n in 1..=20 {
            for m in 1..=n {
                let full = full_line(n, m).unwrap();
                let half = half_line_formula(n, m).unwrap();
                if (n - m) % 2 == 0 {
                    assert_eq!(full, half.scale(&int(2)), "n={n} m={m}");
                    assert!(half.log_terms().is_empty());
                } else {
                    assert!(full.is_zero());
                    assert!(half.coeff_pi().is_zero());
                }
                assert!(half.coeff_one().is_zero());
            }
        }
    }

    #[test]
    fn recursion_coefficients() {
        assert_eq!(antideriv_coeff_A(1), int(1));
        assert_eq!(antideriv_coeff_A(3), rat(1, 2));
        assert_eq!(antideriv_coeff_A(7), rat(1, 720));
        for m in 1..=30 {
            assert!((antideriv_coeff_A(m) * Rational::from_integer(factorial(m - 1))).is_one());
        }
    }

    #[test]
    fn table() {
        let t = table_csv(2);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "n,m,range,exact,float");
        assert_eq!(lines[1], "1,1,full,\"1*pi\",3.1415926535897931e0");
        assert_eq!(lines[4], "2,1,half,\"divergent\",inf");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn large_n_binomials() {
        let v = full_line(64, 64).unwrap();
        let f = v.eval_float().unwrap();
        assert!(f > 0.0 && f < std::f64::consts::PI);
    }
}
