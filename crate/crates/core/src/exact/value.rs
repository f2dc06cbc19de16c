use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::coeff::fmt_rational;
use super::{ln_fixed, pi_fixed, prime_factors, Rational, FIXED_BITS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("value overflows binary64")]
    Overflow,
    #[error("logarithm argument must be a positive integer, got {0}")]
    BadLogArgument(u64),
    #[error("cannot parse exact value at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
}

/// A real number `c₁ + c_π·π + Σ c_p·ln p` with rational coefficients and
/// prime `p`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ExactValue {
    one: Rational,
    pi: Rational,
    logs: BTreeMap<u64, Rational>,
}

impl ExactValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: Rational) -> Self {
        ExactValue {
            one: q,
            ..Self::default()
        }
    }

    pub fn pi_multiple(q: Rational) -> Self {
        ExactValue {
            pi: q,
            ..Self::default()
        }
    }

    /// `q · ln(arg)`, factored over primes.
    pub fn ln_multiple(q: Rational, arg: u64) -> Result<Self, ExactError> {
        if arg == 0 {
            return Err(ExactError::BadLogArgument(arg));
        }
        let mut v = Self::zero();
        for (p, e) in prime_factors(arg) {
            v.add_log(p, &q * BigInt::from(e));
        }
        Ok(v)
    }

    fn add_log(&mut self, p: u64, q: Rational) {
        let entry = self.logs.entry(p).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.logs.remove(&p);
        }
    }

    pub fn coeff_one(&self) -> &Rational {
        &self.one
    }

    pub fn coeff_pi(&self) -> &Rational {
        &self.pi
    }

    pub fn log_terms(&self) -> &BTreeMap<u64, Rational> {
        &self.logs
    }

    pub fn is_zero(&self) -> bool {
        self.one.is_zero() && self.pi.is_zero() && self.logs.is_empty()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        ExactValue {
            one: &self.one * q,
            pi: &self.pi * q,
            logs: self.logs.iter().map(|(p, c)| (*p, c * q)).collect(),
        }
    }

    /// Rounds to binary64. π and ln p enter as 320-bit fixed-point
    /// approximations; the sum is formed exactly and rounded once.
    pub fn eval_float(&self) -> Result<f64, ExactError> {
        let scale = BigInt::from(1u8) << FIXED_BITS;
        let mut total = self.one.clone();
        if !self.pi.is_zero() {
            total += &self.pi * Rational::new(pi_fixed(), scale.clone());
        }
        for (p, c) in &self.logs {
            total += c * Rational::new(ln_fixed(*p), scale.clone());
        }
        let v = total.to_f64().ok_or(ExactError::Overflow)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(ExactError::Overflow)
        }
    }

    fn rendered_terms(&self) -> Vec<(bool, String)> {
        let mut terms = Vec::new();
        let mut push = |c: &Rational, suffix: String| {
            terms.push((
                c.is_negative(),
                format!("{}{}", fmt_rational(&c.abs()), suffix),
            ));
        };
        if !self.one.is_zero() {
            push(&self.one, String::new());
        }
        if !self.pi.is_zero() {
            push(&self.pi, "*pi".to_string());
        }
        for (p, c) in &self.logs {
            push(c, format!("*ln({p})"));
        }
        terms
    }
}

impl Add for ExactValue {
    type Output = ExactValue;

    fn add(self, rhs: ExactValue) -> ExactValue {
        &self + &rhs
    }
}

impl Add for &ExactValue {
    type Output = ExactValue;

    fn add(self, rhs: &ExactValue) -> ExactValue {
        let mut out = ExactValue {
            one: &self.one + &rhs.one,
            pi: &self.pi + &rhs.pi,
            logs: self.logs.clone(),
        };
        for (p, c) in &rhs.logs {
            out.add_log(*p, c.clone());
        }
        out
    }
}

impl Neg for ExactValue {
    type Output = ExactValue;

    fn neg(self) -> ExactValue {
        self.scale(&Rational::from_integer((-1).into()))
    }
}

impl Sub for ExactValue {
    type Output = ExactValue;

    fn sub(self, rhs: ExactValue) -> ExactValue {
        self + (-rhs)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.rendered_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (negative, body)) in terms.iter().enumerate() {
            match (idx, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

struct ValueParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> ValueParser<'a> {
    fn err<T>(&self, expected: &str) -> Result<T, ExactError> {
        Err(ExactError::Parse {
            offset: self.pos,
            expected: expected.to_string(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, ExactError> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("digit");
        }
        let digits = &self.rest()[..len];
        self.pos += len;
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational, ExactError> {
        let num = self.uint()?;
        if self.eat("/") {
            let den = self.uint()?;
            if den.is_zero() {
                return self.err("non-zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn term(&mut self, sign: Rational, acc: &mut ExactValue) -> Result<(), ExactError> {
        let q = sign * self.rational()?;
        if self.eat("*pi") {
            *acc = &*acc + &ExactValue::pi_multiple(q);
        } else if self.eat("*ln(") {
            let start = self.pos;
            let arg = self.uint()?;
            if !self.eat(")") {
                return self.err("')'");
            }
            let arg = arg.to_u64().filter(|a| *a >= 1);
            let Some(arg) = arg else {
                self.pos = start;
                return self.err("positive logarithm argument");
            };
            *acc = &*acc + &ExactValue::ln_multiple(q, arg)?;
        } else {
            *acc = &*acc + &ExactValue::rational(q);
        }
        Ok(())
    }
}

impl FromStr for ExactValue {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = ValueParser { src: s, pos: 0 };
        let mut acc = ExactValue::zero();
        p.skip_ws();
        let one = Rational::from_integer(1.into());
        let sign = if p.eat("-") {
            -one.clone()
        } else {
            one.clone()
        };
        p.term(sign, &mut acc)?;
        loop {
            p.skip_ws();
            if p.pos == s.len() {
                return Ok(acc);
            }
            let sign = if p.eat("+") {
                one.clone()
            } else if p.eat("-") {
                -one.clone()
            } else {
                return p.err("'+', '-' or end of input");
            };
            p.skip_ws();
            p.term(sign, &mut acc)?;
        }
    }
}
