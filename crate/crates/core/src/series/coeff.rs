use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SeriesError;
use crate::exact::{
    biguint_to_f64, fmt_rational, mul_radicands, rational_to_f64, sqrt_rational, Rational,
};

/// A real number `Σ r·√s·π^e` with rational `r`, squarefree `s` and integer
/// `e`. Closed under the ring operations; zero terms are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesCoeff {
    terms: BTreeMap<(i32, BigUint), Rational>,
}

impl SeriesCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        Self::monomial(q, BigUint::one(), 0)
    }

    /// `q·π^e`
    pub fn pi_power(q: Rational, e: i32) -> Self {
        Self::monomial(q, BigUint::one(), e)
    }

    /// `√q` for `q ≥ 0`.
    pub fn sqrt(q: &Rational) -> Self {
        let (outer, radicand) = sqrt_rational(q);
        Self::monomial(outer, radicand, 0)
    }

    fn monomial(q: Rational, radicand: BigUint, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert((e, radicand), q);
        }
        SeriesCoeff { terms }
    }

    fn add_term(&mut self, key: (i32, BigUint), q: Rational) {
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        SeriesCoeff {
            terms: self.terms.iter().map(|(k, r)| (k.clone(), r * q)).collect(),
        }
    }

    /// Monomials as `(r, s, e)`.
    pub fn monomials(&self) -> impl Iterator<Item = (&Rational, &BigUint, i32)> {
        self.terms.iter().map(|((e, s), r)| (r, s, *e))
    }

    pub fn to_f64(&self) -> f64 {
        self.monomials()
            .map(|(r, s, e)| {
                rational_to_f64(r) * biguint_to_f64(s).sqrt() * std::f64::consts::PI.powi(e)
            })
            .sum()
    }
}

impl Add for &SeriesCoeff {
    type Output = SeriesCoeff;

    fn add(self, rhs: &SeriesCoeff) -> SeriesCoeff {
        let mut out = self.clone();
        for (k, q) in &rhs.terms {
            out.add_term(k.clone(), q.clone());
        }
        out
    }
}

impl Add for SeriesCoeff {
    type Output = SeriesCoeff;

    fn add(self, rhs: SeriesCoeff) -> SeriesCoeff {
        &self + &rhs
    }
}

impl Neg for &SeriesCoeff {
    type Output = SeriesCoeff;

    fn neg(self) -> SeriesCoeff {
        self.scale(&-Rational::one())
    }
}

impl Neg for SeriesCoeff {
    type Output = SeriesCoeff;

    fn neg(self) -> SeriesCoeff {
        -&self
    }
}

impl Sub for &SeriesCoeff {
    type Output = SeriesCoeff;

    fn sub(self, rhs: &SeriesCoeff) -> SeriesCoeff {
        self + &(-rhs)
    }
}

impl Sub for SeriesCoeff {
    type Output = SeriesCoeff;

    fn sub(self, rhs: SeriesCoeff) -> SeriesCoeff {
        &self - &rhs
    }
}

impl Mul for &SeriesCoeff {
    type Output = SeriesCoeff;

    fn mul(self, rhs: &SeriesCoeff) -> SeriesCoeff {
        let mut out = SeriesCoeff::zero();
        for ((e1, s1), r1) in &self.terms {
            for ((e2, s2), r2) in &rhs.terms {
                let (outer, radicand) = mul_radicands(s1, s2);
                let q = r1 * r2 * Rational::from_integer(BigInt::from(outer));
                out.add_term((e1 + e2, radicand), q);
            }
        }
        out
    }
}

impl Mul for SeriesCoeff {
    type Output = SeriesCoeff;

    fn mul(self, rhs: SeriesCoeff) -> SeriesCoeff {
        &self * &rhs
    }
}

fn fmt_monomial(r: &Rational, s: &BigUint, e: i32) -> String {
    let mut out = fmt_rational(r);
    if !s.is_one() {
        out.push_str(&format!("*sqrt({s})"));
    }
    match e {
        0 => {}
        1 => out.push_str("*pi"),
        _ => out.push_str(&format!("*pi^({e})")),
    }
    out
}

impl fmt::Display for SeriesCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (r, s, e)) in self.monomials().enumerate() {
            let body = fmt_monomial(&r.abs(), s, e);
            match (idx, r.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

struct CoeffParser<'a> {
    src: &'a str,
    pos: usize,
}

impl CoeffParser<'_> {
    fn err<T>(&self, expected: &str) -> Result<T, SeriesError> {
        Err(SeriesError::BadCoefficient {
            text: self.src.to_string(),
            offset: self.pos,
            expected: expected.to_string(),
        })
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn int(&mut self) -> Result<BigInt, SeriesError> {
        let negative = self.eat("-");
        let len = self.src[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return self.err("digit");
        }
        let n: BigInt = self.src[self.pos..self.pos + len]
            .parse()
            .expect("ascii digits");
        self.pos += len;
        Ok(if negative { -n } else { n })
    }

    fn monomial(&mut self, negative: bool) -> Result<SeriesCoeff, SeriesError> {
        let num = self.int()?;
        let mut q = Rational::from_integer(num);
        if self.eat("/") {
            let den = self.int()?;
            if !den.is_positive() {
                return self.err("positive denominator");
            }
            q /= Rational::from_integer(den);
        }
        if negative {
            q = -q;
        }
        let mut c = SeriesCoeff::rational(q);
        if self.eat("*sqrt(") {
            let s = self.int()?;
            if s.is_negative() || !self.eat(")") {
                return self.err("non-negative integer and ')'");
            }
            c = &c * &SeriesCoeff::sqrt(&Rational::from_integer(s));
        }
        if self.eat("*pi") {
            let e = if self.eat("^(") {
                let e = self.int()?;
                if !self.eat(")") {
                    return self.err("')'");
                }
                e
            } else if self.eat("^") {
                self.int()?
            } else {
                BigInt::one()
            };
            let Some(e) = e.to_i32() else {
                return self.err("small pi exponent");
            };
            c = &c * &SeriesCoeff::pi_power(Rational::one(), e);
        }
        Ok(c)
    }
}

impl FromStr for SeriesCoeff {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = CoeffParser {
            src: s.trim(),
            pos: 0,
        };
        let negative = p.eat("-");
        let mut acc = p.monomial(negative)?;
        loop {
            p.skip_ws();
            if p.pos == p.src.len() {
                return Ok(acc);
            }
            let negative = if p.eat("+") {
                false
            } else if p.eat("-") {
                true
            } else {
                return p.err("'+', '-' or end of field");
            };
            p.skip_ws();
            acc = &acc + &p.monomial(negative)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn radicals_and_pi_multiply() {
        let r2 = SeriesCoeff::sqrt(&int(2));
        assert_eq!(&r2 * &r2, SeriesCoeff::rational(int(2)));
        let half = SeriesCoeff::sqrt(&rat(1, 2));
        assert_eq!(half.scale(&int(2)), r2);
        let p = SeriesCoeff::pi_power(int(3), -1) * SeriesCoeff::pi_power(rat(1, 3), 1);
        assert_eq!(p, SeriesCoeff::one());
        assert!((r2 - SeriesCoeff::sqrt(&int(8)).scale(&rat(1, 2))).is_zero());
    }

    #[test]
    fn render_and_parse() {
        let c = SeriesCoeff::pi_power(rat(-4, 9), -1) + SeriesCoeff::sqrt(&int(12));
        assert_eq!(c.to_string(), "-4/9*pi^(-1) + 2*sqrt(3)");
        assert_eq!(c.to_string().parse::<SeriesCoeff>().unwrap(), c);
        assert_eq!(
            "1/2*pi".parse::<SeriesCoeff>().unwrap(),
            SeriesCoeff::pi_power(rat(1, 2), 1)
        );
        assert_eq!(
            "-3".parse::<SeriesCoeff>().unwrap(),
            SeriesCoeff::rational(int(-3))
        );
        assert!("2*pie".parse::<SeriesCoeff>().is_err());
        assert!("1/0".parse::<SeriesCoeff>().is_err());
    }

    #[test]
    fn float_value() {
        let c = SeriesCoeff::pi_power(rat(1, 2), 1);
        assert_eq!(c.to_f64(), std::f64::consts::FRAC_PI_2);
        assert_eq!(
            SeriesCoeff::sqrt(&rat(1, 2)).to_f64(),
            std::f64::consts::FRAC_1_SQRT_2
        );
    }
}
