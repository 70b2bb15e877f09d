//! Exact Gaussian-rational scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coeff {
    re: Rational,
    im: Rational,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid coefficient literal `{0}`")]
pub struct CoeffParseError(pub String);

impl Coeff {
    pub fn new(re: Rational, im: Rational) -> Self {
        Coeff { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Coeff { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::real(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Coeff::real(Rational::from_integer(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Coeff::real(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Coeff { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        Coeff::real(Rational::zero())
    }

    pub fn one() -> Self {
        Coeff::real(Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Coeff { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Coeff { re: &self.re * r, im: &self.im * r }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl From<Rational> for Coeff {
    fn from(r: Rational) -> Self {
        Coeff::real(r)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        Coeff { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        Coeff { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        &self - &rhs
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Coeff::real(&self.re * &rhs.re);
        }
        Coeff {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { re: -self.re, im: -self.im }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -(self.clone())
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coeff {
    /// `3/2`, `1/2i`, `3/2+1/2i`, `-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im = if self.im.is_one() {
            String::new()
        } else if (-self.im.clone()).is_one() {
            "-".to_string()
        } else {
            fmt_rational(&self.im)
        };
        if self.re.is_zero() {
            write!(f, "{im}i")
        } else if self.im.is_positive() {
            write!(f, "{}+{im}i", fmt_rational(&self.re))
        } else {
            write!(f, "{}{im}i", fmt_rational(&self.re))
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl FromStr for Coeff {
    type Err = CoeffParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CoeffParseError(s.to_string());
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(t).map(Coeff::real).ok_or_else(err);
        };
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (re_part, im_part) = match split {
            Some(i) => (Some(&body[..i]), &body[i..]),
            None => (None, body),
        };
        let im = match im_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other).ok_or_else(err)?,
        };
        let re = match re_part {
            Some(r) => parse_rational(r).ok_or_else(err)?,
            None => Rational::zero(),
        };
        Ok(Coeff { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_gaussian_literals() {
        for lit in ["3/2", "-2", "1/2i", "3/2+1/2i", "-1-i", "i", "-i", "0", "5/3-7/2i"] {
            let c: Coeff = lit.parse().unwrap();
            assert_eq!(c.to_string(), lit, "literal {lit}");
        }
        let c: Coeff = "(3/2+1/2i)".parse().unwrap();
        assert_eq!(c, Coeff::new(Rational::new(3.into(), 2.into()), Rational::new(1.into(), 2.into())));
        assert!("1/0".parse::<Coeff>().is_err());
        assert!("abc".parse::<Coeff>().is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a: Coeff = "1+i".parse().unwrap();
        let b: Coeff = "1-i".parse().unwrap();
        assert_eq!(&a * &b, Coeff::from_int(2));
        assert_eq!(a.conj(), b);
        assert_eq!(&Coeff::i() * &Coeff::i(), Coeff::from_int(-1));
        assert_eq!(&Coeff::ratio(1, 3) + &Coeff::ratio(1, 6), Coeff::ratio(1, 2));
    }
}
