//! Exact arithmetic in the Gaussian rationals ℚ(√−1).
//!
//! Every coefficient in the engine is a [`Scalar`]; there is no floating point
//! anywhere in the core, so identity checks are decided by syntactic equality.
//!
//! Textual form is `a/b+c/d*I`, omitting zero parts (`0` for zero, `1*I` for
//! the imaginary unit). Integers print without a denominator.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Parses `p`, `-p` or `p/q` into a [`Rational`].
pub fn parse_rational(text: &str) -> Result<Rational> {
  let text = text.trim();
  let bad = || Error::Parse(format!("invalid rational `{text}`"));
  let (num, den) = match text.split_once('/') {
    Some((n, d)) => (n.trim(), d.trim()),
    None => (text, "1"),
  };
  let num: BigInt = num.parse().map_err(|_| bad())?;
  let den: BigInt = den.parse().map_err(|_| bad())?;
  if den.is_zero() {
    return Err(Error::Domain(format!("zero denominator in `{text}`")));
  }
  Ok(Rational::new(num, den))
}

pub fn rational(num: i64, den: i64) -> Rational { Rational::new(num.into(), den.into()) }

fn fmt_rational(q: &Rational) -> String {
  if q.denom().is_one() {
    q.numer().to_string()
  } else {
    format!("{}/{}", q.numer(), q.denom())
  }
}

/// A Gaussian rational `re + im·√−1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
  pub re: Rational,
  pub im: Rational,
}

impl Scalar {
  pub fn new(re: Rational, im: Rational) -> Self { Self { re, im } }

  pub fn real(re: Rational) -> Self { Self { re, im: Rational::zero() } }

  pub fn from_int(v: i64) -> Self { Self::real(Rational::from_integer(v.into())) }

  pub fn from_ratio(num: i64, den: i64) -> Self { Self::real(rational(num, den)) }

  /// The imaginary unit √−1.
  pub fn i() -> Self { Self { re: Rational::zero(), im: Rational::one() } }

  pub fn conj(&self) -> Self { Self { re: self.re.clone(), im: -&self.im } }

  /// |z|² = re² + im².
  pub fn norm_sqr(&self) -> Rational { &self.re * &self.re + &self.im * &self.im }

  pub fn is_real(&self) -> bool { self.im.is_zero() }

  pub fn inv(&self) -> Result<Self> {
    let n = self.norm_sqr();
    if n.is_zero() {
      return Err(Error::Domain("inversion of zero".into()));
    }
    Ok(Self { re: &self.re / &n, im: -&self.im / &n })
  }

  /// Whether the textual form needs parentheses when used as a factor.
  pub fn is_compound(&self) -> bool { !self.re.is_zero() && !self.im.is_zero() }

  /// Least common multiple of both denominators.
  pub fn denom_lcm(&self) -> BigInt {
    use num_integer::Integer;
    self.re.denom().lcm(self.im.denom())
  }
}

impl Zero for Scalar {
  fn zero() -> Self { Self::default() }

  fn is_zero(&self) -> bool { self.re.is_zero() && self.im.is_zero() }
}

impl One for Scalar {
  fn one() -> Self { Self::real(Rational::one()) }
}

impl From<i64> for Scalar {
  fn from(v: i64) -> Self { Self::from_int(v) }
}

impl From<Rational> for Scalar {
  fn from(q: Rational) -> Self { Self::real(q) }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
  type Output = Scalar;

  fn add(self, rhs: &Scalar) -> Scalar { Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im } }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
  type Output = Scalar;

  fn sub(self, rhs: &Scalar) -> Scalar { Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im } }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
  type Output = Scalar;

  fn mul(self, rhs: &Scalar) -> Scalar {
    if self.im.is_zero() && rhs.im.is_zero() {
      return Scalar::real(&self.re * &rhs.re);
    }
    Scalar {
      re: &self.re * &rhs.re - &self.im * &rhs.im,
      im: &self.re * &rhs.im + &self.im * &rhs.re,
    }
  }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
  type Output = Scalar;

  /// Panics on division by zero; use [`Scalar::inv`] for a fallible inverse.
  fn div(self, rhs: &Scalar) -> Scalar { self * &rhs.inv().expect("division by zero scalar") }
}

macro_rules! forward_owned {
  ($tr:ident, $method:ident) => {
    impl $tr<Scalar> for Scalar {
      type Output = Scalar;

      fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
    }
    impl<'a> $tr<&'a Scalar> for Scalar {
      type Output = Scalar;

      fn $method(self, rhs: &Scalar) -> Scalar { (&self).$method(rhs) }
    }
  };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
  type Output = Scalar;

  fn neg(self) -> Scalar { Scalar { re: -self.re, im: -self.im } }
}

impl Neg for &Scalar {
  type Output = Scalar;

  fn neg(self) -> Scalar { Scalar { re: -&self.re, im: -&self.im } }
}

impl AddAssign<&Scalar> for Scalar {
  fn add_assign(&mut self, rhs: &Scalar) {
    self.re += &rhs.re;
    self.im += &rhs.im;
  }
}

impl SubAssign<&Scalar> for Scalar {
  fn sub_assign(&mut self, rhs: &Scalar) {
    self.re -= &rhs.re;
    self.im -= &rhs.im;
  }
}

impl MulAssign<&Scalar> for Scalar {
  fn mul_assign(&mut self, rhs: &Scalar) { *self = &*self * rhs; }
}

impl Sum for Scalar {
  fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
    iter.fold(Scalar::zero(), |mut acc, x| {
      acc += &x;
      acc
    })
  }
}

impl fmt::Display for Scalar {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (self.re.is_zero(), self.im.is_zero()) {
      (true, true) => write!(f, "0"),
      (false, true) => write!(f, "{}", fmt_rational(&self.re)),
      (true, false) => write!(f, "{}*I", fmt_rational(&self.im)),
      (false, false) => {
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}*I", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
      },
    }
  }
}

impl FromStr for Scalar {
  type Err = Error;

  /// Accepts the printed form: `q`, `q*I`, `I`, `q+q*I`, `q-q*I` (and `-I`).
  fn from_str(text: &str) -> Result<Self> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
      return Err(Error::Parse("empty scalar".into()));
    }
    // Split at the last sign that is not in leading position.
    let split = s
      .char_indices()
      .skip(1)
      .filter(|&(_, c)| c == '+' || c == '-')
      .map(|(i, _)| i)
      .last();
    let parse_imag = |part: &str| -> Result<Rational> {
      let body = part.strip_suffix('I').ok_or_else(|| Error::Parse(format!("invalid scalar `{text}`")))?;
      let body = body.strip_suffix('*').unwrap_or(body);
      match body {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        b => parse_rational(b.strip_prefix('+').unwrap_or(b)),
      }
    };
    match split {
      Some(i) if s.ends_with('I') => {
        let re = parse_rational(&s[..i])?;
        let im = parse_imag(&s[i..])?;
        Ok(Scalar::new(re, im))
      },
      _ if s.ends_with('I') => Ok(Scalar::new(Rational::zero(), parse_imag(s)?)),
      _ => Ok(Scalar::real(parse_rational(s)?)),
    }
  }
}
