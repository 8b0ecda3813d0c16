//! Exact coefficient fields and rational helpers.

use std::fmt::Debug;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Integer = BigInt;

/// Sign of an element of an ordered field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_int(i: &BigInt) -> Sign {
        match i.sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn of_rational(r: &Rational) -> Sign {
        Sign::of_int(r.numer())
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

/// The exact field contract shared by every coefficient domain.
///
/// Methods are named rather than operator based so generic code reads the
/// same for rationals, algebraic numbers and number-field elements.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(i: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(i)))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn eq_exact(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    fn is_one(&self) -> bool {
        self.eq_exact(&Self::one())
    }
}

/// Fields carrying a decidable order.
pub trait OrderedField: Field {
    fn sign(&self) -> Sign;
}

impl Field for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if <Rational as Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn eq_exact(&self, other: &Self) -> bool {
        self == other
    }
}

impl OrderedField for Rational {
    fn sign(&self) -> Sign {
        Sign::of_rational(self)
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `2^k` for possibly negative `k`.
pub fn pow2(k: i64) -> Rational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: &Rational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

/// Nearest integer, ties rounded up.
pub fn round(r: &Rational) -> BigInt {
    floor(&(r + rat(1, 2)))
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn bit_length(n: &BigInt) -> u64 {
    n.bits()
}

/// Largest `m / 2^k` with `m / 2^k <= sqrt(r)`.
pub fn sqrt_lower(r: &Rational, k: u32) -> Rational {
    assert!(!r.is_negative(), "sqrt of negative rational");
    let scaled = r * Rational::from_integer(BigInt::one() << (2 * k as u64));
    let m = floor(&scaled).sqrt();
    Rational::new(m, BigInt::one() << k)
}

/// Smallest `m / 2^k` with `m / 2^k >= sqrt(r)`.
pub fn sqrt_upper(r: &Rational, k: u32) -> Rational {
    assert!(!r.is_negative(), "sqrt of negative rational");
    let scaled = r * Rational::from_integer(BigInt::one() << (2 * k as u64));
    let c = ceil(&scaled);
    let mut m = c.sqrt();
    if &m * &m < c {
        m += 1;
    }
    Rational::new(m, BigInt::one() << k)
}

/// Parses `[+-]digits[/digits]`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|c| c.is_ascii_digit());
    let body = num.strip_prefix(['-', '+']).unwrap_or(num);
    if !digits(body) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering truncated toward the nearest value with `digits` places.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = round(&(r * Rational::from_integer(scale.clone())));
    let neg = scaled.is_negative();
    let mag = scaled.abs();
    let (ip, fp) = mag.div_rem(&scale);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if digits > 0 {
        let f = fp.to_string();
        s.push('.');
        for _ in f.len()..digits {
            s.push('0');
        }
        s.push_str(&f);
    }
    s
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/7").unwrap(), rat(-3, 7));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert_eq!(parse_rational("+6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&rat(-3, 7)), "-3/7");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn floors() {
        assert_eq!(floor(&rat(-1, 2)), BigInt::from(-1));
        assert_eq!(ceil(&rat(-1, 2)), BigInt::from(0));
        assert_eq!(floor(&rat(7, 3)), BigInt::from(2));
        assert_eq!(round(&rat(5, 2)), BigInt::from(3));
    }

    #[test]
    fn dyadic_sqrt() {
        let lo = sqrt_lower(&int(2), 16);
        let hi = sqrt_upper(&int(2), 16);
        assert!(&lo * &lo <= int(2));
        assert!(&hi * &hi >= int(2));
        assert_eq!(&hi - &lo, pow2(-16));
        assert_eq!(sqrt_lower(&int(9), 4), int(3));
        assert_eq!(sqrt_upper(&int(9), 4), int(3));
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&rat(-2, 3), 3), "-0.667");
        assert_eq!(to_decimal(&int(5), 0), "5");
        assert_eq!(to_decimal(&rat(1, 20), 3), "0.050");
    }
}
