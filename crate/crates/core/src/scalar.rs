//! Scalar traits the algebra is generic over, plus helpers for the exact
//! rational type.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}
impl Field for BigRational {}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}
impl Field for f64 {}

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn qf(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Serialize as `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_to_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p"`, `"p/q"`, `"-p/q"` or a terminating decimal such as `"-5.04"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{ip}{fp}").parse().map_err(|_| bad())?;
        return Ok(BigRational::new(digits, num_traits::pow(BigInt::from(10), fp.len())));
    }
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Decimal rendering of `x` rounded half away from zero to `digits` places.
pub fn rational_to_decimal(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let a = scaled.abs();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let r = (a + half).floor().to_integer();
    let s = r.to_string();
    let body = if digits == 0 {
        s
    } else {
        let padded = format!("{:0>width$}", s, width = digits + 1);
        let (ip, fp) = padded.split_at(padded.len() - digits);
        format!("{ip}.{fp}")
    };
    if neg && !r.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// Lossy conversion used only for plotting and tolerance checks.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_strings() {
        for s in ["0", "7", "-3/4", "1/2"] {
            assert_eq!(rational_to_string(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(rational_to_string(&parse_rational("6/4").unwrap()), "3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("-0.25").unwrap(), qf(-1, 4));
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(rational_to_decimal(&qf(-1, 3), 4), "-0.3333");
        assert_eq!(rational_to_decimal(&qf(2, 3), 2), "0.67");
        assert_eq!(rational_to_decimal(&qf(-1, 1000), 2), "0.00");
        assert_eq!(rational_to_decimal(&q(-5), 0), "-5");
        assert_eq!(rational_to_decimal(&qf(1, 20), 1), "0.1");
    }
}
