//! Arbitrary-precision rationals and the small helpers built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number with a positive, coprime denominator.
pub type Rational = BigRational;

/// Builds `num/den` from machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serializes as `"num/den"`, always including the denominator.
pub fn rat_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// `r^e` for any integer exponent; `r` must be nonzero when `e < 0`.
pub fn rat_pow(r: &Rational, e: i64) -> Result<Rational> {
    if e < 0 {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return rat_pow(&r.recip(), -e);
    }
    let mut acc = Rational::one();
    let mut base = r.clone();
    let mut e = e as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    Ok(acc)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        assert_eq!(rat_to_string(&rat(6, -4)), "-3/2");
        assert_eq!(rat_to_string(&int(3)), "3/1");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&rat(1, 2), 3).unwrap(), rat(1, 8));
        assert_eq!(rat_pow(&rat(1, 2), -2).unwrap(), int(4));
        assert_eq!(rat_pow(&int(0), 0).unwrap(), int(1));
        assert!(rat_pow(&int(0), -1).is_err());
    }
}
