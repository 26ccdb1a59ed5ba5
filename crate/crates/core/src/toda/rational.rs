//! Reduced rational functions in one variable with Gaussian-rational
//! coefficients.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Poly, G};
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = (num.exact_divide(&g)?, den.exact_divide(&g)?);
        let lead = den.leading().ok_or(Error::DivisionByZero)?.inv()?;
        Ok(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: G) -> Self {
        Self::poly(Poly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Self::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Self::new(&(&self.num * &rhs.den) - &(&rhs.num * &self.den), &self.den * &rhs.den)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &G) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `(num' den − num den') / den²`.
    pub fn derivative(&self) -> Result<Self> {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(top, &self.den * &self.den)
    }

    pub fn eval(&self, at: &G) -> Result<G> {
        self.num.eval(at).checked_div(&self.den.eval(at))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces() {
        // (x² − 1)/(2x + 2) = (x − 1)/2
        let r = RationalFunction::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[2, 2])).unwrap();
        assert_eq!(r.num(), &Poly::new(vec![G::from_frac(-1, 2), G::from_frac(1, 2)]));
        assert_eq!(r.den(), &Poly::one());
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/(1+x) = −1/(1+x)²
        let r = RationalFunction::new(Poly::one(), Poly::from_ints(&[1, 1])).unwrap();
        let d = r.derivative().unwrap();
        assert_eq!(d.num(), &Poly::from_ints(&[-1]));
        assert_eq!(d.den(), &Poly::from_ints(&[1, 2, 1]));
        assert!(r.sub(&r).unwrap().is_zero());
        assert_eq!(r.eval(&G::from_int(1)).unwrap(), G::from_frac(1, 2));
    }
}
