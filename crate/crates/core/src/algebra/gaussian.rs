//! Exact complex numbers over the rationals, `Q(i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rational::{int, rat, rat_to_string, Rational};
use crate::error::{Error, Result};

/// `re + i·im` with both parts exact rationals. This is the coefficient
/// scalar for every polynomial in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

pub type G = GaussianRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::real(rat(num, den))
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
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
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    /// Applies one of the four field operations; only division can fail.
    pub fn arith(&self, rhs: &Self, op: ArithOp) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl From<&Rational> for GaussianRational {
    fn from(r: &Rational) -> Self {
        Self::real(r.clone())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a G> for &'a G {
    type Output = G;
    fn add(self, rhs: &G) -> G {
        G::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a G> for &'a G {
    type Output = G;
    fn sub(self, rhs: &G) -> G {
        G::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a G> for &'a G {
    type Output = G;
    fn mul(self, rhs: &G) -> G {
        G::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &G {
    type Output = G;
    fn neg(self) -> G {
        G::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for G {
    type Output = G;
    fn neg(self) -> G {
        G::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<G> for G {
            type Output = G;
            fn $m(self, rhs: G) -> G { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a G> for G {
            type Output = G;
            fn $m(self, rhs: &G) -> G { (&self).$m(rhs) }
        }
        impl<'a> $tr<G> for &'a G {
            type Output = G;
            fn $m(self, rhs: G) -> G { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&G> for G {
    fn add_assign(&mut self, rhs: &G) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&G> for G {
    fn sub_assign(&mut self, rhs: &G) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&G> for G {
    fn mul_assign(&mut self, rhs: &G) {
        *self = &*self * rhs;
    }
}

fn fmt_part(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_part(&self.re)),
            (true, false) => write!(f, "{}i", fmt_part(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({}{}{}i)", fmt_part(&self.re), sign, fmt_part(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &rat_to_string(&self.re))?;
        st.serialize_field("im", &rat_to_string(&self.im))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> G {
        G::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn conjugate_product() {
        let a = g(1, 1, 1, 1);
        assert_eq!(&a * &a.conj(), G::from_int(2));
    }

    #[test]
    fn i_over_i() {
        assert_eq!(G::i().arith(&G::i(), ArithOp::Div).unwrap(), G::one());
    }

    #[test]
    fn conjugate_sum() {
        let a = g(1, 2, 1, 3);
        assert_eq!(a.arith(&a.conj(), ArithOp::Add).unwrap(), G::one());
    }

    #[test]
    fn divide_by_zero_is_error() {
        assert_eq!(G::one().arith(&G::zero(), ArithOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(g(1, 2, -1, 3).to_string(), "(1/2-1/3i)");
        assert_eq!(G::i().to_string(), "1i");
        assert_eq!(G::from_frac(-3, 4).to_string(), "-3/4");
    }

    #[test]
    fn serializes_parts_as_strings() {
        let s = serde_json::to_string(&g(1, 2, 3, 1)).unwrap();
        assert_eq!(s, r#"{"re":"1/2","im":"3/1"}"#);
    }
}
