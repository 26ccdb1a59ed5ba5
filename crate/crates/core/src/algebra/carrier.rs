//! Common ring interface for the two polynomial carriers: polynomials in `x`
//! and Laurent polynomials in `z` with `x = (z + 1/z)/2`.

use std::fmt;

use super::gaussian::G;
use super::laurent::{laurent_to_poly, lift_to_laurent, Laurent};
use super::poly::Poly;
use crate::error::Result;

pub trait Carrier: Clone + PartialEq + fmt::Display + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &G) -> Self;

    /// Embeds a polynomial in `x`.
    fn from_poly(p: &Poly) -> Self;

    /// Back to a polynomial in `x`; fails for Laurent polynomials that are
    /// not symmetric.
    fn to_poly(&self) -> Result<Poly>;

    fn leading_term(&self) -> String;

    fn constant(c: G) -> Self {
        Self::from_poly(&Poly::constant(c))
    }

    fn x() -> Self {
        Self::from_poly(&Poly::x())
    }
}

impl Carrier for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &G) -> Self {
        Poly::scale(self, c)
    }
    fn from_poly(p: &Poly) -> Self {
        p.clone()
    }
    fn to_poly(&self) -> Result<Poly> {
        Ok(self.clone())
    }
    fn leading_term(&self) -> String {
        Poly::leading_term(self)
    }
}

impl Carrier for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &G) -> Self {
        Laurent::scale(self, c)
    }
    fn from_poly(p: &Poly) -> Self {
        lift_to_laurent(p)
    }
    fn to_poly(&self) -> Result<Poly> {
        laurent_to_poly(self)
    }
    fn leading_term(&self) -> String {
        Laurent::leading_term(self)
    }
}

/// `Σ terms`, starting from zero.
pub fn sum<E: Carrier>(terms: impl IntoIterator<Item = E>) -> E {
    terms.into_iter().fold(E::zero(), |acc, t| acc.add(&t))
}
