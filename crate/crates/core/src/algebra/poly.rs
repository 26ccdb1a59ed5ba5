//! Dense univariate polynomials over `Q(i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::G;
use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `x^k`. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<G>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(G::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(G::one())
    }

    pub fn x() -> Self {
        Self::new(vec![G::zero(), G::one()])
    }

    pub fn constant(c: G) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: G, k: usize) -> Self {
        let mut coeffs = vec![G::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `αx + β`.
    pub fn linear(alpha: G, beta: G) -> Self {
        Self::new(vec![beta, alpha])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| G::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[G] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> G {
        self.coeffs.get(k).cloned().unwrap_or_else(G::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&G> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &G) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, at: &G) -> G {
        self.coeffs.iter().rev().fold(G::zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `x ↦ f(αx + β)`.
    pub fn compose_affine(&self, alpha: &G, beta: &G) -> Self {
        let lin = Self::linear(alpha.clone(), beta.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// `x ↦ f(x + β)`.
    pub fn shift(&self, beta: &G) -> Self {
        self.compose_affine(&G::one(), beta)
    }

    /// `x ↦ f(αx)`, computed coefficientwise.
    pub fn dilate(&self, alpha: &G) -> Self {
        let mut pw = G::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = &pw * alpha;
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &G::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division over the field `Q(i)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![G::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &dlead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[i + j] -= &t;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Returns `h` with `self = divisor·h`; a nonzero remainder is an error.
    pub fn exact_divide(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor}) leaves {r}")));
        }
        Ok(q)
    }

    /// Scaled to leading coefficient 1.
    pub fn monic(&self) -> Result<Poly> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&lead.inv()?))
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// All odd-index coefficients vanish.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(G::is_zero)
    }

    /// Human-readable leading term, e.g. `3/2*x^4`.
    pub fn leading_term(&self) -> String {
        match self.degree() {
            None => "0".to_owned(),
            Some(d) => format!("{}*x^{}", self.coeffs[d], d),
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![G::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let x = Poly::x();
        assert_eq!(&x * &x, Poly::from_ints(&[0, 0, 1]));
        let a = Poly::from_ints(&[-1, 1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[-1, 0, 1]));
        let f = Poly::from_ints(&[3, 0, 2]);
        assert_eq!(&Poly::zero() + &f, f);
    }

    #[test]
    fn affine_composition() {
        let x2 = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(
            x2.compose_affine(&G::one(), &G::from_int(-1)),
            Poly::from_ints(&[1, -2, 1])
        );
        let half = G::from_frac(1, 2);
        assert_eq!(
            Poly::x().compose_affine(&half, &G::zero()),
            Poly::constant(half.clone()).mul(&Poly::x())
        );
        let ihalf = G::i().scale(&crate::algebra::rat(1, 2));
        assert_eq!(Poly::x().shift(&ihalf), Poly::linear(G::one(), ihalf));
    }

    #[test]
    fn exact_division() {
        let f = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(
            f.exact_divide(&Poly::from_ints(&[-1, 1])).unwrap(),
            Poly::from_ints(&[1, 1])
        );
        assert_eq!(f.exact_divide(&Poly::one()).unwrap(), f);
        assert!(matches!(
            Poly::x().exact_divide(&Poly::from_ints(&[0, 0, 1])),
            Err(Error::InexactDivision(_))
        ));
        assert_eq!(f.exact_divide(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn dilate_matches_compose() {
        let f = Poly::from_ints(&[1, -2, 3, 4]);
        let a = G::from_frac(2, 3);
        assert_eq!(f.dilate(&a), f.compose_affine(&a, &G::zero()));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[2, 1]);
        let b = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[5, 3]);
        assert_eq!(a.gcd(&b).unwrap(), Poly::from_ints(&[-1, 1]));
    }
}
