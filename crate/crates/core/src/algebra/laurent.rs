//! Laurent polynomials in `z`, and the symmetric subring `f(z) = f(1/z)`
//! identified with polynomials in `x = (z + 1/z)/2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::G;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `Σ coeffs[j] z^{low + j}`. Both ends are trimmed; zero has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<G>,
}

impl Laurent {
    pub fn new(low: i64, mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(G::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead_zeros);
        if coeffs.is_empty() {
            return Self::zero();
        }
        Self {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        Self {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(G::one())
    }

    pub fn constant(c: G) -> Self {
        Self::new(0, vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: G, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    /// `z`.
    pub fn z() -> Self {
        Self::monomial(G::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> G {
        let j = k - self.low;
        if j < 0 {
            return G::zero();
        }
        self.coeffs.get(j as usize).cloned().unwrap_or_else(G::zero)
    }

    pub fn scale(&self, c: &G) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `z ↦ f(pz)`. Requires `p ≠ 0` when negative exponents are present.
    pub fn scale_var(&self, p: &G) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut pw = p.pow(self.low)?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = &pw * p;
        }
        Ok(Self::new(self.low, out))
    }

    /// `z ↦ f(1/z)`.
    pub fn reflect(&self) -> Self {
        match self.high() {
            None => Self::zero(),
            Some(h) => Self::new(-h, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    /// Multiplies by `z^k`.
    pub fn shift_exponent(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Returns `h` with `self = divisor·h`; a nonzero remainder is an error.
    pub fn exact_divide(&self, divisor: &Laurent) -> Result<Laurent> {
        let dlow = divisor.low().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = Poly::new(self.coeffs.clone());
        let den = Poly::new(divisor.coeffs.clone());
        let q = num
            .exact_divide(&den)
            .map_err(|_| Error::InexactDivision(format!("({self}) / ({divisor})")))?;
        Ok(Self::new(self.low - dlow, q.coeffs().to_vec()))
    }

    pub fn to_symmetric(&self) -> Result<SymLaurent> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let top = self.high().unwrap_or(0).max(0);
        Ok(SymLaurent::new((0..=top).map(|k| self.coeff(k)).collect()))
    }

    pub fn leading_term(&self) -> String {
        match self.high() {
            None => "0".to_owned(),
            Some(h) => format!("{}*z^{}", self.coeff(h), h),
        }
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        combine(self, rhs, false)
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        combine(self, rhs, true)
    }
}

fn combine(a: &Laurent, b: &Laurent, negate_b: bool) -> Laurent {
    let (Some(al), Some(bl)) = (a.low(), b.low()) else {
        return if a.is_zero() {
            if negate_b {
                -b
            } else {
                b.clone()
            }
        } else {
            a.clone()
        };
    };
    let low = al.min(bl);
    let high = a.high().unwrap().max(b.high().unwrap());
    let coeffs = (low..=high)
        .map(|k| {
            if negate_b {
                &a.coeff(k) - &b.coeff(k)
            } else {
                &a.coeff(k) + &b.coeff(k)
            }
        })
        .collect();
    Laurent::new(low, coeffs)
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
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
        Laurent::new(self.low + rhs.low, out)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent::new(self.low, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match self.low + j as i64 {
                0 => write!(f, "{c}")?,
                k => write!(f, "{c}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent[{self}]")
    }
}

/// Symmetric Laurent polynomial: `coeffs[k]` multiplies both `z^k` and
/// `z^{-k}` (for `k = 0` just the constant).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymLaurent {
    coeffs: Vec<G>,
}

impl SymLaurent {
    pub fn new(mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(G::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[G] {
        &self.coeffs
    }

    /// Largest `k` with a nonzero coefficient of `z^k`.
    pub fn degree_bound(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn to_laurent(&self) -> Laurent {
        let Some(top) = self.degree_bound() else {
            return Laurent::zero();
        };
        let top = top as i64;
        Laurent::new(
            -top,
            (-top..=top)
                .map(|k| self.coeffs[k.unsigned_abs() as usize].clone())
                .collect(),
        )
    }

    /// `z ↦ f(pz)` as a general (no longer symmetric) Laurent polynomial.
    pub fn scale(&self, p: &G) -> Result<Laurent> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.to_laurent().scale_var(p)
    }
}

impl fmt::Debug for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymLaurent[{}]", self.to_laurent())
    }
}

/// `(z + 1/z)/2`.
pub fn lifted_x() -> Laurent {
    let half = G::from_frac(1, 2);
    Laurent::new(-1, vec![half.clone(), G::zero(), half])
}

/// Substitutes `x = (z + 1/z)/2`.
pub fn chebyshev_lift(f: &Poly) -> SymLaurent {
    lift_to_laurent(f)
        .to_symmetric()
        .expect("lift of a polynomial in x is symmetric")
}

pub fn lift_to_laurent(f: &Poly) -> Laurent {
    let lx = lifted_x();
    f.coeffs()
        .iter()
        .rev()
        .fold(Laurent::zero(), |acc, c| &(&acc * &lx) + &Laurent::constant(c.clone()))
}

/// Inverse of [`chebyshev_lift`], using `z^k + z^{-k} = 2 T_k(x)`.
pub fn chebyshev_project(f: &SymLaurent) -> Poly {
    let two = G::from_int(2);
    let two_x = Poly::x().scale(&two);
    let mut t_prev = Poly::one();
    let mut t_cur = Poly::x();
    let mut out = Poly::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        let basis = match k {
            0 => Poly::one(),
            1 => t_cur.scale(&two),
            _ => {
                let next = &(&two_x * &t_cur) - &t_prev;
                t_prev = std::mem::replace(&mut t_cur, next);
                t_cur.scale(&two)
            }
        };
        out = &out + &basis.scale(c);
    }
    out
}

/// Projects a general Laurent polynomial known to be symmetric.
pub fn laurent_to_poly(f: &Laurent) -> Result<Poly> {
    Ok(chebyshev_project(&f.to_symmetric()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(n: i64) -> G {
        G::from_frac(n, 2)
    }

    #[test]
    fn lifts() {
        assert_eq!(chebyshev_lift(&Poly::x()).to_laurent(), lifted_x());
        let x2 = chebyshev_lift(&Poly::from_ints(&[0, 0, 1]));
        let q = G::from_frac(1, 4);
        assert_eq!(
            x2.to_laurent(),
            Laurent::new(-2, vec![q.clone(), G::zero(), half(1), G::zero(), q])
        );
        assert_eq!(chebyshev_lift(&Poly::one()).to_laurent(), Laurent::one());
    }

    #[test]
    fn scaling_breaks_symmetry() {
        let p = G::from_int(2);
        let lx = chebyshev_lift(&Poly::x());
        let scaled = lx.scale(&p).unwrap();
        assert_eq!(scaled, Laurent::new(-1, vec![G::from_frac(1, 4), G::zero(), G::one()]));
        assert!(!scaled.is_symmetric());
        let x2 = chebyshev_lift(&Poly::from_ints(&[0, 0, 1]));
        let expect = Laurent::new(-2, vec![G::from_frac(1, 16), G::zero(), half(1), G::zero(), G::one()]);
        assert_eq!(x2.scale(&p).unwrap(), expect);
        assert_eq!(
            SymLaurent::new(vec![G::one()]).scale(&G::from_int(7)).unwrap(),
            Laurent::one()
        );
    }

    #[test]
    fn project_inverts_lift() {
        let f = Poly::from_ints(&[3, -1, 4, 1, -5, 9]);
        assert_eq!(chebyshev_project(&chebyshev_lift(&f)), f);
    }

    #[test]
    fn exact_division_and_reflect() {
        let a = Laurent::new(-1, vec![G::one(), G::from_int(2)]);
        let b = Laurent::new(2, vec![G::from_int(-1), G::one()]);
        let prod = &a * &b;
        assert_eq!(prod.exact_divide(&b).unwrap(), a);
        assert_eq!(prod.exact_divide(&a).unwrap(), b);
        assert_eq!(a.reflect(), Laurent::new(0, vec![G::from_int(2), G::one()]));
        assert!(Laurent::z()
            .exact_divide(&Laurent::new(0, vec![G::one(), G::one()]))
            .is_err());
    }
}
