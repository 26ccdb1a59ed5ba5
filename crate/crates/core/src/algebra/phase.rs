//! Exact unit-modulus complex numbers `e^{iθ}` through the tangent
//! half-angle parametrization `s = tan(θ/2)`.

use num_traits::{One, Signed, Zero};

use super::gaussian::G;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// `e^{iθ} = (1 − s² + 2is)/(1 + s²)` with `s = tan(θ/2)` rational.
///
/// With `s` finite, `θ` ranges over `(−π, π)`; `s > 0` is exactly `0 < θ < π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitPhase {
    value: G,
    half_tangent: Rational,
}

impl UnitPhase {
    pub fn from_half_tangent(s: Rational) -> Self {
        let one = Rational::one();
        let den = &one + &s * &s;
        let re = (&one - &s * &s) / &den;
        let im = (int(2) * &s) / &den;
        Self {
            value: G::new(re, im),
            half_tangent: s,
        }
    }

    pub fn value(&self) -> &G {
        &self.value
    }

    pub fn half_tangent(&self) -> &Rational {
        &self.half_tangent
    }

    pub fn sin(&self) -> Rational {
        self.value.im.clone()
    }

    pub fn cos(&self) -> Rational {
        self.value.re.clone()
    }

    /// `tan θ`; fails at `θ = ±π/2`.
    pub fn tan(&self) -> Result<Rational> {
        if self.value.re.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.value.im / &self.value.re)
    }

    /// `e^{iθ}` raised to an integer power.
    pub fn pow(&self, e: i64) -> G {
        // unit modulus, never zero
        self.value.pow(e).expect("unit phase is invertible")
    }

    /// The phase of angle `θ − ψ`, where `other` carries `ψ`. Fails when the
    /// difference reaches `±π` and so leaves the half-tangent chart.
    pub fn sub_angle(&self, other: &UnitPhase) -> Result<UnitPhase> {
        let s = &self.half_tangent;
        let r = &other.half_tangent;
        let den = Rational::one() + s * r;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_half_tangent((s - r) / den))
    }

    /// `0 < θ < π`.
    pub fn in_upper_half_plane(&self) -> bool {
        self.half_tangent.is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn modulus_is_one() {
        for (a, b) in [(1, 2), (-3, 7), (5, 1), (0, 1)] {
            let ph = UnitPhase::from_half_tangent(rat(a, b));
            assert_eq!(ph.value().norm_sq(), int(1));
        }
    }

    #[test]
    fn right_angle() {
        let ph = UnitPhase::from_half_tangent(int(1));
        assert_eq!(ph.value(), &G::i());
        assert!(ph.tan().is_err());
    }

    #[test]
    fn angle_difference_matches_quotient() {
        let a = UnitPhase::from_half_tangent(rat(2, 3));
        let b = UnitPhase::from_half_tangent(rat(1, 5));
        let d = a.sub_angle(&b).unwrap();
        assert_eq!(d.value(), &a.value().checked_div(b.value()).unwrap());
    }
}
