//! Independent checks for the Hermite case: brute-force linearization of
//! `H_m H_n` and the formal power series in `t` behind the exponential of
//! the raising operator.

use crate::algebra::{binomial, factorial, Poly, G};
use crate::error::{Error, Result};
use crate::families::{expand_in_basis, raise_chain, standard_poly, Family, ParamPoint};

fn hermite_point() -> ParamPoint {
    ParamPoint::new(Family::Hermite, &[])
}

fn hermite_basis(top: usize) -> Result<Vec<Poly>> {
    (0..=top).map(|d| standard_poly(&hermite_point(), d)).collect()
}

/// Coefficients `c_j` with `H_m H_n = Σ_j c_j H_j`, found by exact
/// triangular solve in the Hermite basis.
pub fn hermite_linearization_oracle(m: usize, n: usize) -> Result<Vec<G>> {
    let prod = &standard_poly(&hermite_point(), m)? * &standard_poly(&hermite_point(), n)?;
    expand_in_basis(&prod, &hermite_basis(m + n)?)
}

/// `c_{m+n−2r} = C(n,r) C(m,r) 2^r r!`, zero elsewhere.
pub fn feldheim_watson(m: usize, n: usize) -> Vec<G> {
    let mut out = vec![G::zero(); m + n + 1];
    for r in 0..=m.min(n) {
        let c = &(&binomial(n, r) * &binomial(m, r)) * &factorial(r);
        out[m + n - 2 * r] = G::from(c * crate::algebra::int(1 << r));
    }
    out
}

/// Substitutes the oracle linearization of every product `H_{n−r} H_{m−r}`
/// into the expansion of `H_{n+m}` and returns the collected coefficient
/// vector minus the unit vector at `n + m`.
pub fn feldheim_burchnall_consistency(n: usize, m: usize) -> Result<Vec<G>> {
    let mut total = vec![G::zero(); n + m + 1];
    for r in 0..=n.min(m) {
        let w = &G::from(&(&binomial(n, r) * &binomial(m, r)) * &factorial(r)) * &G::from_int(-2).pow(r as i64)?;
        for (j, c) in hermite_linearization_oracle(n - r, m - r)?.into_iter().enumerate() {
            total[j] += &(&w * &c);
        }
    }
    total[n + m] -= &G::one();
    Ok(total)
}

/// A power series in `t` truncated after `t^order`, with polynomial
/// coefficients in `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    pub coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    /// `exp(s)` for a series without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Unsupported("exp of a series with a constant term".into()));
        }
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = Poly::one();
        let mut power = out.clone();
        for j in 1..=order {
            power = power.mul(self);
            let inv = G::from(factorial(j)).inv()?;
            for (o, p) in out.coeffs.iter_mut().zip(&power.coeffs) {
                *o = &*o + &p.scale(&inv);
            }
        }
        Ok(out)
    }
}

/// `f(x + t)` as a series in `t`: the coefficient of `t^j` is `f^{(j)}/j!`.
fn taylor_shift(f: &Poly, order: usize) -> Result<TruncatedSeries> {
    let mut out = TruncatedSeries::zero(order);
    let mut d = f.clone();
    for j in 0..=order {
        out.coeffs[j] = d.scale(&G::from(factorial(j)).inv()?);
        d = d.derivative();
    }
    Ok(out)
}

/// `Σ_{n ≤ order} tⁿ/n! (d/dx − 2x)ⁿ f` minus the truncation of
/// `f(x + t) exp(−2xt − t²)`.
pub fn zassenhaus_series_residual(order: usize, f: &Poly) -> Result<TruncatedSeries> {
    let h = hermite_point();
    let spec = <Poly as crate::families::OpCarrier>::spec(Family::Hermite)?;
    let mut lhs = TruncatedSeries::zero(order);
    let mut cur = f.clone();
    for n in 0..=order {
        lhs.coeffs[n] = cur.scale(&G::from(factorial(n)).inv()?);
        cur = spec.raise(&h, &cur)?;
    }
    let mut exponent = TruncatedSeries::zero(order);
    if order >= 1 {
        exponent.coeffs[1] = Poly::monomial(G::from_int(-2), 1);
    }
    if order >= 2 {
        exponent.coeffs[2] = Poly::constant(G::from_int(-1));
    }
    let rhs = taylor_shift(f, order)?.mul(&exponent.exp()?);
    Ok(lhs.sub(&rhs))
}

/// Raising-chain Hermite polynomials; kept separate from the standard form
/// used above so the oracle shares no code path with the chain.
pub fn hermite_chain(n: usize) -> Result<Poly> {
    raise_chain(&hermite_point(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn linearization_examples() {
        // H₁H₁ = H₂ + 2H₀
        assert_eq!(
            hermite_linearization_oracle(1, 1).unwrap(),
            vec![G::from_int(2), G::zero(), G::one()]
        );
        // H₂H₁ = H₃ + 4H₁
        assert_eq!(
            hermite_linearization_oracle(2, 1).unwrap(),
            vec![G::zero(), G::from_int(4), G::zero(), G::one()]
        );
        let mut unit = vec![G::zero(); 4];
        unit[3] = G::one();
        assert_eq!(hermite_linearization_oracle(0, 3).unwrap(), unit);
    }

    #[test]
    fn linearization_matches_closed_coefficients() {
        for m in 0..=6 {
            for n in 0..=6 {
                assert_eq!(
                    hermite_linearization_oracle(m, n).unwrap(),
                    feldheim_watson(m, n),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn linearization_reassembles_hermite() {
        for n in 0..=5 {
            for m in 0..=5 {
                assert!(feldheim_burchnall_consistency(n, m).unwrap().iter().all(G::is_zero));
            }
        }
    }

    #[test]
    fn zassenhaus_low_orders() {
        assert!(zassenhaus_series_residual(0, &Poly::from_ints(&[1, 2]))
            .unwrap()
            .is_zero());
        assert!(zassenhaus_series_residual(1, &Poly::one()).unwrap().is_zero());
        assert!(zassenhaus_series_residual(2, &Poly::x()).unwrap().is_zero());
        let cubic = Poly::from_ints(&[1, 0, 0, 1]);
        assert!(zassenhaus_series_residual(4, &cubic).unwrap().is_zero());
    }

    #[test]
    fn chain_agrees_with_standard_up_to_sign() {
        for n in 0..=6 {
            let s = standard_poly(&hermite_point(), n).unwrap();
            let sign = G::from_int(if n % 2 == 0 { 1 } else { -1 });
            assert_eq!(hermite_chain(n).unwrap().scale(&sign), s);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn zassenhaus_random(cs in prop::collection::vec(-9i64..=9, 1..=4)) {
            let f = Poly::from_ints(&cs);
            prop_assert!(zassenhaus_series_residual(6, &f).unwrap().is_zero());
        }
    }
}
