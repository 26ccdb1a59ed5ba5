//! Lowering, shift and difference operators on the two carriers.

use crate::algebra::{q_number, Laurent, Poly, Rational, SymLaurent, G};
use crate::error::{Error, Result};

pub fn derivative(f: &Poly) -> Poly {
    f.derivative()
}

/// `f(x + h)`.
pub fn shift(f: &Poly, h: &G) -> Poly {
    f.shift(h)
}

/// `S^k f = f(x − k)`.
pub fn shift_s(f: &Poly, k: i64) -> Poly {
    f.shift(&G::from_int(-k))
}

/// `∇f = f(x) − f(x−1)`.
pub fn backward_shift(f: &Poly) -> Poly {
    f - &shift_s(f, 1)
}

/// `Δf = f(x+1) − f(x)`.
pub fn forward_shift(f: &Poly) -> Poly {
    &shift_s(f, -1) - f
}

/// `f(x + k·i/2)`; `k = 1` is `S⁺`, `k = −1` is `S⁻`.
pub fn half_i_shift(f: &Poly, k: i64) -> Poly {
    f.shift(&G::new(Rational::from_integer(0.into()), crate::algebra::rat(k, 2)))
}

/// `(f(x + i/2) − f(x − i/2)) / i`.
pub fn delta_x(f: &Poly) -> Poly {
    // 1/i = −i
    (&half_i_shift(f, 1) - &half_i_shift(f, -1)).scale(&-G::i())
}

/// `(f(x + i/2) − f(x − i/2)) / (2ix)`. Requires the numerator to vanish at
/// `x = 0`, which holds for even `f`.
pub fn delta_x2(f: &Poly) -> Result<Poly> {
    let num = &half_i_shift(f, 1) - &half_i_shift(f, -1);
    let den = Poly::monomial(G::i().scale(&crate::algebra::int(2)), 1);
    num.exact_divide(&den)
        .map_err(|_| Error::InexactDivision(format!("δ/δx² is undefined on {f}")))
}

/// `T_q f = f(qx)`.
pub fn q_dilate(f: &Poly, q: &Rational) -> Poly {
    f.dilate(&G::from(q))
}

/// `(f(x) − f(qx)) / ((1 − q)x)`, i.e. `x^k ↦ [k]_q x^{k−1}`.
pub fn q_derivative(f: &Poly, q: &Rational) -> Poly {
    Poly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&q_number(k, q)))
            .collect(),
    )
}

/// `η^power`: `z ↦ f(p^{power} z)`.
pub fn aw_eta(f: &SymLaurent, p: &Rational, power: i64) -> Result<Laurent> {
    aw_eta_laurent(&f.to_laurent(), p, power)
}

pub fn aw_eta_laurent(f: &Laurent, p: &Rational, power: i64) -> Result<Laurent> {
    f.scale_var(&G::from(p).pow(power)?)
}

/// Askey–Wilson divided difference on a symmetric input.
pub fn aw_dq(f: &SymLaurent, p: &Rational) -> Result<SymLaurent> {
    aw_dq_laurent(&f.to_laurent(), p)?.to_symmetric()
}

/// `(f(pz) − f(z/p)) / (½(p − 1/p)(z − 1/z))` with exact Laurent division.
pub fn aw_dq_laurent(f: &Laurent, p: &Rational) -> Result<Laurent> {
    let pg = G::from(p);
    let num = &f.scale_var(&pg)? - &f.scale_var(&pg.inv()?)?;
    let c = (&pg - &pg.inv()?).scale(&crate::algebra::rat(1, 2));
    let den = Laurent::new(-1, vec![-c.clone(), G::zero(), c]);
    num.exact_divide(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{chebyshev_lift, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative(&p(&[0, 0, 1])), p(&[0, 2]));
        assert_eq!(derivative(&p(&[7])), Poly::zero());
        assert_eq!(derivative(&p(&[0, -1, 0, 1])), p(&[-1, 0, 3]));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(backward_shift(&Poly::x()), Poly::one());
        assert_eq!(backward_shift(&p(&[0, 0, 1])), p(&[-1, 2]));
        assert_eq!(backward_shift(&Poly::one()), Poly::zero());
        assert_eq!(forward_shift(&Poly::x()), Poly::one());
        assert_eq!(forward_shift(&p(&[0, 0, 1])), p(&[1, 2]));
        assert_eq!(forward_shift(&Poly::one()), Poly::zero());
    }

    #[test]
    fn divided_differences() {
        assert_eq!(delta_x(&Poly::x()), Poly::one());
        assert_eq!(delta_x(&p(&[0, 0, 1])), p(&[0, 2]));
        assert_eq!(delta_x(&Poly::one()), Poly::zero());
        assert_eq!(delta_x2(&p(&[0, 0, 1])).unwrap(), Poly::one());
        assert_eq!(delta_x2(&Poly::one()).unwrap(), Poly::zero());
        let expect = Poly::new(vec![G::from_frac(-1, 2), G::zero(), G::from_int(2)]);
        assert_eq!(delta_x2(&p(&[0, 0, 0, 0, 1])).unwrap(), expect);
        assert!(delta_x2(&p(&[0, 0, 0, 1])).is_err());
    }

    #[test]
    fn q_derivative_examples() {
        let q = rat(1, 2);
        assert_eq!(q_derivative(&Poly::x(), &q), Poly::one());
        assert_eq!(q_derivative(&p(&[0, 0, 1]), &q), Poly::monomial(G::from_frac(3, 2), 1));
        assert_eq!(q_derivative(&Poly::one(), &q), Poly::zero());
        let f = p(&[3, -1, 4, 1, -5]);
        let direct = (&f - &q_dilate(&f, &q))
            .exact_divide(&Poly::monomial(G::from(&(crate::algebra::int(1) - &q)), 1))
            .unwrap();
        assert_eq!(q_derivative(&f, &q), direct);
    }

    #[test]
    fn askey_wilson_operators() {
        let pp = rat(1, 2);
        let lx = chebyshev_lift(&Poly::x());
        assert_eq!(aw_dq(&lx, &pp).unwrap(), chebyshev_lift(&Poly::one()));
        assert_eq!(
            aw_dq(&chebyshev_lift(&Poly::one()), &pp).unwrap(),
            SymLaurent::new(vec![])
        );
        let x2 = chebyshev_lift(&p(&[0, 0, 1]));
        let expect = chebyshev_lift(&Poly::x().scale(&G::from_frac(5, 2)));
        assert_eq!(aw_dq(&x2, &pp).unwrap(), expect);

        let one = chebyshev_lift(&Poly::one());
        assert_eq!(aw_eta(&one, &pp, 3).unwrap(), Laurent::one());
        let half = G::from_frac(1, 2);
        let up = Laurent::new(-1, vec![G::one(), G::zero(), G::from_frac(1, 4)]);
        assert_eq!(aw_eta(&lx, &pp, 1).unwrap(), up);
        let down = Laurent::new(-1, vec![G::from_frac(1, 4), G::zero(), G::one()]);
        assert_eq!(aw_eta(&lx, &pp, -1).unwrap(), down);
        assert_eq!(
            aw_eta(&lx, &pp, 0).unwrap(),
            Laurent::new(-1, vec![half.clone(), G::zero(), half])
        );
    }
}
