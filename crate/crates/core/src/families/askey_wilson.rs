//! Askey–Wilson and continuous q-Hermite polynomials as symmetric Laurent
//! polynomials in `z`, where `x = (z + 1/z)/2` and `q = p²`.

use super::params::ParamPoint;
use super::series::{c_over_z, cz, q_rising};
use super::{Family, FamilySpec, LeibnizForm};
use crate::algebra::{int, q_binomial, q_pochhammer, Carrier, Laurent, Rational, G};
use crate::error::Result;
use crate::ops::{LoweringTag, Scheme};

fn aw_params(nu: &ParamPoint) -> Result<[G; 4]> {
    if nu.family == Family::CqHermite {
        return Ok([G::zero(), G::zero(), G::zero(), G::zero()]);
    }
    Ok([nu.g("a")?, nu.g("b")?, nu.g("c")?, nu.g("d")?])
}

fn base(nu: &ParamPoint) -> Result<(Rational, Rational)> {
    let p = nu.get("p")?;
    let q = &p * &p;
    Ok((p, q))
}

/// `−2[z⁻¹Π(1−ez) f(pz) − z³Π(1−e/z) f(z/p)] / ((1−q)(1−z²))`.
fn aw_raise(nu: &ParamPoint, f: &Laurent) -> Result<Laurent> {
    let ps = aw_params(nu)?;
    let (p, q) = base(nu)?;
    let pg = G::from(&p);
    let up = ps
        .iter()
        .fold(Laurent::one(), |acc, e| &acc * &(&Laurent::one() - &cz(e)));
    let down = ps
        .iter()
        .fold(Laurent::one(), |acc, e| &acc * &(&Laurent::one() - &c_over_z(e)));
    let first = &up.shift_exponent(-1) * &f.scale_var(&pg)?;
    let second = &down.shift_exponent(3) * &f.scale_var(&pg.inv()?)?;
    let num = (&first - &second).scale(&G::from_int(-2));
    let one_minus_q = G::from(Rational::from_integer(1.into()) - &q);
    let den = Laurent::new(0, vec![one_minus_q.clone(), G::zero(), -one_minus_q]);
    num.exact_divide(&den)
}

/// `a^{−n}(ab, ac, ad; q)_n ₄φ₃(q^{−n}, abcdq^{n−1}, az, a/z; ab, ac, ad; q, q)`.
fn aw_standard(nu: &ParamPoint, n: usize) -> Result<Laurent> {
    let [a, b, c, d] = aw_params(nu)?;
    let (_, q) = base(nu)?;
    let qg = G::from(&q);
    let n64 = n as i64;
    let lows = [&a * &b, &a * &c, &a * &d];
    let t1 = qg.pow(-n64)?;
    let t2 = &(&(&a * &b) * &(&c * &d)) * &qg.pow(n64 - 1)?;
    let mut out = Laurent::zero();
    for j in 0..=n {
        let numer = &(&q_pochhammer(&t1, &q, j) * &q_pochhammer(&t2, &q, j)) * &qg.pow(j as i64)?;
        let den = lows
            .iter()
            .fold(q_pochhammer(&qg, &q, j), |acc, l| &acc * &q_pochhammer(l, &q, j));
        let zpart = &q_rising(&cz(&a), &q, j) * &q_rising(&c_over_z(&a), &q, j);
        out = &out + &zpart.scale(&numer.checked_div(&den)?);
    }
    let pre = lows.iter().fold(a.pow(-n64)?, |acc, l| &acc * &q_pochhammer(l, &q, n));
    Ok(out.scale(&pre))
}

/// `H_n = Σ_j [n, j]_q z^{2j−n}`.
fn cqhermite_standard(nu: &ParamPoint, n: usize) -> Result<Laurent> {
    let (_, q) = base(nu)?;
    let mut out = Laurent::zero();
    for j in 0..=n {
        let c = G::from(q_binomial(n, j, &q)?);
        out = &out + &Laurent::monomial(c, 2 * j as i64 - n as i64);
    }
    Ok(out)
}

/// `(q − 1)^n p^{n(n−1)/2} / 2^n`.
fn aw_norm(nu: &ParamPoint, n: usize) -> Result<G> {
    let (p, q) = base(nu)?;
    let n64 = n as i64;
    let top = &G::from(q - int(1)).pow(n64)? * &G::from(p).pow(n64 * (n64 - 1) / 2)?;
    top.checked_div(&G::from_int(2).pow(n64)?)
}

/// `(−1)^k p^{−k²} z^{−2k} (az, bz, cz, dz; q)_k`.
fn aw_weight(nu: &ParamPoint, k: usize) -> Result<Laurent> {
    let ps = aw_params(nu)?;
    let (p, q) = base(nu)?;
    let k64 = k as i64;
    let prod = ps
        .iter()
        .fold(Laurent::one(), |acc, e| acc.mul(&q_rising(&cz(e), &q, k)));
    let s = &G::from_int(-1).pow(k64)? * &G::from(p).pow(-k64 * k64)?;
    Ok(prod.shift_exponent(-2 * k64).scale(&s))
}

pub fn askey_wilson() -> FamilySpec<Laurent> {
    FamilySpec {
        family: Family::AskeyWilson,
        raising: aw_raise,
        standard: aw_standard,
        normalization: aw_norm,
        lowering: LoweringTag::AwDq,
        forms: vec![LeibnizForm {
            scheme: Scheme::AskeyWilson,
            weight_ratio: aw_weight,
        }],
    }
}

pub fn cq_hermite() -> FamilySpec<Laurent> {
    FamilySpec {
        family: Family::CqHermite,
        raising: aw_raise,
        standard: cqhermite_standard,
        normalization: aw_norm,
        lowering: LoweringTag::AwDq,
        forms: vec![LeibnizForm {
            scheme: Scheme::AskeyWilson,
            weight_ratio: aw_weight,
        }],
    }
}
