//! Closed-form expansions of `p_{n+m}` in products of lower-degree
//! polynomials, each written out term by term in the standard normalization.

use super::{check_shifts, AnyExpansion, ClosedId, Expansion};
use crate::algebra::{binomial, factorial, pochhammer, q_pochhammer, Laurent, Poly, Rational, G};
use crate::error::Result;
use crate::families::series::{affine, cz, q_rising, rising};
use crate::families::{standard_poly, Family, OpCarrier, ParamPoint};
use crate::ops::{half_i_shift, shift_s};

/// The scalar in front of `p_{n+m}` on the left-hand side.
pub fn lhs_factor(id: ClosedId, n: usize, m: usize) -> G {
    match id {
        ClosedId::Laguerre | ClosedId::Jacobi | ClosedId::MeixnerPollaczek => G::from(binomial(n + m, n)),
        _ => G::one(),
    }
}

/// Literal transcription of the expansion `id` at `(ν, n, m)`.
pub fn closed_expansion(id: ClosedId, nu: &ParamPoint, n: usize, m: usize) -> Result<AnyExpansion> {
    if nu.family != id.family() {
        return Err(crate::Error::Unsupported(format!(
            "{id} needs {} parameters, got {}",
            id.family(),
            nu.family
        )));
    }
    check_shifts(nu, n + m)?;
    Ok(match id {
        ClosedId::Hermite => AnyExpansion::X(hermite(n, m)?),
        ClosedId::Laguerre => AnyExpansion::X(laguerre(nu, n, m)?),
        ClosedId::Jacobi => AnyExpansion::X(jacobi(nu, n, m)?),
        ClosedId::MeixnerEta1 => AnyExpansion::X(meixner_eta1(nu, n, m)?),
        ClosedId::MeixnerEtaS => AnyExpansion::X(meixner_eta_s(nu, n, m)?),
        ClosedId::CharlierEta1 => AnyExpansion::X(charlier_eta1(nu, n, m)?),
        ClosedId::CharlierEtaS => AnyExpansion::X(charlier_eta_s(nu, n, m)?),
        ClosedId::MeixnerPollaczek => AnyExpansion::X(meixner_pollaczek(nu, n, m)?),
        ClosedId::Wilson => AnyExpansion::X(wilson(nu, n, m)?),
        ClosedId::BigQJacobiTq => AnyExpansion::X(big_q_jacobi_tq(nu, n, m)?),
        ClosedId::BigQJacobiI => AnyExpansion::X(big_q_jacobi_id(nu, n, m)?),
        ClosedId::AskeyWilson | ClosedId::CqHermite => AnyExpansion::Z(askey_wilson(nu, n, m)?),
    })
}

fn fact(n: usize) -> G {
    G::from(factorial(n))
}

fn neg(n: usize) -> G {
    G::from_int(-(n as i64))
}

/// `p_d` at `ν + kσ`.
fn std_at(nu: &ParamPoint, k: usize, d: usize) -> Result<Poly> {
    standard_poly(&nu.family.shift(nu, k as i64)?, d)
}

fn lhs(id: ClosedId, nu: &ParamPoint, n: usize, m: usize) -> Result<Poly> {
    Ok(standard_poly(nu, n + m)?.scale(&lhs_factor(id, n, m)))
}

/// `(−n)_k (−m)_k`.
fn lower_pair(n: usize, m: usize, k: usize) -> G {
    &pochhammer(&neg(n), k) * &pochhammer(&neg(m), k)
}

fn hermite(n: usize, m: usize) -> Result<Expansion<Poly>> {
    let h = ParamPoint::new(Family::Hermite, &[]);
    let mut terms = vec![];
    for r in 0..=n.min(m) {
        let coef = &G::from(&binomial(n, r) * &binomial(m, r)) * &(&G::from_int(-2).pow(r as i64)? * &fact(r));
        let t = &standard_poly(&h, n - r)? * &standard_poly(&h, m - r)?;
        terms.push((r, t.scale(&coef)));
    }
    Ok(Expansion {
        lhs: standard_poly(&h, n + m)?,
        terms,
    })
}

fn laguerre(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let mx = Poly::monomial(G::from_int(-1).pow(k as i64)?.checked_div(&fact(k))?, k);
        let t = &(&mx * &std_at(nu, k, n - k)?) * &std_at(nu, n + k, m - k)?;
        terms.push((k, t));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::Laguerre, nu, n, m)?,
        terms,
    })
}

fn jacobi(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let ab = &nu.g("alpha")? + &nu.g("beta")?;
    let top = &ab + &G::from_int((2 * n + m + 1) as i64);
    let quarter = Poly::new(vec![G::from_frac(-1, 4), G::zero(), G::from_frac(1, 4)]);
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let coef = pochhammer(&top, k).checked_div(&fact(k))?;
        let t = &(&quarter.pow(k) * &std_at(nu, k, n - k)?) * &std_at(nu, n + k, m - k)?;
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::Jacobi, nu, n, m)?,
        terms,
    })
}

fn meixner_eta1(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let b = nu.g("beta")?;
    let c = nu.g("c")?;
    let ratio = (&c - &G::one()).checked_div(&c)?;
    let bn = &b + &G::from_int(n as i64);
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let den = &(&fact(k) * &pochhammer(&b, k)) * &pochhammer(&bn, k);
        let coef = (&lower_pair(n, m, k) * &ratio.pow(k as i64)?).checked_div(&den)?;
        let bx = rising(&affine(G::one(), b.clone()), k);
        let t = &(&bx * &std_at(nu, k, n - k)?) * &shift_s(&std_at(nu, n + k, m - k)?, n as i64);
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::MeixnerEta1, nu, n, m)?,
        terms,
    })
}

fn meixner_eta_s(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let b = nu.g("beta")?;
    let c = nu.g("c")?;
    let ratio = (&G::one() - &c).checked_div(&(&c * &c))?;
    let bn = &b + &G::from_int(n as i64);
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let den = &(&fact(k) * &pochhammer(&b, k)) * &pochhammer(&bn, k);
        let coef = (&lower_pair(n, m, k) * &ratio.pow(k as i64)?).checked_div(&den)?;
        let mx = rising(&-&Poly::x(), k);
        let k64 = k as i64;
        let t = &(&mx * &shift_s(&std_at(nu, k, n - k)?, k64)) * &shift_s(&std_at(nu, n + k, m - k)?, k64);
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::MeixnerEtaS, nu, n, m)?,
        terms,
    })
}

fn charlier_eta1(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let a = nu.g("a")?;
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let coef = lower_pair(n, m, k).checked_div(&(&fact(k) * &(-&a).pow(k as i64)?))?;
        let t = &std_at(nu, 0, n - k)? * &shift_s(&std_at(nu, 0, m - k)?, n as i64);
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::CharlierEta1, nu, n, m)?,
        terms,
    })
}

fn charlier_eta_s(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let a = nu.g("a")?;
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let coef = lower_pair(n, m, k).checked_div(&(&fact(k) * &a.pow(2 * k as i64)?))?;
        let k64 = k as i64;
        let t =
            &(&rising(&-&Poly::x(), k) * &shift_s(&std_at(nu, 0, n - k)?, k64)) * &shift_s(&std_at(nu, 0, m - k)?, k64);
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::CharlierEtaS, nu, n, m)?,
        terms,
    })
}

fn meixner_pollaczek(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let lam = nu.g("lambda")?;
    let ph = nu.phase()?;
    let two_sin = G::from(ph.sin() * crate::algebra::int(2));
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let k64 = k as i64;
        let coef = &(&(-&G::i()).pow(k64)? * &ph.pow(-k64)) * &two_sin.pow(k64)?;
        let coef = coef.checked_div(&fact(k))?;
        let lx = rising(&affine(G::i(), lam.clone()), k);
        let left = half_i_shift(&std_at(nu, k, n - k)?, -k64);
        let right = half_i_shift(&std_at(nu, n + k, m - k)?, n as i64 - k64);
        terms.push((k, (&(&lx * &left) * &right).scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::MeixnerPollaczek, nu, n, m)?,
        terms,
    })
}

fn wilson(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let ps = [nu.g("a")?, nu.g("b")?, nu.g("c")?, nu.g("d")?];
    let sum = ps.iter().fold(G::zero(), |acc, e| &acc + e);
    let top = &sum + &G::from_int((m + 2 * n) as i64 - 1);
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let k64 = k as i64;
        let coef = (&lower_pair(n, m, k) * &pochhammer(&top, k)).checked_div(&fact(k))?;
        let prod = ps
            .iter()
            .fold(Poly::one(), |acc, e| &acc * &rising(&affine(G::i(), e.clone()), k));
        let left = half_i_shift(&std_at(nu, k, n - k)?, -k64);
        let right = half_i_shift(&std_at(nu, n + k, m - k)?, n as i64 - k64);
        terms.push((k, (&(&prod * &left) * &right).scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::Wilson, nu, n, m)?,
        terms,
    })
}

struct BigQ {
    a: G,
    b: G,
    c: G,
    q: Rational,
    qg: G,
}

fn big_q(nu: &ParamPoint) -> Result<BigQ> {
    let q = nu.q()?;
    Ok(BigQ {
        a: nu.g("a")?,
        b: nu.g("b")?,
        c: nu.g("c")?,
        qg: G::from(&q),
        q,
    })
}

/// `(q^{−n}, q^{−m}, abq^{2n+m+1}; q)_k / (q, aq, cq, aq^{n+1}, cq^{n+1}; q)_k`.
fn big_q_ratio(s: &BigQ, n: usize, m: usize, k: usize) -> Result<G> {
    let BigQ { a, b, c, q, qg } = s;
    let (n64, m64) = (n as i64, m as i64);
    let tops = [qg.pow(-n64)?, qg.pow(-m64)?, &(a * b) * &qg.pow(2 * n64 + m64 + 1)?];
    let qn1 = qg.pow(n64 + 1)?;
    let bottoms = [qg.clone(), a * qg, c * qg, a * &qn1, c * &qn1];
    let num = tops.iter().fold(G::one(), |acc, t| &acc * &q_pochhammer(t, q, k));
    let den = bottoms.iter().fold(G::one(), |acc, t| &acc * &q_pochhammer(t, q, k));
    num.checked_div(&den)
}

fn big_q_jacobi_tq(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let s = big_q(nu)?;
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let k64 = k as i64;
        let pw = &(&s.a * &s.c).pow(k64)? * &s.qg.pow(k64 * k64 + 2 * k64 + n as i64 * k64)?;
        let coef = &big_q_ratio(&s, n, m, k)? * &pw;
        let w = &q_rising(&Poly::x(), &s.q, k) * &q_rising(&Poly::monomial(s.b.checked_div(&s.c)?, 1), &s.q, k);
        let qk = s.qg.pow(k64)?;
        let left = std_at(nu, k, n - k)?.dilate(&qk);
        let right = std_at(nu, n + k, m - k)?.dilate(&qk);
        terms.push((k, (&(&w * &left) * &right).scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::BigQJacobiTq, nu, n, m)?,
        terms,
    })
}

fn big_q_jacobi_id(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Poly>> {
    let s = big_q(nu)?;
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let k64 = k as i64;
        let pw = &(&s.a * &s.c).pow(k64)? * &s.qg.pow(k64 * (k64 + n as i64 + 2))?;
        let coef = &big_q_ratio(&s, n, m, k)? * &pw;
        let qmk = s.qg.pow(-k64)?;
        let w = &q_rising(&Poly::monomial(qmk.checked_div(&s.a)?, 1), &s.q, k)
            * &q_rising(&Poly::monomial(qmk.checked_div(&s.c)?, 1), &s.q, k);
        let left = std_at(nu, k, n - k)?;
        let right = std_at(nu, n + k, m - k)?.dilate(&s.qg.pow(n as i64)?);
        terms.push((k, (&(&w * &left) * &right).scale(&coef)));
    }
    Ok(Expansion {
        lhs: lhs(ClosedId::BigQJacobiI, nu, n, m)?,
        terms,
    })
}

/// Askey–Wilson and (all parameters zero) continuous q-Hermite.
fn askey_wilson(nu: &ParamPoint, n: usize, m: usize) -> Result<Expansion<Laurent>> {
    let spec = Laurent::spec(nu.family)?;
    let ps = if nu.family == Family::CqHermite {
        [G::zero(), G::zero(), G::zero(), G::zero()]
    } else {
        [nu.g("a")?, nu.g("b")?, nu.g("c")?, nu.g("d")?]
    };
    let p = nu.g("p")?;
    let q = nu.q()?;
    let qg = G::from(&q);
    let (n64, m64) = (n as i64, m as i64);
    let abcd = ps.iter().fold(G::one(), |acc, e| &acc * e);
    let tops = [qg.pow(-n64)?, qg.pow(-m64)?, &abcd * &qg.pow(2 * n64 + m64 - 1)?];
    let std_at = |k: usize, d: usize| -> Result<Laurent> { spec.standard(&nu.family.shift(nu, k as i64)?, d) };
    let mut terms = vec![];
    for k in 0..=n.min(m) {
        let k64 = k as i64;
        let num = tops.iter().fold(G::one(), |acc, t| &acc * &q_pochhammer(t, &q, k));
        let pw = p.pow(-2 * k64 * k64 + 2 * k64 + n64 * m64 + k64 * m64 + 2 * n64 * k64)?;
        let coef = &num.checked_div(&q_pochhammer(&qg, &q, k))? * &pw;
        let w = ps
            .iter()
            .fold(Laurent::one(), |acc, e| &acc * &q_rising(&cz(e), &q, k))
            .shift_exponent(-2 * k64);
        let left = std_at(k, n - k)?.scale_var(&p.pow(k64)?)?;
        let right = std_at(n + k, m - k)?.scale_var(&p.pow(k64 - n64)?)?;
        terms.push((k, (&(&w * &left) * &right).scale(&coef)));
    }
    Ok(Expansion {
        lhs: spec.standard(nu, n + m)?,
        terms,
    })
}
