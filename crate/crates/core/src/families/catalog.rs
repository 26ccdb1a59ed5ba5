//! Families carried by polynomials in `x`: raising operators, standard
//! hypergeometric forms, normalizations and Leibniz weight ratios.

use super::params::ParamPoint;
use super::series::{affine, q_rising, rising};
use super::{FamilySpec, LeibnizForm};
use crate::algebra::rational::rat_pow;
use crate::algebra::{factorial, int, pochhammer, q_pochhammer, rat, Poly, Rational, G};
use crate::error::Result;
use crate::ops::{half_i_shift, shift_s, LoweringTag, Scheme};

fn x() -> Poly {
    Poly::x()
}

fn c(v: G) -> Poly {
    Poly::constant(v)
}

fn fact(n: usize) -> G {
    G::from(factorial(n))
}

fn div(a: &G, b: &G) -> Result<G> {
    a.checked_div(b)
}

// Hermite

fn hermite_raise(_: &ParamPoint, f: &Poly) -> Result<Poly> {
    Ok(&f.derivative() - &(&affine(G::from_int(2), G::zero()) * f))
}

/// `(2x)^n ₂F₀(−n/2, −(n−1)/2; ; −x⁻²)`.
fn hermite_standard(_: &ParamPoint, n: usize) -> Result<Poly> {
    let a = G::from(rat(-(n as i64), 2));
    let b = G::from(rat(1 - n as i64, 2));
    let mut out = Poly::zero();
    for j in 0..=n / 2 {
        let coef = div(&(&pochhammer(&a, j) * &pochhammer(&b, j)), &fact(j))?;
        let coef = &(&coef * &G::from_int(2).pow(n as i64)?) * &G::from_int(-1).pow(j as i64)?;
        out = &out + &Poly::monomial(coef, n - 2 * j);
    }
    Ok(out)
}

fn hermite_norm(_: &ParamPoint, n: usize) -> Result<G> {
    G::from_int(-1).pow(n as i64)
}

fn unit_weight(_: &ParamPoint, _: usize) -> Result<Poly> {
    Ok(Poly::one())
}

pub fn hermite() -> FamilySpec<Poly> {
    FamilySpec {
        family: super::Family::Hermite,
        raising: hermite_raise,
        standard: hermite_standard,
        normalization: hermite_norm,
        lowering: LoweringTag::Derivative,
        forms: vec![LeibnizForm {
            scheme: Scheme::Derivative,
            weight_ratio: unit_weight,
        }],
    }
}

// Laguerre

fn laguerre_raise(nu: &ParamPoint, f: &Poly) -> Result<Poly> {
    let a = nu.g("nu")?;
    let lin = affine(G::from_int(-1), &a + &G::one());
    Ok(&(&lin * f) + &(&x() * &f.derivative()))
}

/// `(ν+1)_n/n! ₁F₁(−n; ν+1; x)`.
fn laguerre_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let a1 = &nu.g("nu")? + &G::one();
    let mn = G::from_int(-(n as i64));
    let mut out = Poly::zero();
    for j in 0..=n {
        let coef = div(&pochhammer(&mn, j), &(&pochhammer(&a1, j) * &fact(j)))?;
        out = &out + &Poly::monomial(coef, j);
    }
    Ok(out.scale(&div(&pochhammer(&a1, n), &fact(n))?))
}

fn inv_factorial_norm(_: &ParamPoint, n: usize) -> Result<G> {
    fact(n).inv()
}

fn laguerre_weight(_: &ParamPoint, k: usize) -> Result<Poly> {
    Ok(Poly::monomial(G::one(), k))
}

pub fn laguerre() -> FamilySpec<Poly> {
    FamilySpec {
        family: super::Family::Laguerre,
        raising: laguerre_raise,
        standard: laguerre_standard,
        normalization: inv_factorial_norm,
        lowering: LoweringTag::Derivative,
        forms: vec![LeibnizForm {
            scheme: Scheme::Derivative,
            weight_ratio: laguerre_weight,
        }],
    }
}

// Jacobi

fn jacobi_raise(nu: &ParamPoint, f: &Poly) -> Result<Poly> {
    let a = nu.g("alpha")?;
    let b = nu.g("beta")?;
    let one_minus_x2 = Poly::from_ints(&[1, 0, -1]);
    let lin = affine(-&(&(&a + &b) + &G::from_int(2)), &b - &a);
    Ok(&(&one_minus_x2 * &f.derivative()) + &(&lin * f))
}

/// `(α+1)_n/n! ₂F₁(−n, n+α+β+1; α+1; (1−x)/2)`.
fn jacobi_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let a = nu.g("alpha")?;
    let b = nu.g("beta")?;
    let a1 = &a + &G::one();
    let top = &(&(&a + &b) + &G::one()) + &G::from_int(n as i64);
    let mn = G::from_int(-(n as i64));
    let arg = affine(G::from_frac(-1, 2), G::from_frac(1, 2));
    let mut out = Poly::zero();
    for j in 0..=n {
        let coef = div(
            &(&pochhammer(&mn, j) * &pochhammer(&top, j)),
            &(&pochhammer(&a1, j) * &fact(j)),
        )?;
        out = &out + &arg.pow(j).scale(&coef);
    }
    Ok(out.scale(&div(&pochhammer(&a1, n), &fact(n))?))
}

fn jacobi_norm(_: &ParamPoint, n: usize) -> Result<G> {
    (&G::from_int(-2).pow(n as i64)? * &fact(n)).inv()
}

fn jacobi_weight(_: &ParamPoint, k: usize) -> Result<Poly> {
    Ok(Poly::from_ints(&[1, 0, -1]).pow(k))
}

pub fn jacobi() -> FamilySpec<Poly> {
    FamilySpec {
        family: super::Family::Jacobi,
        raising: jacobi_raise,
        standard: jacobi_standard,
        normalization: jacobi_norm,
        lowering: LoweringTag::Derivative,
        forms: vec![LeibnizForm {
            scheme: Scheme::Derivative,
            weight_ratio: jacobi_weight,
        }],
    }
}

// Meixner

fn meixner_raise(nu: &ParamPoint, f: &Poly) -> Result<Poly> {
    let b = nu.g("beta")?;
    let cc = nu.g("c")?;
    let binv = b.inv()?;
    let first = affine(binv.clone(), G::one());
    let second = Poly::monomial(-&(&binv * &cc.inv()?), 1);
    Ok(&(&first * f) + &(&second * &shift_s(f, 1)))
}

/// `₂F₁(−n, −x; β; 1 − 1/c)`.
fn meixner_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let b = nu.g("beta")?;
    let cc = nu.g("c")?;
    let z = &G::one() - &cc.inv()?;
    let mn = G::from_int(-(n as i64));
    let mut out = Poly::zero();
    for j in 0..=n {
        let coef = div(
            &(&pochhammer(&mn, j) * &z.pow(j as i64)?),
            &(&pochhammer(&b, j) * &fact(j)),
        )?;
        out = &out + &rising(&-&x(), j).scale(&coef);
    }
    Ok(out)
}

fn unit_norm(_: &ParamPoint, _: usize) -> Result<G> {
    Ok(G::one())
}

fn meixner_weight_eta1(nu: &ParamPoint, k: usize) -> Result<Poly> {
    let b = nu.g("beta")?;
    Ok(rising(&affine(G::one(), b.clone()), k).scale(&pochhammer(&b, k).inv()?))
}

fn meixner_weight_eta_s(nu: &ParamPoint, k: usize) -> Result<Poly> {
    let b = nu.g("beta")?;
    let cc = nu.g("c")?;
    let den = &pochhammer(&b, k) * &cc.pow(k as i64)?;
    let s = div(&G::from_int(-1).pow(k as i64)?, &den)?;
    Ok(rising(&-&x(), k).scale(&s))
}

pub fn meixner() -> FamilySpec<Poly> {
    FamilySpec {
        family: super::Family::Meixner,
        raising: meixner_raise,
        standard: meixner_standard,
        normalization: unit_norm,
        lowering: LoweringTag::NegForwardShift,
        forms: vec![
            LeibnizForm {
                scheme: Scheme::BackwardShiftEta1,
                weight_ratio: meixner_weight_eta1,
            },
            LeibnizForm {
                scheme: Scheme::BackwardShiftEtaS,
                weight_ratio: meixner_weight_eta_s,
            },
        ],
    }
}

// Charlier

fn charlier_raise(nu: &ParamPoint, f: &Poly) -> Result<Poly> {
    let a = nu.g("a")?;
    Ok(f - &(&Poly::monomial(a.inv()?, 1) * &shift_s(f, 1)))
}

/// `₂F₀(−n, −x; ; −1/a)`.
fn charlier_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let z = -&nu.g("a")?.inv()?;
    let mn = G::from_int(-(n as i64));
    let mut out = Poly::zero();
    for j in 0..=n {
        let coef = div(&(&pochhammer(&mn, j) * &z.pow(j as i64)?), &fact(j))?;
        out = &out + &rising(&-&x(), j).scale(&coef);
    }
    Ok(out)
}

fn charlier_weight_eta_s(nu: &ParamPoint, k: usize) -> Result<Poly> {
    let s = (-&nu.g("a")?).pow(-(k as i64))?;
    Ok(rising(&-&x(), k).scale(&s))
}

pub fn charlier() -> FamilySpec<Poly> {
    FamilySpec {
        family: super::Family::Charlier,
        raising: charlier_raise,
        standard: charlier_standard,
        normalization: unit_norm,
        lowering: LoweringTag::NegForwardShift,
        forms: vec![
            LeibnizForm {
                scheme: Scheme::BackwardShiftEta1,
                weight_ratio: unit_weight,
            },
            LeibnizForm {
                scheme: Scheme::BackwardShiftEtaS,
                weight_ratio: charlier_weight_eta_s,
            },
        ],
    }
}

// Meixner–Pollaczek

fn mp_raise(nu: &ParamPoint, f: &Poly) -> Result<Poly> {
    let lam = nu.g("lambda")?;
    let e = nu.phase()?.pow(1);
    let plus = affine(-&G::i(), lam.clone()).scale(&-&e);
    let minus = affine(G::i(), lam).scale(&-&e.conj());
    Ok(&(&plus * &half_i_shift(f, 1)) + &(&minus * &half_i_shift(f, -1)))
}

/// `(2λ)_n/n! e^{inφ} ₂F₁(−n, λ+ix; 2λ; 1 − e^{−2iφ})`.
fn mp_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let lam = nu.g("lambda")?;
    let two_lam = &lam + &lam;
    let ph = nu.phase()?;
    let z = &G::one() - &ph.pow(-2);
    let mn = G::from_int(-(n as i64));
    let base = affine(G::i(), lam);
    let mut out = Poly::zero();
    for j in 0..=n {
        let coef = div(
            &(&pochhammer(&mn, j) * &z.pow(j as i64)?),
            &(&pochhammer(&two_lam, j) * &fact(j)),
        )?;
        out = &out + &rising(&base, j).scale(&coef);
    }
    let pre = &div(&pochhammer(&two_lam, n), &fact(n))? * &ph.pow(n as i64);
    Ok(out.scale(&pre))
}

fn mp_norm(_: &ParamPoint, n: usize) -> Result<G> {
    div(&G::from_int(-1).pow(n as i64)?, &fact(n))
}

fn mp_weight(nu: &ParamPoint, k: usize) -> Result<Poly> {
    let lam = nu.g("lambda")?;
    let s = &G::i().pow(k as i64)? * &nu.phase()?.pow(-(k as i64));
    Ok(rising(&affine(G::i(), lam), k).scale(&s))
}

pub fn meixner_pollaczek() -> FamilySpec<Poly> {
    FamilySpec {
        family: super::Family::MeixnerPollaczek,
        raising: mp_raise,
        standard: mp_standard,
        normalization: mp_norm,
        lowering: LoweringTag::DeltaX,
        forms: vec![LeibnizForm {
            scheme: Scheme::DeltaX,
            weight_ratio: mp_weight,
        }],
    }
}

// Wilson

fn wilson_params(nu: &ParamPoint) -> Result<[G; 4]> {
    Ok([nu.g("a")?, nu.g("b")?, nu.g("c")?, nu.g("d")?])
}

/// `Π_{e ∈ {a,b,c,d}} (e + s·ix)`.
fn wilson_product(ps: &[G; 4], s: i64) -> Poly {
    ps.iter()
        .fold(Poly::one(), |acc, e| &acc * &affine(G::i().scale(&int(s)), e.clone()))
}

fn wilson_raise(nu: &ParamPoint, f: &Poly) -> Result<Poly> {
    let ps = wilson_params(nu)?;
    let num = &(&wilson_product(&ps, 1) * &half_i_shift(f, -1)) - &(&wilson_product(&ps, -1) * &half_i_shift(f, 1));
    num.exact_divide(&Poly::monomial(G::i().scale(&int(2)), 1))
}

/// `(a+b)_n (a+c)_n (a+d)_n ₄F₃(−n, n+a+b+c+d−1, a+ix, a−ix; a+b, a+c, a+d; 1)`.
fn wilson_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let [a, b, cc, d] = wilson_params(nu)?;
    let lows = [&a + &b, &a + &cc, &a + &d];
    let top = &(&(&(&a + &b) + &(&cc + &d)) - &G::one()) + &G::from_int(n as i64);
    let mn = G::from_int(-(n as i64));
    let x2 = Poly::from_ints(&[0, 0, 1]);
    let mut out = Poly::zero();
    let mut pair = Poly::one();
    for j in 0..=n {
        let den = lows.iter().fold(fact(j), |acc, l| &acc * &pochhammer(l, j));
        let coef = div(&(&pochhammer(&mn, j) * &pochhammer(&top, j)), &den)?;
        out = &out + &pair.scale(&coef);
        // (a+ix)_{j+1}(a−ix)_{j+1} = (a+ix)_j(a−ix)_j ((a+j)² + x²)
        let aj = &a + &G::from_int(j as i64);
        pair = &pair * &(&x2 + &c(&aj * &aj));
    }
    let pre = lows.iter().fold(G::one(), |acc, l| &acc * &pochhammer(l, n));
    Ok(out.scale(&pre))
}

fn wilson_weight(nu: &ParamPoint, k: usize) -> Result<Poly> {
    let ps = wilson_params(nu)?;
    let prod = ps
        .iter()
        .fold(Poly::one(), |acc, e| &acc * &rising(&affine(G::i(), e.clone()), k));
    Ok(prod.scale(&G::from_int(-1).pow(k as i64)?))
}

pub fn wilson() -> FamilySpec<Poly> {
    FamilySpec {
        family: super::Family::Wilson,
        raising: wilson_raise,
        standard: wilson_standard,
        normalization: unit_norm,
        lowering: LoweringTag::DeltaX2,
        forms: vec![LeibnizForm {
            scheme: Scheme::DeltaX2,
            weight_ratio: wilson_weight,
        }],
    }
}

// Big q-Jacobi and big q-Laguerre (b = 0)

struct BigQ {
    a: G,
    b: G,
    c: G,
    q: Rational,
}

fn big_q(nu: &ParamPoint) -> Result<BigQ> {
    let b = if nu.family == super::Family::BigQLaguerre {
        G::zero()
    } else {
        nu.g("b")?
    };
    Ok(BigQ {
        a: nu.g("a")?,
        b,
        c: nu.g("c")?,
        q: nu.q()?,
    })
}

fn bigq_raise(nu: &ParamPoint, f: &Poly) -> Result<Poly> {
    let BigQ { a, b, c: cc, q } = big_q(nu)?;
    let qg = G::from(&q);
    let aq = &a * &qg;
    let cq = &cc * &qg;
    let first = &affine(-&aq.inv()?, G::one()) * &affine(-&cq.inv()?, G::one());
    let second = &affine(G::from_int(-1), G::one()) * &affine(-&div(&b, &cc)?, G::one());
    let num = &(&first * f) - &(&second * &f.dilate(&qg));
    num.exact_divide(&Poly::monomial(&G::one() - &qg, 1))
}

/// `₃φ₂(q^{−n}, abq^{n+1}, x; aq, cq; q, q)`.
fn bigq_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let BigQ { a, b, c: cc, q } = big_q(nu)?;
    let qg = G::from(&q);
    let qn = qg.pow(n as i64)?;
    let t1 = qg.pow(-(n as i64))?;
    let t2 = &(&(&a * &b) * &qn) * &qg;
    let aq = &a * &qg;
    let cq = &cc * &qg;
    let mut out = Poly::zero();
    for j in 0..=n {
        let numer = &(&q_pochhammer(&t1, &q, j) * &q_pochhammer(&t2, &q, j)) * &qg.pow(j as i64)?;
        let den = &(&q_pochhammer(&aq, &q, j) * &q_pochhammer(&cq, &q, j)) * &q_pochhammer(&qg, &q, j);
        out = &out + &q_rising(&x(), &q, j).scale(&div(&numer, &den)?);
    }
    Ok(out)
}

fn bigq_norm(nu: &ParamPoint, n: usize) -> Result<G> {
    let BigQ { a, c: cc, q, .. } = big_q(nu)?;
    let qg = G::from(&q);
    let n64 = n as i64;
    let numer = &(&(&a * &cc).pow(n64)? * &qg.pow(n64 * (n64 + 1))?) * &(&G::one() - &qg).pow(n64)?;
    let den = &q_pochhammer(&(&a * &qg), &q, n) * &q_pochhammer(&(&cc * &qg), &q, n);
    div(&numer, &den)
}

/// `(x, xb/c; q)_k`.
fn bigq_weight_tq(nu: &ParamPoint, k: usize) -> Result<Poly> {
    let BigQ { b, c: cc, q, .. } = big_q(nu)?;
    Ok(&q_rising(&x(), &q, k) * &q_rising(&Poly::monomial(div(&b, &cc)?, 1), &q, k))
}

/// `(xq^{−k}/a, xq^{−k}/c; q)_k`.
fn bigq_weight_id(nu: &ParamPoint, k: usize) -> Result<Poly> {
    let BigQ { a, c: cc, q, .. } = big_q(nu)?;
    let qk = G::from(rat_pow(&q, -(k as i64))?);
    let left = q_rising(&Poly::monomial(div(&qk, &a)?, 1), &q, k);
    let right = q_rising(&Poly::monomial(div(&qk, &cc)?, 1), &q, k);
    Ok(&left * &right)
}

fn bigq_spec(family: super::Family) -> FamilySpec<Poly> {
    FamilySpec {
        family,
        raising: bigq_raise,
        standard: bigq_standard,
        normalization: bigq_norm,
        lowering: LoweringTag::QDerivativeInverse,
        forms: vec![
            LeibnizForm {
                scheme: Scheme::QDerivativeEtaTq,
                weight_ratio: bigq_weight_tq,
            },
            LeibnizForm {
                scheme: Scheme::QDerivativeEta1,
                weight_ratio: bigq_weight_id,
            },
        ],
    }
}

pub fn big_q_jacobi() -> FamilySpec<Poly> {
    bigq_spec(super::Family::BigQJacobi)
}

pub fn big_q_laguerre() -> FamilySpec<Poly> {
    bigq_spec(super::Family::BigQLaguerre)
}

// Krawtchouk: standard form only

/// `₂F₁(−n, −x; −N; 1/p)` for `n ≤ N`.
pub fn krawtchouk_standard(nu: &ParamPoint, n: usize) -> Result<Poly> {
    let p = nu.g("p")?;
    let big_n = nu.get("N")?;
    if big_n < int(n as i64) {
        return Err(crate::Error::Unsupported(format!("Krawtchouk degree {n} exceeds N")));
    }
    let mbig = -&G::from(big_n);
    let z = p.inv()?;
    let mn = G::from_int(-(n as i64));
    let mut out = Poly::zero();
    for j in 0..=n {
        let den = &pochhammer(&mbig, j) * &fact(j);
        let coef = div(&(&pochhammer(&mn, j) * &z.pow(j as i64)?), &den)?;
        out = &out + &rising(&-&x(), j).scale(&coef);
    }
    Ok(out)
}
