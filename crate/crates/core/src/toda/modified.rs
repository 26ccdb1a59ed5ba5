//! Expansions of a modified-weight polynomial in the unmodified family, and
//! the big q-Jacobi / big q-Laguerre conversions.

use std::fmt;
use std::str::FromStr;

use super::{check_scalar, modified_point};
use crate::algebra::{binomial, factorial, pochhammer, q_pochhammer, Poly, Rational, UnitPhase, G};
use crate::burchnall::Expansion;
use crate::error::{Error, Result};
use crate::families::series::{affine, q_rising, rising};
use crate::families::{standard_poly, Family, ParamPoint};
use crate::ops::{half_i_shift, shift_s};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModifiedId {
    Hermite,
    Laguerre,
    MeixnerEta1,
    MeixnerEtaS,
    CharlierEta1,
    CharlierEtaS,
    MeixnerPollaczek,
    BigQJacobiToLaguerre,
    BigQLaguerreInverse,
    BigQLaguerreSecond,
}

impl ModifiedId {
    pub const ALL: [ModifiedId; 10] = [
        ModifiedId::Hermite,
        ModifiedId::Laguerre,
        ModifiedId::MeixnerEta1,
        ModifiedId::MeixnerEtaS,
        ModifiedId::CharlierEta1,
        ModifiedId::CharlierEtaS,
        ModifiedId::MeixnerPollaczek,
        ModifiedId::BigQJacobiToLaguerre,
        ModifiedId::BigQLaguerreInverse,
        ModifiedId::BigQLaguerreSecond,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ModifiedId::Hermite => "hermite-toda",
            ModifiedId::Laguerre => "laguerre-toda",
            ModifiedId::MeixnerEta1 => "meixner-toda-eta1",
            ModifiedId::MeixnerEtaS => "meixner-toda-etaS",
            ModifiedId::CharlierEta1 => "charlier-toda-eta1",
            ModifiedId::CharlierEtaS => "charlier-toda-etaS",
            ModifiedId::MeixnerPollaczek => "mp-toda",
            ModifiedId::BigQJacobiToLaguerre => "bigqjacobi-to-bigqlaguerre",
            ModifiedId::BigQLaguerreInverse => "bigqlaguerre-inverse",
            ModifiedId::BigQLaguerreSecond => "bigqlaguerre-second",
        }
    }

    /// Family whose parameters the identity is sampled from.
    pub fn family(self) -> Family {
        match self {
            ModifiedId::Hermite => Family::Hermite,
            ModifiedId::Laguerre => Family::Laguerre,
            ModifiedId::MeixnerEta1 | ModifiedId::MeixnerEtaS => Family::Meixner,
            ModifiedId::CharlierEta1 | ModifiedId::CharlierEtaS => Family::Charlier,
            ModifiedId::MeixnerPollaczek => Family::MeixnerPollaczek,
            _ => Family::BigQJacobi,
        }
    }

    /// Whether the identity takes an external scalar (`t`, `u` or `r`).
    pub fn has_scalar(self) -> bool {
        !self.is_q()
    }

    pub fn is_q(self) -> bool {
        self.family() == Family::BigQJacobi
    }

    pub fn max_n(self) -> usize {
        if self.is_q() {
            6
        } else {
            8
        }
    }

    pub fn parse(s: &str) -> Result<ModifiedId> {
        Self::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_owned()))
    }
}

impl FromStr for ModifiedId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for ModifiedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn fact(n: usize) -> G {
    G::from(factorial(n))
}

fn std_at(nu: &ParamPoint, k: usize, d: usize) -> Result<Poly> {
    standard_poly(&nu.family.shift(nu, k as i64)?, d)
}

/// The single modified polynomial on the left and the `k`-sum on the right.
/// `s` is the scalar of [`super::check_scalar`]; q-identities ignore it.
pub fn modified_expansion(id: ModifiedId, nu: &ParamPoint, n: usize, s: &Rational) -> Result<Expansion<Poly>> {
    if nu.family != id.family() {
        return Err(Error::Unsupported(format!(
            "{id} needs {} parameters, got {}",
            id.family(),
            nu.family
        )));
    }
    if id.has_scalar() {
        check_scalar(nu, s)?;
    } else {
        crate::burchnall::check_shifts(nu, n)?;
    }
    match id {
        ModifiedId::Hermite => hermite(nu, n, s),
        ModifiedId::Laguerre => laguerre(nu, n, s),
        ModifiedId::MeixnerEta1 => meixner_eta1(nu, n, s),
        ModifiedId::MeixnerEtaS => meixner_eta_s(nu, n, s),
        ModifiedId::CharlierEta1 => charlier_eta1(nu, n, s),
        ModifiedId::CharlierEtaS => charlier_eta_s(nu, n, s),
        ModifiedId::MeixnerPollaczek => meixner_pollaczek(nu, n, s),
        ModifiedId::BigQJacobiToLaguerre => to_big_q_laguerre(nu, n),
        ModifiedId::BigQLaguerreInverse => big_q_laguerre_inverse(nu, n),
        ModifiedId::BigQLaguerreSecond => big_q_laguerre_second(nu, n),
    }
}

pub fn modified_expansion_residual(id: ModifiedId, nu: &ParamPoint, n: usize, s: &Rational) -> Result<Poly> {
    Ok(modified_expansion(id, nu, n, s)?.residual())
}

/// `H_n(x − t/2) = Σ (−t)^k C(n,k) H_{n−k}(x)`.
fn hermite(nu: &ParamPoint, n: usize, t: &Rational) -> Result<Expansion<Poly>> {
    let tg = G::from(t);
    let lhs = standard_poly(nu, n)?.shift(&(-&tg).scale(&Rational::new(1.into(), 2.into())));
    let mut terms = vec![];
    for k in 0..=n {
        let coef = &(-&tg).pow(k as i64)? * &G::from(binomial(n, k));
        terms.push((k, standard_poly(nu, n - k)?.scale(&coef)));
    }
    Ok(Expansion { lhs, terms })
}

/// `L_n^{(ν)}(x(1+t)) = Σ (−t)^k x^k/k! L_{n−k}^{(ν+k)}(x)`.
fn laguerre(nu: &ParamPoint, n: usize, t: &Rational) -> Result<Expansion<Poly>> {
    let tg = G::from(t);
    let lhs = standard_poly(nu, n)?.dilate(&(&tg + &G::one()));
    let mut terms = vec![];
    for k in 0..=n {
        let coef = (-&tg).pow(k as i64)?.checked_div(&fact(k))?;
        terms.push((k, &Poly::monomial(coef, k) * &std_at(nu, k, n - k)?));
    }
    Ok(Expansion { lhs, terms })
}

/// `M_n(x; β, cu) = Σ (−n)_k (β+x)_k/(k! (β)_k) u^{−n}(1−u)^k M_{n−k}(x; β+k, c)`.
fn meixner_eta1(nu: &ParamPoint, n: usize, u: &Rational) -> Result<Expansion<Poly>> {
    let b = nu.g("beta")?;
    let ug = G::from(u);
    let lhs = standard_poly(&modified_point(nu, u)?, n)?;
    let un = ug.pow(-(n as i64))?;
    let mut terms = vec![];
    for k in 0..=n {
        let top = &(&pochhammer(&G::from_int(-(n as i64)), k) * &un) * &(&G::one() - &ug).pow(k as i64)?;
        let coef = top.checked_div(&(&fact(k) * &pochhammer(&b, k)))?;
        let t = &rising(&affine(G::one(), b.clone()), k) * &std_at(nu, k, n - k)?;
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion { lhs, terms })
}

/// `M_n(x; β, cu) = Σ (−n)_k (−x)_k/(k! (β)_k c^k) (1 − 1/u)^k M_{n−k}(x−k; β+k, c)`.
fn meixner_eta_s(nu: &ParamPoint, n: usize, u: &Rational) -> Result<Expansion<Poly>> {
    let b = nu.g("beta")?;
    let c = nu.g("c")?;
    let lhs = standard_poly(&modified_point(nu, u)?, n)?;
    let ratio = &G::one() - &G::from(u).inv()?;
    let mut terms = vec![];
    for k in 0..=n {
        let k64 = k as i64;
        let top = &pochhammer(&G::from_int(-(n as i64)), k) * &ratio.pow(k64)?;
        let coef = top.checked_div(&(&(&fact(k) * &pochhammer(&b, k)) * &c.pow(k64)?))?;
        let t = &rising(&-&Poly::x(), k) * &shift_s(&std_at(nu, k, n - k)?, k64);
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion { lhs, terms })
}

/// `C_n(x; au) = Σ (−n)_k/k! u^{−n}(1−u)^k C_{n−k}(x; a)`.
fn charlier_eta1(nu: &ParamPoint, n: usize, u: &Rational) -> Result<Expansion<Poly>> {
    let ug = G::from(u);
    let lhs = standard_poly(&modified_point(nu, u)?, n)?;
    let un = ug.pow(-(n as i64))?;
    let mut terms = vec![];
    for k in 0..=n {
        let top = &(&pochhammer(&G::from_int(-(n as i64)), k) * &un) * &(&G::one() - &ug).pow(k as i64)?;
        terms.push((k, standard_poly(nu, n - k)?.scale(&top.checked_div(&fact(k))?)));
    }
    Ok(Expansion { lhs, terms })
}

/// `C_n(x; au) = Σ (−n)_k (−x)_k/k! a^{−k}(1 − 1/u)^k C_{n−k}(x−k; a)`.
fn charlier_eta_s(nu: &ParamPoint, n: usize, u: &Rational) -> Result<Expansion<Poly>> {
    let a = nu.g("a")?;
    let lhs = standard_poly(&modified_point(nu, u)?, n)?;
    let ratio = (&G::one() - &G::from(u).inv()?).checked_div(&a)?;
    let mut terms = vec![];
    for k in 0..=n {
        let k64 = k as i64;
        let coef = (&pochhammer(&G::from_int(-(n as i64)), k) * &ratio.pow(k64)?).checked_div(&fact(k))?;
        let t = &rising(&-&Poly::x(), k) * &shift_s(&standard_poly(nu, n - k)?, k64);
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion { lhs, terms })
}

/// `P_n^{(λ)}(x; φ − t/2) = Σ i^k e^{−ikφ}/k! (λ+ix)_k (2 sin(t/2))^k
/// e^{−it(n−k)/2} P_{n−k}^{(λ+k/2)}(x − ki/2; φ)`, with `e^{it/2}` carried
/// by its half-tangent `r`.
fn meixner_pollaczek(nu: &ParamPoint, n: usize, r: &Rational) -> Result<Expansion<Poly>> {
    let lam = nu.g("lambda")?;
    let ph = nu.phase()?;
    let half_t = UnitPhase::from_half_tangent(r.clone());
    let two_sin = G::from(half_t.sin() * crate::algebra::int(2));
    let lhs = standard_poly(&modified_point(nu, r)?, n)?;
    let mut terms = vec![];
    for k in 0..=n {
        let k64 = k as i64;
        let coef = &(&G::i().pow(k64)? * &ph.pow(-k64)) * &(&two_sin.pow(k64)? * &half_t.pow(k64 - n as i64));
        let coef = coef.checked_div(&fact(k))?;
        let t = &rising(&affine(G::i(), lam.clone()), k) * &half_i_shift(&std_at(nu, k, n - k)?, -k64);
        terms.push((k, t.scale(&coef)));
    }
    Ok(Expansion { lhs, terms })
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

/// `(q^{−n}; q)_k / (q, aq, cq; q)_k`.
fn big_q_ratio(s: &BigQ, n: usize, k: usize) -> Result<G> {
    let num = q_pochhammer(&s.qg.pow(-(n as i64))?, &s.q, k);
    let den = [s.qg.clone(), &s.a * &s.qg, &s.c * &s.qg]
        .iter()
        .fold(G::one(), |acc, t| &acc * &q_pochhammer(t, &s.q, k));
    num.checked_div(&den)
}

fn big_q_laguerre_point(nu: &ParamPoint, a: Rational, c: Rational) -> Result<ParamPoint> {
    Ok(ParamPoint::new(
        Family::BigQLaguerre,
        &[("a", a), ("c", c), ("p", nu.get("p")?)],
    ))
}

/// `P_n(x; a, b, c) = Σ (q^{−n}, x; q)_k/(q, aq, cq; q)_k (−abq^n)^k
/// q^{k(k+3)/2} P_{n−k}(xq^k; aq^k, cq^k)` with big q-Laguerre on the right.
fn to_big_q_laguerre(nu: &ParamPoint, n: usize) -> Result<Expansion<Poly>> {
    let s = big_q(nu)?;
    let p = G::from(nu.get("p")?);
    let lag = big_q_laguerre_point(nu, nu.get("a")?, nu.get("c")?)?;
    let base = -&(&(&s.a * &s.b) * &s.qg.pow(n as i64)?);
    let mut terms = vec![];
    for k in 0..=n {
        let k64 = k as i64;
        let coef = &(&big_q_ratio(&s, n, k)? * &base.pow(k64)?) * &p.pow(k64 * (k64 + 3))?;
        let inner = standard_poly(&Family::BigQLaguerre.shift(&lag, k64)?, n - k)?.dilate(&s.qg.pow(k64)?);
        terms.push((k, (&q_rising(&Poly::x(), &s.q, k) * &inner).scale(&coef)));
    }
    Ok(Expansion {
        lhs: standard_poly(nu, n)?,
        terms,
    })
}

/// `P_n(x; a, 0, c) = Σ (q^{−n}, x; q)_k/(q, aq, cq; q)_k (ab)^k q^{k(k+n+1)}
/// P_{n−k}(xq^k; aq^k, bq^k, cq^k)`.
fn big_q_laguerre_inverse(nu: &ParamPoint, n: usize) -> Result<Expansion<Poly>> {
    let s = big_q(nu)?;
    let lag = big_q_laguerre_point(nu, nu.get("a")?, nu.get("c")?)?;
    let mut terms = vec![];
    for k in 0..=n {
        let k64 = k as i64;
        let coef = &(&big_q_ratio(&s, n, k)? * &(&s.a * &s.b).pow(k64)?) * &s.qg.pow(k64 * (k64 + n as i64 + 1))?;
        let inner = std_at(nu, k, n - k)?.dilate(&s.qg.pow(k64)?);
        terms.push((k, (&q_rising(&Poly::x(), &s.q, k) * &inner).scale(&coef)));
    }
    Ok(Expansion {
        lhs: standard_poly(&lag, n)?,
        terms,
    })
}

/// `(c/b)^n (bq, abq/c; q)_n/(aq, cq; q)_n P_n(xb/c; b, ab/c) =
/// Σ (q^{−n}, xb/c; q)_k/(q, aq, cq; q)_k (ac)^k q^{k(k+n+1)} P_{n−k}(xq^k; aq^k, bq^k, cq^k)`.
fn big_q_laguerre_second(nu: &ParamPoint, n: usize) -> Result<Expansion<Poly>> {
    let s = big_q(nu)?;
    let (a, b, c) = (nu.get("a")?, nu.get("b")?, nu.get("c")?);
    let lag = big_q_laguerre_point(nu, b.clone(), &a * &b / &c)?;
    let b_over_c = s.b.checked_div(&s.c)?;
    let qn = s.qg.clone();
    let pre_num = &q_pochhammer(&(&s.b * &qn), &s.q, n) * &q_pochhammer(&(&(&s.a * &b_over_c) * &qn), &s.q, n);
    let pre_den = &q_pochhammer(&(&s.a * &qn), &s.q, n) * &q_pochhammer(&(&s.c * &qn), &s.q, n);
    let pre = &b_over_c.inv()?.pow(n as i64)? * &pre_num.checked_div(&pre_den)?;
    let lhs = standard_poly(&lag, n)?.dilate(&b_over_c).scale(&pre);
    let mut terms = vec![];
    for k in 0..=n {
        let k64 = k as i64;
        let coef = &(&big_q_ratio(&s, n, k)? * &(&s.a * &s.c).pow(k64)?) * &s.qg.pow(k64 * (k64 + n as i64 + 1))?;
        let inner = std_at(nu, k, n - k)?.dilate(&s.qg.pow(k64)?);
        terms.push((
            k,
            (&q_rising(&Poly::monomial(b_over_c.clone(), 1), &s.q, k) * &inner).scale(&coef),
        ));
    }
    Ok(Expansion { lhs, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::toda::{neutral_scalar, sample_scalar};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let h = ParamPoint::new(Family::Hermite, &[]);
        let e = modified_expansion(ModifiedId::Hermite, &h, 1, &int(1)).unwrap();
        assert_eq!(e.lhs, Poly::from_ints(&[-1, 2]));
        assert!(e.residual().is_zero());
        let l = ParamPoint::new(Family::Laguerre, &[("nu", int(0))]);
        let e = modified_expansion(ModifiedId::Laguerre, &l, 1, &int(2)).unwrap();
        assert_eq!(e.lhs, Poly::from_ints(&[1, -3]));
        assert!(e.residual().is_zero());
        let bq = ParamPoint::new(
            Family::BigQJacobi,
            &[("a", rat(1, 2)), ("b", rat(1, 3)), ("c", int(-1)), ("p", rat(1, 2))],
        );
        assert!(
            modified_expansion_residual(ModifiedId::BigQLaguerreInverse, &bq, 1, &int(0))
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn all_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for id in ModifiedId::ALL {
            for _ in 0..3 {
                let nu = id.family().sample(&mut rng);
                let s = sample_scalar_for(id, &nu, &mut rng);
                for n in 0..=5 {
                    let r = modified_expansion_residual(id, &nu, n, &s).unwrap();
                    assert!(r.is_zero(), "{id} n={n} at {} s={s}: {r}", nu.describe());
                }
            }
        }
    }

    fn sample_scalar_for(id: ModifiedId, nu: &ParamPoint, rng: &mut ChaCha8Rng) -> Rational {
        if id.has_scalar() {
            sample_scalar(nu, rng)
        } else {
            int(0)
        }
    }

    #[test]
    fn neutral_scalar_is_tautological() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for id in ModifiedId::ALL.into_iter().filter(|i| i.has_scalar()) {
            let nu = id.family().sample(&mut rng);
            let e = modified_expansion(id, &nu, 4, &neutral_scalar(nu.family)).unwrap();
            let nonzero: Vec<_> = e.terms.iter().filter(|(_, t)| !t.is_zero()).collect();
            assert_eq!(nonzero.len(), 1, "{id}");
            assert_eq!(nonzero[0].0, 0);
            assert_eq!(e.lhs, standard_poly(&nu, 4).unwrap());
        }
        // b = 0 turns big q-Jacobi into big q-Laguerre; b = 0 is outside the
        // admissible window, so call the transcription directly
        let nu = ParamPoint::new(
            Family::BigQJacobi,
            &[("a", rat(1, 2)), ("b", int(0)), ("c", int(-1)), ("p", rat(1, 2))],
        );
        let e = to_big_q_laguerre(&nu, 3).unwrap();
        assert!(e.terms[1..].iter().all(|(_, t)| t.is_zero()));
        assert!(e.residual().is_zero());
    }
}
