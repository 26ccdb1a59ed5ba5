//! Explicit solutions of the Toda lattice
//! `ċ_n = c_n (b_{n−1} − b_n)`, `ḃ_n = c_n − c_{n+1}`
//! obtained from the modified weights `e^{−xt} dμ(x)`, and the polynomial
//! expansions describing the modified families.
//!
//! Time derivatives are exact: every solution is a rational function of a
//! substitution variable with a polynomial chain-rule factor.

pub mod modified;
pub mod rational;

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{int, Poly, Rational, UnitPhase, G};
use crate::error::{Error, Result};
use crate::families::{recurrence_from_polys, sample_rational, standard_poly, Family, MonicRecurrence, ParamPoint};
pub use modified::{modified_expansion, modified_expansion_residual, ModifiedId};
pub use rational::RationalFunction;

use num_traits::{One, Signed, Zero};

/// The variable a solution is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TodaVariable {
    /// `t` itself.
    PlainT,
    /// `u = e^{−t}`, `d/dt = −u d/du`.
    ExpNegT,
    /// `T = tan(φ − t/2)`, `d/dt = −½(1 + T²) d/dT`.
    TanHalf,
}

impl TodaVariable {
    /// The polynomial `g` with `d/dt = g(v) d/dv`.
    pub fn chain_factor(self) -> Poly {
        match self {
            TodaVariable::PlainT => Poly::one(),
            TodaVariable::ExpNegT => Poly::monomial(G::from_int(-1), 1),
            TodaVariable::TanHalf => Poly::new(vec![G::from_frac(-1, 2), G::zero(), G::from_frac(-1, 2)]),
        }
    }

    pub fn d_dt(self, f: &RationalFunction) -> Result<RationalFunction> {
        f.derivative()?.mul(&RationalFunction::poly(self.chain_factor()))
    }
}

/// The six families whose modified weights stay in the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TodaSolution {
    Hermite,
    Laguerre,
    Charlier,
    Meixner,
    MeixnerPollaczek,
    Krawtchouk,
}

impl TodaSolution {
    pub const ALL: [TodaSolution; 6] = [
        TodaSolution::Hermite,
        TodaSolution::Laguerre,
        TodaSolution::Charlier,
        TodaSolution::Meixner,
        TodaSolution::MeixnerPollaczek,
        TodaSolution::Krawtchouk,
    ];

    pub fn family(self) -> Family {
        match self {
            TodaSolution::Hermite => Family::Hermite,
            TodaSolution::Laguerre => Family::Laguerre,
            TodaSolution::Charlier => Family::Charlier,
            TodaSolution::Meixner => Family::Meixner,
            TodaSolution::MeixnerPollaczek => Family::MeixnerPollaczek,
            TodaSolution::Krawtchouk => Family::Krawtchouk,
        }
    }

    pub fn for_family(family: Family) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|s| s.family() == family)
            .ok_or_else(|| Error::Unsupported(format!("{family} has no Toda solution")))
    }

    pub fn variable(self) -> TodaVariable {
        match self {
            TodaSolution::Hermite | TodaSolution::Laguerre => TodaVariable::PlainT,
            TodaSolution::MeixnerPollaczek => TodaVariable::TanHalf,
            _ => TodaVariable::ExpNegT,
        }
    }

    /// `b_n` as a function of the solution variable.
    pub fn b(self, n: usize, nu: &ParamPoint) -> Result<RationalFunction> {
        let nn = G::from_int(n as i64);
        match self {
            TodaSolution::Hermite => Ok(RationalFunction::poly(Poly::monomial(G::from_frac(-1, 2), 1))),
            TodaSolution::Laguerre => {
                let top = &(&nn + &nn) + &(&nu.g("nu")? + &G::one());
                RationalFunction::new(Poly::constant(top), Poly::from_ints(&[1, 1]))
            }
            TodaSolution::Charlier => Ok(RationalFunction::poly(Poly::linear(nu.g("a")?, nn))),
            TodaSolution::Meixner => {
                let (b, c) = (nu.g("beta")?, nu.g("c")?);
                let top = Poly::linear(&(&nn * &c) + &(&b * &c), nn);
                RationalFunction::new(top, Poly::linear(-&c, G::one()))
            }
            TodaSolution::MeixnerPollaczek => {
                let top = -&(&nn + &nu.g("lambda")?);
                RationalFunction::new(Poly::constant(top), Poly::x())
            }
            TodaSolution::Krawtchouk => {
                let (p, big_n) = (nu.g("p")?, nu.g("N")?);
                let one_p = &G::one() - &p;
                let top = Poly::linear(&p * &(&big_n - &nn), &nn * &one_p);
                RationalFunction::new(top, Poly::linear(p, one_p))
            }
        }
    }

    /// `c_n` as a function of the solution variable.
    pub fn c(self, n: usize, nu: &ParamPoint) -> Result<RationalFunction> {
        let nn = G::from_int(n as i64);
        match self {
            TodaSolution::Hermite => Ok(RationalFunction::constant(G::from(Rational::new(n.into(), 2.into())))),
            TodaSolution::Laguerre => {
                let top = &nn * &(&nn + &nu.g("nu")?);
                RationalFunction::new(Poly::constant(top), Poly::from_ints(&[1, 2, 1]))
            }
            TodaSolution::Charlier => Ok(RationalFunction::poly(Poly::monomial(&nn * &nu.g("a")?, 1))),
            TodaSolution::Meixner => {
                let (b, c) = (nu.g("beta")?, nu.g("c")?);
                let k = &(&nn * &(&(&nn + &b) - &G::one())) * &c;
                let den = Poly::linear(-&c, G::one());
                RationalFunction::new(Poly::monomial(k, 1), &den * &den)
            }
            TodaSolution::MeixnerPollaczek => {
                let k = (&nn * &(&(&nn + &nu.g("lambda")?.scale(&int(2))) - &G::one()))
                    .scale(&Rational::new(1.into(), 4.into()));
                RationalFunction::new(Poly::new(vec![k.clone(), G::zero(), k]), Poly::monomial(G::one(), 2))
            }
            TodaSolution::Krawtchouk => {
                let (p, big_n) = (nu.g("p")?, nu.g("N")?);
                let one_p = &G::one() - &p;
                let k = &(&(&nn * &(&(&big_n + &G::one()) - &nn)) * &p) * &one_p;
                let den = Poly::linear(p, one_p);
                RationalFunction::new(Poly::monomial(k, 1), &den * &den)
            }
        }
    }
}

impl fmt::Display for TodaSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family().tag())
    }
}

/// `(ċ_n − c_n(b_{n−1} − b_n), ḃ_n − (c_n − c_{n+1}))`.
pub fn toda_residuals(sol: TodaSolution, n: usize, nu: &ParamPoint) -> Result<(RationalFunction, RationalFunction)> {
    if n == 0 {
        return Err(Error::Unsupported("Toda residuals need n >= 1".into()));
    }
    if nu.family != sol.family() {
        return Err(Error::Unsupported(format!(
            "{sol} solution needs {} parameters",
            sol.family()
        )));
    }
    let var = sol.variable();
    let (b_prev, b, c) = (sol.b(n - 1, nu)?, sol.b(n, nu)?, sol.c(n, nu)?);
    let r1 = var.d_dt(&c)?.sub(&c.mul(&b_prev.sub(&b)?)?)?;
    let r2 = var.d_dt(&b)?.sub(&c.sub(&sol.c(n + 1, nu)?)?)?;
    Ok((r1, r2))
}

/// The external scalar of a modified family: `t` for Hermite and Laguerre,
/// `u = e^{−t}` for Meixner, Charlier and Krawtchouk, and `r = tan(t/4)`
/// (the half-tangent of `t/2`) for Meixner–Pollaczek.
pub fn check_scalar(nu: &ParamPoint, s: &Rational) -> Result<()> {
    let bad = |reason: &str| {
        Err(Error::Inadmissible {
            family: nu.family.tag().into(),
            reason: reason.into(),
        })
    };
    match nu.family {
        Family::Hermite => Ok(()),
        Family::Laguerre if s <= &-Rational::one() => bad("need 1 + t > 0"),
        Family::Laguerre => Ok(()),
        Family::Meixner if !s.is_positive() || (s * &nu.get("c")?) >= Rational::one() => bad("need 0 < u < 1/c"),
        Family::Charlier | Family::Krawtchouk if !s.is_positive() => bad("need u > 0"),
        Family::Meixner | Family::Charlier | Family::Krawtchouk => Ok(()),
        Family::MeixnerPollaczek => {
            let sp = modified_half_tangent(nu, s)?;
            if sp.is_positive() {
                Ok(())
            } else {
                bad("need 0 < φ − t/2 < π")
            }
        }
        other => Err(Error::Unsupported(format!("{other} has no Toda modification"))),
    }
}

/// Half-tangent of `φ − t/2`: `(s − r)/(1 + sr)`.
fn modified_half_tangent(nu: &ParamPoint, r: &Rational) -> Result<Rational> {
    Ok(nu
        .phase()?
        .sub_angle(&UnitPhase::from_half_tangent(r.clone()))?
        .half_tangent()
        .clone())
}

/// Draws an admissible scalar for `nu`.
pub fn sample_scalar<R: Rng>(nu: &ParamPoint, rng: &mut R) -> Rational {
    loop {
        let s = match nu.family {
            Family::Hermite => sample_rational(rng, (-3, 3)),
            Family::Laguerre => sample_rational(rng, (-1, 3)),
            Family::MeixnerPollaczek => sample_rational(rng, (-1, 1)),
            _ => sample_rational(rng, (0, 3)),
        };
        if check_scalar(nu, &s).is_ok() {
            return s;
        }
    }
}

/// The scalar at which the modification is the identity.
pub fn neutral_scalar(family: Family) -> Rational {
    match family {
        Family::Hermite | Family::Laguerre | Family::MeixnerPollaczek => Rational::zero(),
        _ => Rational::one(),
    }
}

/// Value of the solution variable at the scalar.
pub fn variable_value(sol: TodaSolution, nu: &ParamPoint, s: &Rational) -> Result<G> {
    check_scalar(nu, s)?;
    Ok(match sol {
        TodaSolution::MeixnerPollaczek => {
            let sp = modified_half_tangent(nu, s)?;
            if sp == Rational::one() {
                return Err(Error::Inadmissible {
                    family: nu.family.tag().into(),
                    reason: "tan(φ − t/2) is infinite".into(),
                });
            }
            G::from(int(2) * &sp / (Rational::one() - &sp * &sp))
        }
        _ => G::from(s),
    })
}

/// The parameter point of the modified family, where the modification stays
/// in the parameter space.
pub fn modified_point(nu: &ParamPoint, s: &Rational) -> Result<ParamPoint> {
    check_scalar(nu, s)?;
    Ok(match nu.family {
        Family::Meixner => nu.with("c", nu.get("c")? * s),
        Family::Charlier => nu.with("a", nu.get("a")? * s),
        Family::Krawtchouk => {
            let p = nu.get("p")?;
            let np = &p * s / (Rational::one() + &p * (s - Rational::one()));
            nu.with("p", np)
        }
        Family::MeixnerPollaczek => nu.with("s", modified_half_tangent(nu, s)?),
        _ => nu.clone(),
    })
}

/// `P_0, …, P_top` orthogonal for the modified weight `e^{−xt} dμ`.
pub fn modified_polys(nu: &ParamPoint, s: &Rational, top: usize) -> Result<Vec<Poly>> {
    let at = modified_point(nu, s)?;
    (0..=top)
        .map(|d| {
            let p = standard_poly(&at, d)?;
            Ok(match nu.family {
                Family::Hermite => p.shift(&G::from(s / int(2))),
                Family::Laguerre => p.dilate(&G::from(s + Rational::one())),
                _ => p,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Crosscheck {
    pub extracted: MonicRecurrence,
    /// `b_n` from the recurrence minus `b_n` of the solution, per `n`.
    pub b_diff: Vec<G>,
    pub c_diff: Vec<G>,
}

impl Crosscheck {
    pub fn passes(&self) -> bool {
        self.b_diff.iter().chain(&self.c_diff).all(G::is_zero)
    }
}

/// Reads `b_n, c_n` (`n ≤ n_max`) off the modified polynomials and compares
/// with the closed Toda solution at the same scalar.
pub fn toda_from_recurrence_crosscheck(nu: &ParamPoint, s: &Rational, n_max: usize) -> Result<Crosscheck> {
    let sol = TodaSolution::for_family(nu.family)?;
    if nu.family == Family::Krawtchouk {
        let big_n = nu.get("N")?.to_integer();
        if big_n < (n_max + 1).into() {
            return Err(Error::Unsupported(format!(
                "Krawtchouk needs n + 1 <= N, got n = {n_max}"
            )));
        }
    }
    let v = variable_value(sol, nu, s)?;
    let extracted = recurrence_from_polys(&modified_polys(nu, s, n_max + 1)?)?;
    let mut b_diff = vec![];
    let mut c_diff = vec![];
    for n in 0..=n_max {
        b_diff.push(&extracted.b[n] - &sol.b(n, nu)?.eval(&v)?);
        c_diff.push(&extracted.c[n] - &sol.c(n, nu)?.eval(&v)?);
    }
    Ok(Crosscheck {
        extracted,
        b_diff,
        c_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn residual_examples() {
        let h = ParamPoint::new(Family::Hermite, &[]);
        let (r1, r2) = toda_residuals(TodaSolution::Hermite, 3, &h).unwrap();
        assert!(r1.is_zero() && r2.is_zero());
        let l = ParamPoint::new(Family::Laguerre, &[("nu", rat(1, 2))]);
        let (r1, r2) = toda_residuals(TodaSolution::Laguerre, 2, &l).unwrap();
        assert!(r1.is_zero() && r2.is_zero());
        let m = ParamPoint::new(Family::Meixner, &[("beta", int(2)), ("c", rat(1, 3))]);
        let (r1, r2) = toda_residuals(TodaSolution::Meixner, 4, &m).unwrap();
        assert!(r1.is_zero() && r2.is_zero());
    }

    #[test]
    fn all_solutions_solve_the_lattice() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for sol in TodaSolution::ALL {
            for _ in 0..4 {
                let nu = sol.family().sample(&mut rng);
                for n in 1..=10 {
                    let (r1, r2) = toda_residuals(sol, n, &nu).unwrap();
                    assert!(r1.is_zero() && r2.is_zero(), "{sol} n={n}: {r1}; {r2}");
                }
            }
        }
    }

    #[test]
    fn wrong_sign_is_caught() {
        // b_n = +t/2 does not solve the lattice with c_n = n/2
        let c = RationalFunction::constant(G::from_frac(1, 2));
        let b = RationalFunction::poly(Poly::monomial(G::from_frac(1, 2), 1));
        let lhs = TodaVariable::PlainT.d_dt(&b).unwrap();
        assert!(!lhs
            .sub(&c.sub(&RationalFunction::constant(G::one())).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn crosscheck_examples() {
        let c = ParamPoint::new(Family::Charlier, &[("a", int(2))]);
        let chk = toda_from_recurrence_crosscheck(&c, &rat(1, 3), 2).unwrap();
        assert!(chk.passes());
        assert_eq!(chk.extracted.b[2], G::from(rat(8, 3)));
        assert_eq!(chk.extracted.c[2], G::from(rat(4, 3)));
        let h = ParamPoint::new(Family::Hermite, &[]);
        let chk = toda_from_recurrence_crosscheck(&h, &Rational::zero(), 4).unwrap();
        assert!(chk.passes() && chk.extracted.b.iter().all(G::is_zero));
        let k = ParamPoint::new(Family::Krawtchouk, &[("p", rat(1, 2)), ("N", int(4))]);
        assert!(toda_from_recurrence_crosscheck(&k, &Rational::one(), 1)
            .unwrap()
            .passes());
    }

    #[test]
    fn crosscheck_every_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for sol in TodaSolution::ALL {
            for _ in 0..5 {
                let nu = sol.family().sample(&mut rng);
                let s = sample_scalar(&nu, &mut rng);
                let top = if sol == TodaSolution::Krawtchouk {
                    (nu.get("N").unwrap().to_integer().try_into().unwrap_or(1usize) - 1).min(6)
                } else {
                    6
                };
                let chk = toda_from_recurrence_crosscheck(&nu, &s, top).unwrap();
                assert!(
                    chk.passes(),
                    "{sol} at {} s={s}: {:?} {:?}",
                    nu.describe(),
                    chk.b_diff,
                    chk.c_diff
                );
            }
        }
    }

    #[test]
    fn scalar_windows() {
        let m = ParamPoint::new(Family::Meixner, &[("beta", int(2)), ("c", rat(1, 2))]);
        assert!(check_scalar(&m, &int(2)).is_err());
        assert!(check_scalar(&m, &rat(3, 2)).is_ok());
        let mp = ParamPoint::new(Family::MeixnerPollaczek, &[("lambda", int(1)), ("s", rat(1, 2))]);
        assert!(check_scalar(&mp, &rat(1, 2)).is_err());
        assert!(check_scalar(&mp, &rat(1, 4)).is_ok());
        let right_angle = mp.with("s", int(1));
        assert!(check_scalar(&right_angle, &int(0)).is_ok());
        assert!(variable_value(TodaSolution::MeixnerPollaczek, &right_angle, &int(0)).is_err());
    }
}
