//! Burchnall-type operational formulas and expansions.
//!
//! The generic engine evaluates both sides of the operational formula
//! `R_ν ··· R_{ν+(n−1)σ} f = Σ_k α^n_k w_k η^k(p_{n−k}^{(ν+kσ)}) T_{k,n} f`
//! for any family and Leibniz form. The closed expansions in [`closed`] are
//! written out term by term in each family's standard normalization and
//! never call the engine, so comparing the two is a real check.

pub mod closed;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Carrier, Laurent, Poly};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec, LeibnizForm, OpCarrier, ParamPoint};
use crate::ops::Scheme;
use crate::with_family_spec;

pub use closed::closed_expansion;
pub use oracle::{
    feldheim_burchnall_consistency, feldheim_watson, hermite_linearization_oracle, zassenhaus_series_residual,
    TruncatedSeries,
};

/// The catalogued closed-form expansions of `p_{n+m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedId {
    Hermite,
    Laguerre,
    Jacobi,
    MeixnerEta1,
    MeixnerEtaS,
    CharlierEta1,
    CharlierEtaS,
    MeixnerPollaczek,
    Wilson,
    BigQJacobiTq,
    BigQJacobiI,
    AskeyWilson,
    CqHermite,
}

impl ClosedId {
    pub const ALL: [ClosedId; 13] = [
        ClosedId::Hermite,
        ClosedId::Laguerre,
        ClosedId::Jacobi,
        ClosedId::MeixnerEta1,
        ClosedId::MeixnerEtaS,
        ClosedId::CharlierEta1,
        ClosedId::CharlierEtaS,
        ClosedId::MeixnerPollaczek,
        ClosedId::Wilson,
        ClosedId::BigQJacobiTq,
        ClosedId::BigQJacobiI,
        ClosedId::AskeyWilson,
        ClosedId::CqHermite,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClosedId::Hermite => "hermite-expansion",
            ClosedId::Laguerre => "laguerre-expansion",
            ClosedId::Jacobi => "jacobi-expansion",
            ClosedId::MeixnerEta1 => "meixner-expansion-eta1",
            ClosedId::MeixnerEtaS => "meixner-expansion-etaS",
            ClosedId::CharlierEta1 => "charlier-expansion-eta1",
            ClosedId::CharlierEtaS => "charlier-expansion-etaS",
            ClosedId::MeixnerPollaczek => "mp-expansion",
            ClosedId::Wilson => "wilson-expansion",
            ClosedId::BigQJacobiTq => "bigqjacobi-expansion-Tq",
            ClosedId::BigQJacobiI => "bigqjacobi-expansion-I",
            ClosedId::AskeyWilson => "aw-expansion",
            ClosedId::CqHermite => "cqhermite-expansion",
        }
    }

    pub fn family(self) -> Family {
        match self {
            ClosedId::Hermite => Family::Hermite,
            ClosedId::Laguerre => Family::Laguerre,
            ClosedId::Jacobi => Family::Jacobi,
            ClosedId::MeixnerEta1 | ClosedId::MeixnerEtaS => Family::Meixner,
            ClosedId::CharlierEta1 | ClosedId::CharlierEtaS => Family::Charlier,
            ClosedId::MeixnerPollaczek => Family::MeixnerPollaczek,
            ClosedId::Wilson => Family::Wilson,
            ClosedId::BigQJacobiTq | ClosedId::BigQJacobiI => Family::BigQJacobi,
            ClosedId::AskeyWilson => Family::AskeyWilson,
            ClosedId::CqHermite => Family::CqHermite,
        }
    }

    /// The Leibniz form the expansion comes from.
    pub fn scheme(self) -> Scheme {
        match self {
            ClosedId::Hermite | ClosedId::Laguerre | ClosedId::Jacobi => Scheme::Derivative,
            ClosedId::MeixnerEta1 | ClosedId::CharlierEta1 => Scheme::BackwardShiftEta1,
            ClosedId::MeixnerEtaS | ClosedId::CharlierEtaS => Scheme::BackwardShiftEtaS,
            ClosedId::MeixnerPollaczek => Scheme::DeltaX,
            ClosedId::Wilson => Scheme::DeltaX2,
            ClosedId::BigQJacobiTq => Scheme::QDerivativeEtaTq,
            ClosedId::BigQJacobiI => Scheme::QDerivativeEta1,
            ClosedId::AskeyWilson | ClosedId::CqHermite => Scheme::AskeyWilson,
        }
    }

    /// Largest `n + m` in the default verification grid.
    pub fn max_total(self) -> usize {
        match self.family() {
            Family::Wilson | Family::BigQJacobi | Family::AskeyWilson => 6,
            _ => 8,
        }
    }

    pub fn parse(s: &str) -> Result<ClosedId> {
        ClosedId::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_owned()))
    }
}

impl FromStr for ClosedId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClosedId::parse(s)
    }
}

impl fmt::Display for ClosedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A left-hand side and the `k`-indexed terms of a right-hand side.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion<E> {
    pub lhs: E,
    pub terms: Vec<(usize, E)>,
}

impl<E: Carrier> Expansion<E> {
    pub fn rhs(&self) -> E {
        crate::algebra::carrier::sum(self.terms.iter().map(|(_, t)| t.clone()))
    }

    pub fn residual(&self) -> E {
        self.lhs.sub(&self.rhs())
    }
}

/// An expansion on either carrier.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyExpansion {
    X(Expansion<Poly>),
    Z(Expansion<Laurent>),
}

impl AnyExpansion {
    pub fn residual(&self) -> Result<Poly> {
        match self {
            AnyExpansion::X(e) => Ok(e.residual()),
            AnyExpansion::Z(e) => to_residual(&e.residual()),
        }
    }

    pub fn lhs(&self) -> Result<Poly> {
        match self {
            AnyExpansion::X(e) => Ok(e.lhs.clone()),
            AnyExpansion::Z(e) => e.lhs.to_poly(),
        }
    }

    pub fn rhs(&self) -> Result<Poly> {
        match self {
            AnyExpansion::X(e) => Ok(e.rhs()),
            AnyExpansion::Z(e) => e.rhs().to_poly(),
        }
    }

    /// `(k, term)` rendered on the native carrier.
    pub fn term_strings(&self) -> Vec<(usize, String)> {
        match self {
            AnyExpansion::X(e) => e.terms.iter().map(|(k, t)| (*k, t.to_string())).collect(),
            AnyExpansion::Z(e) => e.terms.iter().map(|(k, t)| (*k, t.to_string())).collect(),
        }
    }

    pub fn lhs_string(&self) -> String {
        match self {
            AnyExpansion::X(e) => e.lhs.to_string(),
            AnyExpansion::Z(e) => e.lhs.to_string(),
        }
    }
}

/// A residual as a polynomial in `x`. A nonzero residual that is not even a
/// symmetric Laurent polynomial is reported as an error carrying its leading
/// term.
pub fn to_residual<E: Carrier>(r: &E) -> Result<Poly> {
    if r.is_zero() {
        return Ok(Poly::zero());
    }
    r.to_poly().map_err(|_| {
        Error::Inconsistent(format!(
            "nonzero asymmetric residual, leading term {}",
            r.leading_term()
        ))
    })
}

/// `Σ_k α^n_k · w_k · η^k(p_{n−k}^{(ν+kσ)}) · T_{k,n} f`.
pub fn operational_rhs<E: OpCarrier>(
    spec: &FamilySpec<E>,
    form: &LeibnizForm<E>,
    nu: &ParamPoint,
    n: usize,
    f: &E,
) -> Result<Vec<(usize, E)>> {
    let op = spec.operator(form, nu)?;
    let mut terms = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let alpha = (op.alpha)(n, k)?;
        let weight = (form.weight_ratio)(nu, k)?;
        let poly = (op.eta)(&spec.chain_shifted(nu, k as i64, n - k)?, k as i64)?;
        let t = (op.t_op)(k, n, f)?;
        terms.push((k, weight.mul(&poly).mul(&t).scale(&alpha)));
    }
    Ok(terms)
}

fn theorem21_generic<E: OpCarrier>(
    spec: &FamilySpec<E>,
    scheme: Scheme,
    nu: &ParamPoint,
    n: usize,
    f: &Poly,
) -> Result<Poly> {
    let f = E::from_poly(f);
    let form = spec.form(scheme)?;
    let lhs = spec.chain_apply(nu, n, &f)?;
    let rhs = crate::algebra::carrier::sum(operational_rhs(spec, form, nu, n, &f)?.into_iter().map(|(_, t)| t));
    to_residual(&lhs.sub(&rhs))
}

/// Chain applied to `f` minus the operational sum; zero when the formula
/// holds. Wilson operators act on even polynomials, so for that family `f`
/// is read as a polynomial in `x²`.
pub fn theorem21_residual(nu: &ParamPoint, scheme: Scheme, n: usize, f: &Poly) -> Result<Poly> {
    let f = if nu.family == Family::Wilson {
        in_square(f)
    } else {
        f.clone()
    };
    with_family_spec!(nu.family, spec => theorem21_generic(&spec, scheme, nu, n, &f))
}

/// `f(x²)`.
pub fn in_square(f: &Poly) -> Poly {
    let sq = Poly::monomial(crate::algebra::G::one(), 2);
    f.coeffs()
        .iter()
        .rev()
        .fold(Poly::zero(), |acc, c| &(&acc * &sq) + &Poly::constant(c.clone()))
}

/// Both sides of the operational formula with `f = p_m^{(ν+nσ)}`, in the
/// raising-chain normalization.
pub fn corollary22_expansion<E: OpCarrier>(
    spec: &FamilySpec<E>,
    scheme: Scheme,
    nu: &ParamPoint,
    n: usize,
    m: usize,
) -> Result<Expansion<E>> {
    let form = spec.form(scheme)?;
    let f = spec.chain_shifted(nu, n as i64, m)?;
    Ok(Expansion {
        lhs: spec.chain(nu, n + m)?,
        terms: operational_rhs(spec, form, nu, n, &f)?,
    })
}

pub fn corollary22_residual(nu: &ParamPoint, scheme: Scheme, n: usize, m: usize) -> Result<Poly> {
    with_family_spec!(nu.family, spec => to_residual(&corollary22_expansion(&spec, scheme, nu, n, m)?.residual()))
}

/// `literal_rhs − c · N_{n+m} · generic_rhs`, where `N` converts the chain
/// normalization to the standard one and `c` is the scalar the literal
/// formula puts in front of `p_{n+m}`.
pub fn generic_literal_difference(id: ClosedId, nu: &ParamPoint, n: usize, m: usize) -> Result<Poly> {
    let literal = closed_expansion(id, nu, n, m)?;
    let factor =
        &closed::lhs_factor(id, n, m) * &with_family_spec!(nu.family, spec => (spec.normalization)(nu, n + m)?);
    let generic = with_family_spec!(nu.family, spec => {
        let e = corollary22_expansion(&spec, id.scheme(), nu, n, m)?;
        to_residual(&e.rhs())?
    });
    Ok(&literal.rhs()? - &generic.scale(&factor))
}

/// Difference of the literal right-hand sides at `(n, m)` and `(m, n)`.
/// The expressions differ but their values must agree.
pub fn symmetry_audit(id: ClosedId, nu: &ParamPoint, n: usize, m: usize) -> Result<Poly> {
    let a = closed_expansion(id, nu, n, m)?;
    let b = closed_expansion(id, nu, m, n)?;
    match (&a, &b) {
        (AnyExpansion::Z(x), AnyExpansion::Z(y)) => to_residual(&x.rhs().sub(&y.rhs())),
        _ => Ok(&a.rhs()? - &b.rhs()?),
    }
}

/// Dispatches a closed expansion by scheme-independent id and checks that
/// every parameter point it touches is admissible.
pub fn closed_expansion_residual(id: ClosedId, nu: &ParamPoint, n: usize, m: usize) -> Result<Poly> {
    closed_expansion(id, nu, n, m)?.residual()
}

/// Parameter points `ν + kσ` for `0 ≤ k ≤ top` must all be admissible.
pub fn check_shifts(nu: &ParamPoint, top: usize) -> Result<()> {
    for k in 0..=top {
        nu.family.admissible(&nu.family.shift(nu, k as i64)?)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, G};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn theorem21_examples() {
        let h = ParamPoint::new(Family::Hermite, &[]);
        assert!(theorem21_residual(&h, Scheme::Derivative, 0, &Poly::from_ints(&[3, 1]))
            .unwrap()
            .is_zero());
        assert!(theorem21_residual(&h, Scheme::Derivative, 1, &Poly::x())
            .unwrap()
            .is_zero());
        let bq = ParamPoint::new(
            Family::BigQJacobi,
            &[("a", rat(1, 2)), ("b", rat(1, 3)), ("c", int(-1)), ("p", rat(1, 2))],
        );
        assert!(theorem21_residual(&bq, Scheme::QDerivativeEtaTq, 1, &Poly::x())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn theorem21_every_family_and_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let f = Poly::new(vec![
            G::from_frac(1, 2),
            G::from_int(-3),
            G::zero(),
            G::from_frac(2, 5),
            G::one(),
        ]);
        for fam in Family::ALL.into_iter().filter(|f| *f != Family::Krawtchouk) {
            let nu = fam.sample(&mut rng);
            for scheme in fam.schemes() {
                for n in 0..=3 {
                    let r = theorem21_residual(&nu, scheme, n, &f).unwrap();
                    assert!(r.is_zero(), "{fam} {scheme} n={n}: {r}");
                }
            }
        }
    }

    #[test]
    fn corollary22_examples() {
        let h = ParamPoint::new(Family::Hermite, &[]);
        for m in 0..=3 {
            assert!(corollary22_residual(&h, Scheme::Derivative, 2, m).unwrap().is_zero());
        }
        let w = ParamPoint::new(
            Family::Wilson,
            &[("a", rat(1, 2)), ("b", int(1)), ("c", rat(3, 2)), ("d", rat(1, 3))],
        );
        assert!(corollary22_residual(&w, Scheme::DeltaX2, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn closed_examples() {
        let h = ParamPoint::new(Family::Hermite, &[]);
        assert!(closed_expansion_residual(ClosedId::Hermite, &h, 1, 1)
            .unwrap()
            .is_zero());
        let l = ParamPoint::new(Family::Laguerre, &[("nu", rat(1, 2))]);
        assert!(closed_expansion_residual(ClosedId::Laguerre, &l, 1, 1)
            .unwrap()
            .is_zero());
        let c = ParamPoint::new(Family::Charlier, &[("a", int(3))]);
        assert!(closed_expansion_residual(ClosedId::CharlierEta1, &c, 2, 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn closed_expansions_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for id in ClosedId::ALL {
            for _ in 0..2 {
                let nu = id.family().sample(&mut rng);
                for n in 0..=3 {
                    for m in 0..=3 {
                        let r = closed_expansion_residual(id, &nu, n, m).unwrap();
                        assert!(r.is_zero(), "{id} n={n} m={m} at {}: {r}", nu.describe());
                        let d = generic_literal_difference(id, &nu, n, m).unwrap();
                        assert!(d.is_zero(), "{id} generic n={n} m={m}: {d}");
                        assert!(symmetry_audit(id, &nu, n, m).unwrap().is_zero(), "{id} symmetry");
                    }
                }
            }
        }
    }

    #[test]
    fn ids_round_trip() {
        for id in ClosedId::ALL {
            assert_eq!(id.id().parse::<ClosedId>().unwrap(), id);
            assert!(id.family().schemes().contains(&id.scheme()));
        }
    }
}
