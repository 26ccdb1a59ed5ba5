//! Polynomial families built by repeated raising:
//! `p_n^{(ν)} = R_ν R_{ν+σ} ··· R_{ν+(n−1)σ} 1`.
//!
//! Every family also carries an independent hypergeometric "standard" form
//! and a normalization with `standard = normalization · chain`.

pub mod askey_wilson;
pub mod catalog;
pub mod params;
pub mod series;

use serde::Serialize;

use crate::algebra::{Carrier, Laurent, Poly, Rational, G};
use crate::error::{Error, Result};
use crate::ops::{LoweringTag, OperatorSpec, Scheme};
pub use params::{sample_rational, Family, ParamPoint};

pub type RaiseFn<E> = fn(&ParamPoint, &E) -> Result<E>;
pub type StandardFn<E> = fn(&ParamPoint, usize) -> Result<E>;
pub type NormFn = fn(&ParamPoint, usize) -> Result<G>;
pub type WeightFn<E> = fn(&ParamPoint, usize) -> Result<E>;

/// A Leibniz factorization usable with the family, with its weight ratio
/// `w_{ν+kσ}/w_ν` as it enters the operational formula.
#[derive(Clone, Copy)]
pub struct LeibnizForm<E> {
    pub scheme: Scheme,
    pub weight_ratio: WeightFn<E>,
}

#[derive(Clone)]
pub struct FamilySpec<E> {
    pub family: Family,
    /// `R_ν`.
    pub raising: RaiseFn<E>,
    pub standard: StandardFn<E>,
    pub normalization: NormFn,
    pub lowering: LoweringTag,
    pub forms: Vec<LeibnizForm<E>>,
}

/// Carriers with a family catalog and operator construction.
pub trait OpCarrier: Carrier {
    fn spec(family: Family) -> Result<FamilySpec<Self>>;
    fn operator(scheme: Scheme, nu: &ParamPoint) -> Result<OperatorSpec<Self>>;
}

impl OpCarrier for Poly {
    fn spec(family: Family) -> Result<FamilySpec<Poly>> {
        Ok(match family {
            Family::Hermite => catalog::hermite(),
            Family::Laguerre => catalog::laguerre(),
            Family::Jacobi => catalog::jacobi(),
            Family::Meixner => catalog::meixner(),
            Family::Charlier => catalog::charlier(),
            Family::MeixnerPollaczek => catalog::meixner_pollaczek(),
            Family::Wilson => catalog::wilson(),
            Family::BigQJacobi => catalog::big_q_jacobi(),
            Family::BigQLaguerre => catalog::big_q_laguerre(),
            other => return Err(Error::Unsupported(format!("{other} has no raising chain in x"))),
        })
    }

    fn operator(scheme: Scheme, nu: &ParamPoint) -> Result<OperatorSpec<Poly>> {
        let q = if scheme.needs_base() { Some(nu.q()?) } else { None };
        OperatorSpec::for_scheme(scheme, q.as_ref())
    }
}

impl OpCarrier for Laurent {
    fn spec(family: Family) -> Result<FamilySpec<Laurent>> {
        Ok(match family {
            Family::AskeyWilson => askey_wilson::askey_wilson(),
            Family::CqHermite => askey_wilson::cq_hermite(),
            other => return Err(Error::Unsupported(format!("{other} is not carried in z"))),
        })
    }

    fn operator(scheme: Scheme, nu: &ParamPoint) -> Result<OperatorSpec<Laurent>> {
        match scheme {
            Scheme::AskeyWilson => Ok(OperatorSpec::askey_wilson(&nu.get("p")?)),
            other => Err(Error::Unsupported(format!("{other} acts on polynomials in x"))),
        }
    }
}

impl<E: OpCarrier> FamilySpec<E> {
    pub fn raise(&self, nu: &ParamPoint, f: &E) -> Result<E> {
        (self.raising)(nu, f)
    }

    /// `R_ν R_{ν+σ} ··· R_{ν+(n−1)σ} f`.
    pub fn chain_apply(&self, nu: &ParamPoint, n: usize, f: &E) -> Result<E> {
        let mut out = f.clone();
        for j in (0..n).rev() {
            out = self.raise(&self.family.shift(nu, j as i64)?, &out)?;
        }
        Ok(out)
    }

    /// `p_n^{(ν)}`.
    pub fn chain(&self, nu: &ParamPoint, n: usize) -> Result<E> {
        self.chain_apply(nu, n, &E::one())
    }

    /// `p_n^{(ν + kσ)}`.
    pub fn chain_shifted(&self, nu: &ParamPoint, k: i64, n: usize) -> Result<E> {
        self.chain(&self.family.shift(nu, k)?, n)
    }

    pub fn standard(&self, nu: &ParamPoint, n: usize) -> Result<E> {
        (self.standard)(nu, n)
    }

    /// `standard − normalization · chain`.
    pub fn normalization_residual(&self, nu: &ParamPoint, n: usize) -> Result<E> {
        let scaled = self.chain(nu, n)?.scale(&(self.normalization)(nu, n)?);
        Ok(self.standard(nu, n)?.sub(&scaled))
    }

    pub fn operator(&self, form: &LeibnizForm<E>, nu: &ParamPoint) -> Result<OperatorSpec<E>> {
        E::operator(form.scheme, nu)
    }

    pub fn form(&self, scheme: Scheme) -> Result<&LeibnizForm<E>> {
        self.forms
            .iter()
            .find(|f| f.scheme == scheme)
            .ok_or_else(|| Error::Unsupported(format!("{} has no {} form", self.family, scheme)))
    }
}

impl Family {
    pub fn lowering_tag(self) -> Option<LoweringTag> {
        Some(match self {
            Family::Hermite | Family::Laguerre | Family::Jacobi => LoweringTag::Derivative,
            Family::Meixner | Family::Charlier => LoweringTag::NegForwardShift,
            Family::MeixnerPollaczek => LoweringTag::DeltaX,
            Family::Wilson => LoweringTag::DeltaX2,
            Family::BigQJacobi | Family::BigQLaguerre => LoweringTag::QDerivativeInverse,
            Family::AskeyWilson | Family::CqHermite => LoweringTag::AwDq,
            Family::Krawtchouk => return None,
        })
    }

    /// The scalar handed to [`LoweringTag::apply`].
    pub fn lowering_base(self, nu: &ParamPoint) -> Result<Option<Rational>> {
        Ok(match self.lowering_tag() {
            Some(LoweringTag::QDerivativeInverse) => Some(nu.q()?),
            Some(LoweringTag::AwDq) => Some(nu.get("p")?),
            _ => None,
        })
    }

    pub fn schemes(self) -> Vec<Scheme> {
        match self {
            Family::Krawtchouk => vec![],
            f if f.is_laurent() => vec![Scheme::AskeyWilson],
            f => Poly::spec(f)
                .map(|s| s.forms.iter().map(|l| l.scheme).collect())
                .unwrap_or_default(),
        }
    }
}

/// Runs `$body` with `$spec` bound to the family's [`FamilySpec`] on the
/// right carrier; the body must produce the same type for both.
#[macro_export]
macro_rules! with_family_spec {
    ($family:expr, $spec:ident => $body:expr) => {{
        let fam: $crate::families::Family = $family;
        if fam.is_laurent() {
            let $spec = <$crate::algebra::Laurent as $crate::families::OpCarrier>::spec(fam)?;
            $body
        } else {
            let $spec = <$crate::algebra::Poly as $crate::families::OpCarrier>::spec(fam)?;
            $body
        }
    }};
}

/// `p_n^{(ν)}` as a polynomial in `x`. Krawtchouk has no raising chain and
/// falls back to its standard form.
pub fn raise_chain(nu: &ParamPoint, n: usize) -> Result<Poly> {
    if nu.family == Family::Krawtchouk {
        return catalog::krawtchouk_standard(nu, n);
    }
    with_family_spec!(nu.family, spec => spec.chain(nu, n)?.to_poly())
}

/// The standard hypergeometric form as a polynomial in `x`.
pub fn standard_poly(nu: &ParamPoint, n: usize) -> Result<Poly> {
    if nu.family == Family::Krawtchouk {
        return catalog::krawtchouk_standard(nu, n);
    }
    with_family_spec!(nu.family, spec => spec.standard(nu, n)?.to_poly())
}

/// Coefficients of `x P_n = P_{n+1} + b_n P_n + c_n P_{n−1}` for the monic
/// polynomials; `c[0]` is zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonicRecurrence {
    pub b: Vec<G>,
    pub c: Vec<G>,
}

/// Reads `b_n, c_n` for `n ≤ n_max` off the standard polynomials and
/// verifies that the three-term remainder vanishes.
pub fn recurrence_extract(nu: &ParamPoint, n_max: usize) -> Result<MonicRecurrence> {
    let polys = (0..=n_max + 1)
        .map(|n| standard_poly(nu, n))
        .collect::<Result<Vec<_>>>()?;
    recurrence_from_polys(&polys)
}

/// The same extraction for an explicit sequence `P_0, …, P_{N+1}` with
/// `deg P_n = n`; returns `b_n, c_n` for `n ≤ N`.
pub fn recurrence_from_polys(polys: &[Poly]) -> Result<MonicRecurrence> {
    if polys.len() < 2 {
        return Err(Error::Unsupported("recurrence needs at least two polynomials".into()));
    }
    let n_max = polys.len() - 2;
    let monic = polys.iter().map(Poly::monic).collect::<Result<Vec<_>>>()?;
    let mut rec = MonicRecurrence { b: vec![], c: vec![] };
    for n in 0..=n_max {
        let r = &(&Poly::x() * &monic[n]) - &monic[n + 1];
        let b = r.coeff(n);
        let r = &r - &monic[n].scale(&b);
        let c = if n == 0 { G::zero() } else { r.coeff(n - 1) };
        let rest = if n == 0 { r } else { &r - &monic[n - 1].scale(&c) };
        if !rest.is_zero() {
            return Err(Error::Inconsistent(format!(
                "no three-term recurrence at n={n}: {rest}"
            )));
        }
        rec.b.push(b);
        rec.c.push(c);
    }
    Ok(rec)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LoweringCheck {
    /// `ℓ_n` in `L p_n^{(ν)} = ℓ_n p_{n−1}^{(ν+σ)}`.
    pub ell: G,
    pub residual: Poly,
}

/// Applies the family's lowering operator `L` to `p_n^{(ν)}` and compares
/// with `p_{n−1}^{(ν+σ)}`, the constant taken from the leading terms.
pub fn lowering_constant_check(nu: &ParamPoint, n: usize) -> Result<LoweringCheck> {
    if n == 0 {
        return Err(Error::Unsupported("lowering needs n >= 1".into()));
    }
    let tag = nu
        .family
        .lowering_tag()
        .ok_or_else(|| Error::Unsupported(format!("{} has no lowering operator", nu.family)))?;
    let base = nu.family.lowering_base(nu)?;
    let lowered = tag.apply(&raise_chain(nu, n)?, base.as_ref())?;
    let target = raise_chain(&nu.family.shift(nu, 1)?, n - 1)?;
    let top = target
        .degree()
        .ok_or_else(|| Error::Inconsistent("zero polynomial in chain".into()))?;
    let ell = lowered.coeff(top).checked_div(&target.coeff(top))?;
    let residual = &lowered - &target.scale(&ell);
    Ok(LoweringCheck { ell, residual })
}

/// Coefficients `c_k` with `f = Σ c_k basis[k]`, where `basis[k]` has exact
/// degree `k`.
pub fn expand_in_basis(f: &Poly, basis: &[Poly]) -> Result<Vec<G>> {
    let top = match f.degree() {
        None => return Ok(vec![G::zero(); basis.len()]),
        Some(d) => d,
    };
    if top >= basis.len() {
        return Err(Error::Basis(format!("degree {top} exceeds basis size {}", basis.len())));
    }
    let mut rest = f.clone();
    let mut out = vec![G::zero(); basis.len()];
    for k in (0..=top).rev() {
        if basis[k].degree() != Some(k) {
            return Err(Error::Basis(format!(
                "basis element {k} has degree {:?}",
                basis[k].degree()
            )));
        }
        let c = rest.coeff(k).checked_div(&basis[k].coeff(k))?;
        rest = &rest - &basis[k].scale(&c);
        out[k] = c;
    }
    if !rest.is_zero() {
        return Err(Error::Basis(format!("remainder {rest} after expansion")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn hermite() -> ParamPoint {
        ParamPoint::new(Family::Hermite, &[])
    }

    #[test]
    fn hermite_chain_examples() {
        let spec = Poly::spec(Family::Hermite).unwrap();
        assert_eq!(spec.chain(&hermite(), 1).unwrap(), Poly::from_ints(&[0, -2]));
        assert_eq!(spec.chain(&hermite(), 2).unwrap(), Poly::from_ints(&[-2, 0, 4]));
        assert_eq!(standard_poly(&hermite(), 3).unwrap(), Poly::from_ints(&[0, -12, 0, 8]));
        for n in 1..=6 {
            let chk = lowering_constant_check(&hermite(), n).unwrap();
            assert_eq!(chk.ell, G::from_int(-2 * n as i64));
            assert!(chk.residual.is_zero());
        }
    }

    #[test]
    fn laguerre_lowering_constant() {
        let nu = ParamPoint::new(Family::Laguerre, &[("nu", rat(1, 3))]);
        // p_n = n! L_n and d/dx L_n^{(ν)} = −L_{n−1}^{(ν+1)}
        let chk = lowering_constant_check(&nu, 4).unwrap();
        assert_eq!(chk.ell, G::from_int(-4));
        assert!(chk.residual.is_zero());
    }

    #[test]
    fn normalization_identity_all_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for fam in Family::ALL.into_iter().filter(|f| *f != Family::Krawtchouk) {
            for _ in 0..3 {
                let nu = fam.sample(&mut rng);
                for n in 0..=4 {
                    let res = (|| -> Result<Poly> {
                        with_family_spec!(fam, spec => spec.normalization_residual(&nu, n)?.to_poly())
                    })()
                    .unwrap();
                    assert!(res.is_zero(), "{fam} n={n} at {}: {res}", nu.describe());
                }
            }
        }
    }

    #[test]
    fn lowering_is_a_scalar_multiple() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for fam in Family::ALL.into_iter().filter(|f| *f != Family::Krawtchouk) {
            let nu = fam.sample(&mut rng);
            for n in 1..=4 {
                let chk = lowering_constant_check(&nu, n).unwrap();
                assert!(chk.residual.is_zero(), "{fam} n={n}");
                assert!(!chk.ell.is_zero());
            }
        }
    }

    #[test]
    fn recurrences() {
        // monic Hermite: b = 0, c_n = n/2
        let rec = recurrence_extract(&hermite(), 5).unwrap();
        for n in 0..=5 {
            assert!(rec.b[n].is_zero());
            assert_eq!(rec.c[n], G::from(rat(n as i64, 2)));
        }
        let nu = ParamPoint::new(Family::Charlier, &[("a", rat(3, 2))]);
        let rec = recurrence_extract(&nu, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(rec.b[n], G::from(int(n as i64) + rat(3, 2)));
            assert_eq!(rec.c[n], G::from(int(n as i64) * rat(3, 2)));
        }
        let kr = ParamPoint::new(Family::Krawtchouk, &[("p", rat(1, 3)), ("N", int(5))]);
        let rec = recurrence_extract(&kr, 3).unwrap();
        // b_n = p(N−n) + n(1−p)
        assert_eq!(rec.b[2], G::from(rat(1, 3) * int(3) + int(2) * rat(2, 3)));
    }

    #[test]
    fn chains_have_exact_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for fam in Family::ALL {
            let nu = fam.sample(&mut rng);
            let top = if fam == Family::Krawtchouk {
                nu.get("N").unwrap().to_integer().try_into().unwrap()
            } else {
                5
            };
            for n in 0..=top.min(5usize) {
                assert_eq!(
                    raise_chain(&nu, n).unwrap().degree(),
                    Some(if fam == Family::Wilson { 2 * n } else { n }),
                    "{fam}"
                );
            }
        }
    }

    #[test]
    fn basis_expansion() {
        let basis: Vec<Poly> = (0..4).map(|n| raise_chain(&hermite(), n).unwrap()).collect();
        // x² = ¼·p₂ + ½·p₀ with p₂ = 4x² − 2
        let c = expand_in_basis(&Poly::from_ints(&[0, 0, 1]), &basis).unwrap();
        assert_eq!(c, vec![G::from_frac(1, 2), G::zero(), G::from_frac(1, 4), G::zero()]);
        assert!(expand_in_basis(&Poly::from_ints(&[0, 0, 0, 0, 1]), &basis).is_err());
    }

    #[test]
    fn every_family_lists_its_schemes() {
        assert_eq!(
            Family::Meixner.schemes(),
            vec![Scheme::BackwardShiftEta1, Scheme::BackwardShiftEtaS]
        );
        assert_eq!(Family::CqHermite.schemes(), vec![Scheme::AskeyWilson]);
        assert!(Family::Krawtchouk.schemes().is_empty());
    }
}
