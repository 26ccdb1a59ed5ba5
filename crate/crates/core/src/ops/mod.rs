//! Operator schemes with a twisted Leibniz rule
//!
//! `∂ⁿ(fg) = Σ_k α^n_k (η^k ∂^{n−k} f)(T_{k,n} g)`.
//!
//! Each [`OperatorSpec`] bundles `∂`, the homomorphism `η`, the constants
//! `α^n_k` and the operators `T_{k,n}` for one carrier.

pub mod difference;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{binomial, chebyshev_lift, chebyshev_project, q_binomial, Carrier, Laurent, Poly, Rational, G};
use crate::error::{Error, Result};
pub use difference::*;

pub type UnaryOp<E> = Arc<dyn Fn(&E) -> Result<E> + Send + Sync>;
pub type EtaOp<E> = Arc<dyn Fn(&E, i64) -> Result<E> + Send + Sync>;
pub type AlphaFn = Arc<dyn Fn(usize, usize) -> Result<G> + Send + Sync>;
pub type TOp<E> = Arc<dyn Fn(usize, usize, &E) -> Result<E> + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CarrierKind {
    PolyInX,
    SymLaurentInZ,
}

/// The eight registered Leibniz factorizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Derivative,
    /// `∂ = ∇`, `η = I`, `T_{k,n} = S^{n−k}∇^k`.
    BackwardShiftEta1,
    /// `∂ = ∇`, `η = S`, `T_{k,n} = ∇^k`.
    BackwardShiftEtaS,
    DeltaX,
    DeltaX2,
    /// `∂ = D_q`, `η = T_q`, `T_{k,n} = D_q^k`.
    QDerivativeEtaTq,
    /// `∂ = D_q`, `η = I`, `T_{k,n} = T_q^{n−k} D_q^k`.
    QDerivativeEta1,
    AskeyWilson,
}

impl Scheme {
    pub const ALL: [Scheme; 8] = [
        Scheme::Derivative,
        Scheme::BackwardShiftEta1,
        Scheme::BackwardShiftEtaS,
        Scheme::DeltaX,
        Scheme::DeltaX2,
        Scheme::QDerivativeEtaTq,
        Scheme::QDerivativeEta1,
        Scheme::AskeyWilson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Derivative => "derivative",
            Scheme::BackwardShiftEta1 => "backward-shift-eta1",
            Scheme::BackwardShiftEtaS => "backward-shift-etaS",
            Scheme::DeltaX => "delta-x",
            Scheme::DeltaX2 => "delta-x2",
            Scheme::QDerivativeEtaTq => "q-derivative-etaTq",
            Scheme::QDerivativeEta1 => "q-derivative-eta1",
            Scheme::AskeyWilson => "askey-wilson",
        }
    }

    pub fn from_name(s: &str) -> Option<Scheme> {
        Self::ALL.into_iter().find(|sc| sc.name() == s)
    }

    pub fn carrier(self) -> CarrierKind {
        match self {
            Scheme::AskeyWilson => CarrierKind::SymLaurentInZ,
            _ => CarrierKind::PolyInX,
        }
    }

    /// Whether the scheme needs a base `q` (or `p` with `q = p²`).
    pub fn needs_base(self) -> bool {
        matches!(
            self,
            Scheme::QDerivativeEtaTq | Scheme::QDerivativeEta1 | Scheme::AskeyWilson
        )
    }

    pub fn lowering_tag(self) -> LoweringTag {
        match self {
            Scheme::Derivative => LoweringTag::Derivative,
            Scheme::BackwardShiftEta1 | Scheme::BackwardShiftEtaS => LoweringTag::NegForwardShift,
            Scheme::DeltaX => LoweringTag::DeltaX,
            Scheme::DeltaX2 => LoweringTag::DeltaX2,
            Scheme::QDerivativeEtaTq | Scheme::QDerivativeEta1 => LoweringTag::QDerivativeInverse,
            Scheme::AskeyWilson => LoweringTag::AwDq,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Names the lowering operator `𝒟` that is adjoint to the raising operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LoweringTag {
    Derivative,
    NegForwardShift,
    QDerivativeInverse,
    DeltaX,
    DeltaX2,
    AwDq,
}

impl LoweringTag {
    pub fn name(self) -> &'static str {
        match self {
            LoweringTag::Derivative => "derivative",
            LoweringTag::NegForwardShift => "neg_forward_shift",
            LoweringTag::QDerivativeInverse => "q_derivative_inverse",
            LoweringTag::DeltaX => "delta_x",
            LoweringTag::DeltaX2 => "delta_x2",
            LoweringTag::AwDq => "aw_Dq",
        }
    }

    /// The operator named by the tag: `d/dx`, `−Δ`, `D_{1/q}`, `δ/δx`,
    /// `δ/δx²` or the Askey–Wilson `𝒟_q`. `base` is `q` for the
    /// q-derivative and `p = q^{1/2}` for Askey–Wilson.
    pub fn apply(self, f: &Poly, base: Option<&Rational>) -> Result<Poly> {
        let need = || base.ok_or_else(|| Error::MissingParameter("q".into()));
        Ok(match self {
            LoweringTag::Derivative => derivative(f),
            LoweringTag::NegForwardShift => -&forward_shift(f),
            LoweringTag::QDerivativeInverse => q_derivative(f, &need()?.recip()),
            LoweringTag::DeltaX => delta_x(f),
            LoweringTag::DeltaX2 => delta_x2(f)?,
            LoweringTag::AwDq => chebyshev_project(&aw_dq(&chebyshev_lift(f), need()?)?),
        })
    }

    /// Sign `s` such that `s·apply` is the adjoint of the raising operators
    /// for the weighted pairing. Only `−Δ` carries its sign in the name.
    pub fn adjoint_sign(self) -> i64 {
        match self {
            LoweringTag::NegForwardShift => 1,
            _ => -1,
        }
    }

    /// The adjoint lowering operator `𝒟`.
    pub fn adjoint(self, f: &Poly, base: Option<&Rational>) -> Result<Poly> {
        Ok(self.apply(f, base)?.scale(&G::from_int(self.adjoint_sign())))
    }
}

impl fmt::Display for LoweringTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One instance of the generalized Leibniz rule on the carrier `E`.
#[derive(Clone)]
pub struct OperatorSpec<E> {
    pub scheme: Scheme,
    pub carrier: CarrierKind,
    pub partial: UnaryOp<E>,
    /// `η^power` for any integer power.
    pub eta: EtaOp<E>,
    pub alpha: AlphaFn,
    pub t_op: TOp<E>,
}

impl<E> fmt::Debug for OperatorSpec<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorSpec({})", self.scheme)
    }
}

fn binomial_alpha() -> AlphaFn {
    Arc::new(|n, k| Ok(G::from(binomial(n, k))))
}

fn iterate<E>(op: &UnaryOp<E>, times: usize, f: &E) -> Result<E>
where
    E: Clone,
{
    let mut out = f.clone();
    for _ in 0..times {
        out = op(&out)?;
    }
    Ok(out)
}

impl<E: Carrier> OperatorSpec<E> {
    /// `∂^k f`.
    pub fn partial_pow(&self, k: usize, f: &E) -> Result<E> {
        iterate(&self.partial, k, f)
    }

    /// `∂ⁿ(fg) − Σ_k α^n_k (η^k ∂^{n−k} f)(T_{k,n} g)`.
    pub fn leibniz_check(&self, f: &E, g: &E, n: usize) -> Result<E> {
        let lhs = self.partial_pow(n, &f.mul(g))?;
        let mut rhs = E::zero();
        for k in 0..=n {
            let a = (self.alpha)(n, k)?;
            if a.is_zero() {
                continue;
            }
            let left = (self.eta)(&self.partial_pow(n - k, f)?, k as i64)?;
            let right = (self.t_op)(k, n, g)?;
            rhs = rhs.add(&left.mul(&right).scale(&a));
        }
        Ok(lhs.sub(&rhs))
    }
}

impl OperatorSpec<Poly> {
    pub fn derivative() -> Self {
        let d: UnaryOp<Poly> = Arc::new(|f| Ok(derivative(f)));
        Self {
            scheme: Scheme::Derivative,
            carrier: CarrierKind::PolyInX,
            partial: d.clone(),
            eta: Arc::new(|f, _| Ok(f.clone())),
            alpha: binomial_alpha(),
            t_op: Arc::new(move |k, _, g| iterate(&d, k, g)),
        }
    }

    pub fn backward_shift_eta1() -> Self {
        let nabla: UnaryOp<Poly> = Arc::new(|f| Ok(backward_shift(f)));
        Self {
            scheme: Scheme::BackwardShiftEta1,
            carrier: CarrierKind::PolyInX,
            partial: nabla.clone(),
            eta: Arc::new(|f, _| Ok(f.clone())),
            alpha: binomial_alpha(),
            t_op: Arc::new(move |k, n, g| Ok(shift_s(&iterate(&nabla, k, g)?, (n - k) as i64))),
        }
    }

    pub fn backward_shift_eta_s() -> Self {
        let nabla: UnaryOp<Poly> = Arc::new(|f| Ok(backward_shift(f)));
        Self {
            scheme: Scheme::BackwardShiftEtaS,
            carrier: CarrierKind::PolyInX,
            partial: nabla.clone(),
            eta: Arc::new(|f, k| Ok(shift_s(f, k))),
            alpha: binomial_alpha(),
            t_op: Arc::new(move |k, _, g| iterate(&nabla, k, g)),
        }
    }

    /// `η = S⁻`, `T_{k,n} = (S⁺)^{n−k} δ^k`.
    pub fn delta_x() -> Self {
        let d: UnaryOp<Poly> = Arc::new(|f| Ok(delta_x(f)));
        Self {
            scheme: Scheme::DeltaX,
            carrier: CarrierKind::PolyInX,
            partial: d.clone(),
            eta: Arc::new(|f, k| Ok(half_i_shift(f, -k))),
            alpha: binomial_alpha(),
            t_op: Arc::new(move |k, n, g| Ok(half_i_shift(&iterate(&d, k, g)?, (n - k) as i64))),
        }
    }

    /// Same factorization as [`OperatorSpec::delta_x`] for `δ/δx²`.
    pub fn delta_x2() -> Self {
        let d: UnaryOp<Poly> = Arc::new(delta_x2);
        Self {
            scheme: Scheme::DeltaX2,
            carrier: CarrierKind::PolyInX,
            partial: d.clone(),
            eta: Arc::new(|f, k| Ok(half_i_shift(f, -k))),
            alpha: binomial_alpha(),
            t_op: Arc::new(move |k, n, g| Ok(half_i_shift(&iterate(&d, k, g)?, (n - k) as i64))),
        }
    }

    fn q_alpha(q: &Rational) -> AlphaFn {
        let q = q.clone();
        Arc::new(move |n, k| Ok(G::from(q_binomial(n, k, &q)?)))
    }

    pub fn q_derivative_eta_tq(q: &Rational) -> Self {
        let qd = q.clone();
        let d: UnaryOp<Poly> = Arc::new(move |f| Ok(q_derivative(f, &qd)));
        let qe = q.clone();
        Self {
            scheme: Scheme::QDerivativeEtaTq,
            carrier: CarrierKind::PolyInX,
            partial: d.clone(),
            eta: Arc::new(move |f, k| Ok(f.dilate(&G::from(&qe).pow(k)?))),
            alpha: Self::q_alpha(q),
            t_op: Arc::new(move |k, _, g| iterate(&d, k, g)),
        }
    }

    pub fn q_derivative_eta1(q: &Rational) -> Self {
        let qd = q.clone();
        let d: UnaryOp<Poly> = Arc::new(move |f| Ok(q_derivative(f, &qd)));
        let qt = q.clone();
        Self {
            scheme: Scheme::QDerivativeEta1,
            carrier: CarrierKind::PolyInX,
            partial: d.clone(),
            eta: Arc::new(|f, _| Ok(f.clone())),
            alpha: Self::q_alpha(q),
            t_op: Arc::new(move |k, n, g| {
                let dk = iterate(&d, k, g)?;
                Ok(dk.dilate(&G::from(&qt).pow((n - k) as i64)?))
            }),
        }
    }

    pub fn for_scheme(scheme: Scheme, base: Option<&Rational>) -> Result<Self> {
        let need = || base.ok_or_else(|| Error::MissingParameter("q".into()));
        Ok(match scheme {
            Scheme::Derivative => Self::derivative(),
            Scheme::BackwardShiftEta1 => Self::backward_shift_eta1(),
            Scheme::BackwardShiftEtaS => Self::backward_shift_eta_s(),
            Scheme::DeltaX => Self::delta_x(),
            Scheme::DeltaX2 => Self::delta_x2(),
            Scheme::QDerivativeEtaTq => Self::q_derivative_eta_tq(need()?),
            Scheme::QDerivativeEta1 => Self::q_derivative_eta1(need()?),
            Scheme::AskeyWilson => return Err(Error::Unsupported("askey-wilson acts on Laurent polynomials".into())),
        })
    }
}

impl OperatorSpec<Laurent> {
    /// `∂ = 𝒟_q`, `η = (z ↦ pz)`, `α^n_k = [n,k]_q p^{k(k−n)}`,
    /// `T_{k,n} = η^{k−n} 𝒟_q^k`, with `q = p²`.
    pub fn askey_wilson(p: &Rational) -> Self {
        let pd = p.clone();
        let d: UnaryOp<Laurent> = Arc::new(move |f| aw_dq_laurent(f, &pd));
        let pe = p.clone();
        let pt = p.clone();
        let pa = p.clone();
        let q = p * p;
        Self {
            scheme: Scheme::AskeyWilson,
            carrier: CarrierKind::SymLaurentInZ,
            partial: d.clone(),
            eta: Arc::new(move |f, k| aw_eta_laurent(f, &pe, k)),
            alpha: Arc::new(move |n, k| {
                let pw = G::from(&pa).pow(k as i64 * (k as i64 - n as i64))?;
                Ok(&G::from(q_binomial(n, k, &q)?) * &pw)
            }),
            t_op: Arc::new(move |k, n, g| {
                let dk = iterate(&d, k, g)?;
                aw_eta_laurent(&dk, &pt, k as i64 - n as i64)
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{lift_to_laurent, rat};
    use proptest::prelude::*;

    fn poly_specs() -> Vec<OperatorSpec<Poly>> {
        let q = rat(2, 5);
        vec![
            OperatorSpec::derivative(),
            OperatorSpec::backward_shift_eta1(),
            OperatorSpec::backward_shift_eta_s(),
            OperatorSpec::delta_x(),
            OperatorSpec::q_derivative_eta_tq(&q),
            OperatorSpec::q_derivative_eta1(&q),
        ]
    }

    #[test]
    fn leibniz_examples() {
        let x = Poly::x();
        for spec in poly_specs() {
            assert!(spec
                .leibniz_check(&x, &Poly::from_ints(&[1, 2, 3]), 0)
                .unwrap()
                .is_zero());
        }
        assert!(OperatorSpec::derivative().leibniz_check(&x, &x, 2).unwrap().is_zero());
        assert!(OperatorSpec::backward_shift_eta_s()
            .leibniz_check(&x, &x, 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn wrong_twist_is_detected() {
        // η = S with the T_{k,n} of the η = 1 factorization is not a Leibniz rule.
        let mut spec = OperatorSpec::backward_shift_eta1();
        spec.eta = Arc::new(|f, k| Ok(shift_s(f, k)));
        let f = Poly::from_ints(&[0, 0, 1]);
        assert!(!spec.leibniz_check(&f, &f, 2).unwrap().is_zero());
    }

    #[test]
    fn commutations() {
        let q = rat(3, 7);
        let f = Poly::from_ints(&[2, -1, 0, 5, 1]);
        assert_eq!(shift_s(&backward_shift(&f), 1), backward_shift(&shift_s(&f, 1)));
        let lhs = q_derivative(&q_dilate(&f, &q), &q);
        let rhs = q_dilate(&q_derivative(&f, &q), &q).scale(&G::from(&q));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lowering_tags_drop_degree() {
        let q = rat(1, 3);
        let f = Poly::from_ints(&[1, 0, -2, 0, 3]);
        for tag in [
            LoweringTag::Derivative,
            LoweringTag::NegForwardShift,
            LoweringTag::QDerivativeInverse,
            LoweringTag::DeltaX,
            LoweringTag::DeltaX2,
            LoweringTag::AwDq,
        ] {
            // δ/δx² lowers the degree in x² by one
            let expect = if tag == LoweringTag::DeltaX2 { 2 } else { 3 };
            assert_eq!(tag.apply(&f, Some(&q)).unwrap().degree(), Some(expect), "{tag}");
        }
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..=9, 1i64..=4, -3i64..=3), 1..=max_deg + 1)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(a, b, c)| G::new(rat(a, b), rat(c, b))).collect()))
    }

    fn even(f: &Poly) -> Poly {
        let sq = Poly::from_ints(&[0, 0, 1]);
        f.coeffs()
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &sq) + &Poly::constant(c.clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn poly_schemes_obey_leibniz(f in small_poly(5), g in small_poly(5), n in 0usize..=6) {
            for spec in poly_specs() {
                let r = spec.leibniz_check(&f, &g, n).unwrap();
                prop_assert!(r.is_zero(), "{} n={} residual {}", spec.scheme, n, r);
            }
        }

        #[test]
        fn wilson_scheme_obeys_leibniz(f in small_poly(2), g in small_poly(2), n in 0usize..=6) {
            let spec = OperatorSpec::delta_x2();
            let r = spec.leibniz_check(&even(&f), &even(&g), n).unwrap();
            prop_assert!(r.is_zero());
        }

        #[test]
        fn askey_wilson_scheme_obeys_leibniz(f in small_poly(5), g in small_poly(5), n in 0usize..=6) {
            let spec = OperatorSpec::askey_wilson(&rat(2, 3));
            let r = spec.leibniz_check(&lift_to_laurent(&f), &lift_to_laurent(&g), n).unwrap();
            prop_assert!(r.is_zero());
        }

        #[test]
        fn eta_is_multiplicative(f in small_poly(4), g in small_poly(4), k in -3i64..=3) {
            for spec in poly_specs() {
                let prod = (spec.eta)(&(&f * &g), k).unwrap();
                prop_assert_eq!(prod, &(spec.eta)(&f, k).unwrap() * &(spec.eta)(&g, k).unwrap());
            }
        }
    }
}
