//! Normalized moment functionals `L` with `L[1] = 1` and `L[p_n] = 0` for
//! `n ≥ 1`, standing in for integration against the orthogonality measure.

use serde::Serialize;

use crate::algebra::{Carrier, Poly, Rational, G};
use crate::burchnall::operational_rhs;
use crate::error::{Error, Result};
use crate::families::{expand_in_basis, raise_chain, Family, ParamPoint};
use crate::toda::{check_scalar, modified_expansion, modified_point, ModifiedId};
use crate::with_family_spec;

/// Moments of a normalized functional. Wilson polynomials are polynomials
/// in `x²`, so for that family `moments[k]` is `L[x^{2k}]` and odd powers
/// are outside the domain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentFunctional {
    pub family: Family,
    pub nu: ParamPoint,
    pub moments: Vec<G>,
    pub in_square: bool,
}

/// Even part of `f` as a polynomial in `y = x²`; fails on odd terms.
fn to_square_variable(f: &Poly) -> Result<Poly> {
    if !f.is_even() {
        return Err(Error::Unsupported(format!("{f} is not a polynomial in x²")));
    }
    Ok(Poly::new(f.coeffs().iter().step_by(2).cloned().collect()))
}

/// Builds `L[x^k]`, `k ≤ order`, as the `p_0`-coefficient of `x^k` in the
/// basis of raising-chain polynomials.
pub fn build_functional(nu: &ParamPoint, order: usize) -> Result<MomentFunctional> {
    let in_square = nu.family == Family::Wilson;
    let basis = (0..=order)
        .map(|d| {
            let p = raise_chain(nu, d)?;
            if in_square {
                to_square_variable(&p)
            } else {
                Ok(p)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let p0 = basis[0].coeff(0);
    let mut moments = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let c = expand_in_basis(&Poly::monomial(G::one(), k), &basis)?;
        moments.push(&c[0] * &p0);
    }
    Ok(MomentFunctional {
        family: nu.family,
        nu: nu.clone(),
        moments,
        in_square,
    })
}

impl MomentFunctional {
    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn apply(&self, f: &Poly) -> Result<G> {
        let f = if self.in_square {
            to_square_variable(f)?
        } else {
            f.clone()
        };
        if f.degree().is_some_and(|d| d > self.order()) {
            return Err(Error::Unsupported(format!(
                "degree {:?} exceeds functional order {}",
                f.degree(),
                self.order()
            )));
        }
        Ok(f.coeffs()
            .iter()
            .zip(&self.moments)
            .fold(G::zero(), |acc, (c, m)| &acc + &(c * m)))
    }

    /// `L[p_n p_m]` for every `n ≠ m` with `deg p_n + deg p_m` within the
    /// order; all must vanish.
    pub fn gram_offdiagonal(&self) -> Result<Vec<((usize, usize), G)>> {
        let top = self.order();
        let polys = (0..=top)
            .map(|d| raise_chain(&self.nu, d))
            .collect::<Result<Vec<_>>>()?;
        let mut out = vec![];
        for n in 0..=top {
            for m in 0..n {
                if n + m <= top {
                    out.push(((n, m), self.apply(&(&polys[n] * &polys[m]))?));
                }
            }
        }
        Ok(out)
    }

    /// Determinants of the leading Hankel minors `[L[x^{i+j}]]_{i,j<s}`.
    pub fn hankel_determinants(&self) -> Result<Vec<G>> {
        (1..=self.order() / 2 + 1)
            .map(|s| determinant(self.hankel(s)))
            .collect()
    }

    fn hankel(&self, s: usize) -> Vec<Vec<G>> {
        (0..s)
            .map(|i| (0..s).map(|j| self.moments[i + j].clone()).collect())
            .collect()
    }
}

fn determinant(mut a: Vec<Vec<G>>) -> Result<G> {
    let n = a.len();
    let mut det = G::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(G::zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det = &det * &a[col][col];
        let inv = a[col][col].inv()?;
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let factor = &row[col] * &inv;
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *x -= &(&factor * p);
            }
        }
    }
    Ok(det)
}

/// A single `ρ` with `LHS = ρ·RHS` over all pairs where `RHS ≠ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MassRatioWitness {
    pub rho: Option<G>,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjointReport {
    pub witness: MassRatioWitness,
    /// Pairs `(i, j)` where the right-hand side vanishes.
    pub vanishing: usize,
    pub failures: Vec<String>,
}

impl AdjointReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `Σ_k α^n_k w_k η^k(p_{n−k}^{(ν+kσ)}) T_{k,n} f` as a polynomial in `x`.
fn operational_sum(nu: &ParamPoint, n: usize, f: &Poly) -> Result<Poly> {
    let family = nu.family;
    let scheme = *family
        .schemes()
        .first()
        .ok_or_else(|| Error::Unsupported(format!("{family} has no Leibniz form")))?;
    with_family_spec!(family, spec => {
        let form = spec.form(scheme)?;
        let terms = operational_rhs(&spec, form, nu, n, &Carrier::from_poly(f))?;
        crate::algebra::carrier::sum(terms.into_iter().map(|(_, t)| t)).to_poly()
    })
}

/// For `f = x^i`, `g = x^j`, `i + j ≤ D`, compares
/// `L_ν[(Σ_k … T_{k,n} f) g]` with `L_{ν+nσ}[f 𝒟ⁿ g]`, where `𝒟` is the
/// lowering operator adjoint to the raising operators.
pub fn corollary23_check(nu: &ParamPoint, n: usize, d: usize) -> Result<AdjointReport> {
    if n == 0 || d < n {
        return Err(Error::Unsupported("need n >= 1 and D >= n".into()));
    }
    let family = nu.family;
    if matches!(family, Family::Wilson | Family::Krawtchouk) {
        return Err(Error::Unsupported(format!(
            "{family} is not covered by the adjoint check"
        )));
    }
    let tag = family
        .lowering_tag()
        .ok_or_else(|| Error::Unsupported(format!("{family} has no lowering operator")))?;
    let base = family.lowering_base(nu)?;
    let shifted = family.shift(nu, n as i64)?;
    let l_nu = build_functional(nu, n + d)?;
    let l_shift = build_functional(&shifted, d)?;

    let mut rho: Option<G> = None;
    let mut samples = 0;
    let mut vanishing = 0;
    let mut failures = vec![];
    for i in 0..=d {
        let f = Poly::monomial(G::one(), i);
        let lifted = operational_sum(nu, n, &f)?;
        for j in 0..=d - i {
            let g = Poly::monomial(G::one(), j);
            let lhs = l_nu.apply(&(&lifted * &g))?;
            let mut dg = g.clone();
            for _ in 0..n {
                dg = tag.adjoint(&dg, base.as_ref())?;
            }
            let rhs = l_shift.apply(&(&f * &dg))?;
            if rhs.is_zero() {
                vanishing += 1;
                if !lhs.is_zero() {
                    failures.push(format!("f=x^{i}, g=x^{j}: right side 0, left side {lhs}"));
                }
                continue;
            }
            let r = lhs.checked_div(&rhs)?;
            samples += 1;
            match &rho {
                None => rho = Some(r),
                Some(prev) if *prev != r => failures.push(format!("f=x^{i}, g=x^{j}: ratio {r} differs from {prev}")),
                _ => {}
            }
        }
    }
    Ok(AdjointReport {
        witness: MassRatioWitness { rho, samples },
        vanishing,
        failures,
    })
}

type PolyFunctional = Box<dyn Fn(&Poly) -> Result<G>>;

/// The functional of the modified weight the expansion polynomials are
/// orthogonal for, as a map on polynomials.
fn modified_functional(nu: &ParamPoint, s: &Rational, order: usize) -> Result<PolyFunctional> {
    check_scalar(nu, s)?;
    let sg = G::from(s);
    Ok(match nu.family {
        Family::Hermite => {
            // H_n(x − t/2) is orthogonal for e^{−(x − t/2)²}
            let l = build_functional(nu, order)?;
            let half = sg.scale(&Rational::new(1.into(), 2.into()));
            Box::new(move |f: &Poly| l.apply(&f.shift(&half)))
        }
        Family::Laguerre => {
            let l = build_functional(nu, order)?;
            let scale = (&sg + &G::one()).inv()?;
            Box::new(move |f: &Poly| l.apply(&f.dilate(&scale)))
        }
        _ => {
            let l = build_functional(&modified_point(nu, s)?, order)?;
            Box::new(move |f: &Poly| l.apply(f))
        }
    })
}

/// `L_mod[E_n x^p]` for `p < n`, where `E_n` is the `k`-sum of each Toda
/// expansion of the family; all entries vanish when the sums are orthogonal
/// for the modified weight.
pub fn toda_orthogonality_check(nu: &ParamPoint, n: usize, s: &Rational) -> Result<Vec<(ModifiedId, usize, G)>> {
    let ids: Vec<ModifiedId> = ModifiedId::ALL
        .into_iter()
        .filter(|id| id.has_scalar() && id.family() == nu.family)
        .collect();
    if ids.is_empty() {
        return Err(Error::Unsupported(format!("{} has no Toda expansion", nu.family)));
    }
    let l = modified_functional(nu, s, 2 * n)?;
    let mut out = vec![];
    for id in ids {
        let e = modified_expansion(id, nu, n, s)?.rhs();
        for p in 0..n {
            out.push((id, p, l(&(&e * &Poly::monomial(G::one(), p)))?));
        }
    }
    Ok(out)
}
