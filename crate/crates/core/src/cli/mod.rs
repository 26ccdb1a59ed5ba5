//! Suite harness behind the command-line tool: identity catalogue, seeded
//! case planning, parallel execution and deterministic reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rat_to_string, Poly, Rational, G};
use crate::burchnall::{
    check_shifts, closed_expansion, corollary22_residual, theorem21_residual, AnyExpansion, ClosedId,
};
use crate::error::{Error, Result};
use crate::families::{sample_rational, Family, ParamPoint};
use crate::functional::{corollary23_check, toda_orthogonality_check};
use crate::ops::Scheme;
use crate::toda::{
    modified_expansion, sample_scalar, toda_from_recurrence_crosscheck, toda_residuals, ModifiedId, TodaSolution,
};

pub const SCHEMA: u32 = 1;

/// Identities runnable from the command line, in catalogue order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Closed(ClosedId),
    Modified(ModifiedId),
    Operational,
    GenericExpansion,
    Adjointness,
    TodaProp71,
    TodaCrosscheck,
    TodaOrthogonality,
}

impl Identity {
    pub fn all() -> Vec<Identity> {
        let mut out: Vec<Identity> = ClosedId::ALL.into_iter().map(Identity::Closed).collect();
        out.extend(ModifiedId::ALL.into_iter().map(Identity::Modified));
        out.extend([
            Identity::Operational,
            Identity::GenericExpansion,
            Identity::Adjointness,
            Identity::TodaProp71,
            Identity::TodaCrosscheck,
            Identity::TodaOrthogonality,
        ]);
        out
    }

    pub fn id(self) -> &'static str {
        match self {
            Identity::Closed(c) => c.id(),
            Identity::Modified(m) => m.id(),
            Identity::Operational => "operational-formula",
            Identity::GenericExpansion => "generic-expansion",
            Identity::Adjointness => "adjoint-mass-ratio",
            Identity::TodaProp71 => "toda-prop71",
            Identity::TodaCrosscheck => "toda-crosscheck",
            Identity::TodaOrthogonality => "toda-orthogonality",
        }
    }

    pub fn parse(s: &str) -> Result<Identity> {
        Self::all()
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_owned()))
    }

    /// Families the identity is instantiated for.
    pub fn families(self) -> Vec<Family> {
        match self {
            Identity::Closed(c) => vec![c.family()],
            Identity::Modified(m) => vec![m.family()],
            Identity::Operational | Identity::GenericExpansion => {
                Family::ALL.into_iter().filter(|f| !f.schemes().is_empty()).collect()
            }
            Identity::Adjointness => vec![
                Family::Hermite,
                Family::Laguerre,
                Family::Jacobi,
                Family::Meixner,
                Family::Charlier,
                Family::MeixnerPollaczek,
                Family::BigQJacobi,
            ],
            Identity::TodaProp71 | Identity::TodaCrosscheck => TodaSolution::ALL.iter().map(|s| s.family()).collect(),
            Identity::TodaOrthogonality => vec![
                Family::Hermite,
                Family::Laguerre,
                Family::Meixner,
                Family::Charlier,
                Family::MeixnerPollaczek,
            ],
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Identity::Closed(_) => "closed-form expansion of p_{n+m}",
            Identity::Modified(_) => "expansion of a modified-weight polynomial",
            Identity::Operational => "operational formula for a random polynomial f, every Leibniz form",
            Identity::GenericExpansion => "generic expansion of p_{n+m}, every Leibniz form",
            Identity::Adjointness => "adjointness under the moment functionals, constant mass ratio",
            Identity::TodaProp71 => "explicit Toda lattice solutions",
            Identity::TodaCrosscheck => "Toda solutions against recurrences at the modified parameters",
            Identity::TodaOrthogonality => "Toda expansion sums orthogonal for the modified functional",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub families: Vec<Family>,
    pub identities: Vec<String>,
    pub max_n: usize,
    pub max_m: usize,
    pub trials: usize,
    pub seed: u64,
    /// Explicit values that override sampled parameters of the same name.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(skip)]
    pub timings: bool,
    #[serde(skip)]
    pub format: Format,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            families: vec![],
            identities: vec![],
            max_n: 4,
            max_m: 4,
            trials: 1,
            seed: 0,
            params: BTreeMap::new(),
            timings: false,
            format: Format::Json,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ResidualSummary {
    Zero,
    Nonzero { leading: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub family: Family,
    pub identity: String,
    pub params: ParamPoint,
    pub n: usize,
    pub m: usize,
    pub extras: BTreeMap<String, String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_summary: Option<ResidualSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Totals {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub config: SuiteConfig,
    pub cases: Vec<CaseReport>,
    pub totals: Totals,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.totals.cases == self.totals.passed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let t = &self.totals;
        let _ = writeln!(s, "# Verification report\n");
        let _ = writeln!(
            s,
            "seed {}, {} cases, {} passed, {} failed, {} errors\n",
            self.seed, t.cases, t.passed, t.failed, t.errors
        );
        let _ = writeln!(s, "| case | parameters | extras | result |");
        let _ = writeln!(s, "|---|---|---|---|");
        for c in &self.cases {
            let extras = c
                .extras
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            let result = match (&c.error, &c.residual_summary) {
                (Some(e), _) => format!("error: {e}"),
                (None, Some(ResidualSummary::Nonzero { leading })) => format!("FAIL, leading term {leading}"),
                _ => "pass".to_owned(),
            };
            let _ = writeln!(s, "| {} | {} | {} | {} |", c.case, c.params.describe(), extras, result);
        }
        s
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => self.to_json(),
            Format::Markdown => self.to_markdown(),
        }
    }
}

/// One planned case: everything needed to run it is fixed at planning time.
#[derive(Debug, Clone)]
struct Planned {
    key: String,
    identity: Identity,
    nu: Result<ParamPoint>,
    n: usize,
    m: usize,
    scalar: Option<Rational>,
    f: Option<Poly>,
    scheme: Option<Scheme>,
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn apply_overrides(mut nu: ParamPoint, overrides: &BTreeMap<String, Rational>) -> Result<ParamPoint> {
    let mut touched = false;
    for (k, v) in overrides {
        if nu.family.param_names().contains(&k.as_str()) {
            nu.values.insert(k.clone(), v.clone());
            touched = true;
        }
    }
    if touched {
        nu.family.admissible(&nu)?;
    }
    Ok(nu)
}

/// Samples until every shift `ν + kσ`, `k ≤ top`, is admissible.
fn sample_for(family: Family, top: usize, rng: &mut ChaCha8Rng) -> ParamPoint {
    loop {
        let nu = family.sample(rng);
        if family.schemes().is_empty() || check_shifts(&nu, top).is_ok() {
            return nu;
        }
    }
}

fn krawtchouk_n(nu: &ParamPoint) -> usize {
    nu.get("N")
        .ok()
        .and_then(|v| v.to_integer().try_into().ok())
        .unwrap_or(0)
}

fn degree_grid(identity: Identity, family: Family, cfg: &SuiteConfig) -> Vec<(usize, usize)> {
    let classical_cap = |f: Family| {
        if matches!(
            f,
            Family::Wilson | Family::BigQJacobi | Family::BigQLaguerre | Family::AskeyWilson | Family::CqHermite
        ) {
            6
        } else {
            8
        }
    };
    let pairs = |cap: usize| {
        let mut v = vec![];
        for n in 0..=cfg.max_n {
            for m in 0..=cfg.max_m {
                if n + m <= cap {
                    v.push((n, m));
                }
            }
        }
        v
    };
    match identity {
        Identity::Closed(c) => pairs(c.max_total()),
        Identity::GenericExpansion => pairs(classical_cap(family)),
        Identity::Modified(id) => (0..=cfg.max_n.min(id.max_n())).map(|n| (n, 0)).collect(),
        Identity::Operational => (0..=cfg.max_n.min(6)).map(|n| (n, 0)).collect(),
        Identity::Adjointness => (1..=cfg.max_n.clamp(1, 3)).map(|n| (n, 0)).collect(),
        Identity::TodaProp71 => (1..=cfg.max_n.max(1)).map(|n| (n, 0)).collect(),
        Identity::TodaCrosscheck => vec![(cfg.max_n.clamp(1, 6), 0)],
        Identity::TodaOrthogonality => (1..=cfg.max_n.clamp(1, 6)).map(|n| (n, 0)).collect(),
    }
}

fn selected(cfg: &SuiteConfig) -> Result<Vec<Identity>> {
    let ids = if cfg.identities.is_empty() {
        Identity::all()
    } else {
        cfg.identities
            .iter()
            .map(|s| Identity::parse(s))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(ids)
}

fn plan(cfg: &SuiteConfig) -> Result<Vec<Planned>> {
    if cfg.trials == 0 {
        return Err(Error::Parse("trials must be at least 1".into()));
    }
    let overrides = cfg
        .params
        .iter()
        .map(|(k, v)| Ok((k.clone(), crate::algebra::parse_rational(v)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let mut out = vec![];
    for identity in selected(cfg)? {
        for family in identity.families() {
            if !cfg.families.is_empty() && !cfg.families.contains(&family) {
                continue;
            }
            let schemes: Vec<Option<Scheme>> = match identity {
                Identity::Operational | Identity::GenericExpansion => family.schemes().into_iter().map(Some).collect(),
                _ => vec![None],
            };
            for scheme in schemes {
                let grid = degree_grid(identity, family, cfg);
                let top = grid.iter().map(|(n, m)| n + m).max().unwrap_or(0);
                for trial in 0..cfg.trials {
                    let label = format!("{}:{}:{}", identity.id(), family.tag(), scheme.map_or("", |s| s.name()));
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ fnv1a(&label) ^ trial as u64);
                    let nu = apply_overrides(sample_for(family, top, &mut rng), &overrides);
                    let scalar = match (identity, &nu) {
                        (Identity::Modified(id), Ok(nu)) if id.has_scalar() => Some(sample_scalar(nu, &mut rng)),
                        (Identity::TodaCrosscheck | Identity::TodaOrthogonality, Ok(nu)) => {
                            Some(sample_scalar(nu, &mut rng))
                        }
                        _ => None,
                    };
                    let f = matches!(identity, Identity::Operational)
                        .then(|| Poly::new((0..=4).map(|_| G::from(sample_rational(&mut rng, (-3, 3)))).collect()));
                    for &(n, m) in &grid {
                        if family == Family::Krawtchouk {
                            let cap = nu.as_ref().map(krawtchouk_n).unwrap_or(0);
                            if n >= cap {
                                continue;
                            }
                        }
                        let mut key = format!("{}/{}", identity.id(), family.tag());
                        if let Some(s) = scheme {
                            let _ = write!(key, "/{}", s.name());
                        }
                        let _ = write!(key, "/t{trial:03}/n{n:02}/m{m:02}");
                        out.push(Planned {
                            key,
                            identity,
                            nu: nu.clone(),
                            n,
                            m,
                            scalar: scalar.clone(),
                            f: f.clone(),
                            scheme,
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

fn summarize(r: &Poly) -> ResidualSummary {
    if r.is_zero() {
        ResidualSummary::Zero
    } else {
        ResidualSummary::Nonzero {
            leading: r.leading_term(),
        }
    }
}

fn first_nonzero<'a>(vals: impl IntoIterator<Item = &'a G>) -> ResidualSummary {
    match vals.into_iter().find(|v| !v.is_zero()) {
        None => ResidualSummary::Zero,
        Some(v) => ResidualSummary::Nonzero { leading: v.to_string() },
    }
}

fn run_case(p: &Planned, extras: &mut BTreeMap<String, String>) -> Result<ResidualSummary> {
    let nu = p.nu.clone()?;
    if let Some(s) = &p.scalar {
        extras.insert("s".into(), rat_to_string(s));
    }
    if let Some(sc) = p.scheme {
        extras.insert("scheme".into(), sc.name().into());
    }
    Ok(match p.identity {
        Identity::Closed(id) => summarize(&closed_expansion(id, &nu, p.n, p.m)?.residual()?),
        Identity::Modified(id) => {
            let zero = Rational::from_integer(0.into());
            let e = modified_expansion(id, &nu, p.n, p.scalar.as_ref().unwrap_or(&zero))?;
            summarize(&e.residual())
        }
        Identity::Operational => {
            let f = p.f.as_ref().expect("planned with f");
            extras.insert("f".into(), f.to_string());
            summarize(&theorem21_residual(
                &nu,
                p.scheme.expect("planned with scheme"),
                p.n,
                f,
            )?)
        }
        Identity::GenericExpansion => summarize(&corollary22_residual(
            &nu,
            p.scheme.expect("planned with scheme"),
            p.n,
            p.m,
        )?),
        Identity::Adjointness => {
            extras.insert("D".into(), "6".into());
            let rep = corollary23_check(&nu, p.n, 6)?;
            if let Some(rho) = &rep.witness.rho {
                extras.insert("rho".into(), rho.to_string());
            }
            match rep.failures.first() {
                None => ResidualSummary::Zero,
                Some(f) => ResidualSummary::Nonzero { leading: f.clone() },
            }
        }
        Identity::TodaProp71 => {
            let (r1, r2) = toda_residuals(TodaSolution::for_family(nu.family)?, p.n, &nu)?;
            match [r1, r2].into_iter().find(|r| !r.is_zero()) {
                None => ResidualSummary::Zero,
                Some(r) => ResidualSummary::Nonzero {
                    leading: r.num().leading_term(),
                },
            }
        }
        Identity::TodaCrosscheck => {
            let chk = toda_from_recurrence_crosscheck(&nu, p.scalar.as_ref().expect("planned with scalar"), p.n)?;
            first_nonzero(chk.b_diff.iter().chain(&chk.c_diff))
        }
        Identity::TodaOrthogonality => {
            let out = toda_orthogonality_check(&nu, p.n, p.scalar.as_ref().expect("planned with scalar"))?;
            first_nonzero(out.iter().map(|(_, _, v)| v))
        }
    })
}

/// Runs every selected case. Identical configurations give identical
/// reports; `elapsed_ms` is filled only when timings are requested.
pub fn verify(cfg: &SuiteConfig) -> Result<Report> {
    let planned = plan(cfg)?;
    let cases: Vec<CaseReport> = planned
        .par_iter()
        .map(|p| {
            let start = Instant::now();
            let mut extras = BTreeMap::new();
            let outcome = run_case(p, &mut extras);
            let elapsed = cfg.timings.then(|| start.elapsed().as_millis() as u64);
            let family =
                p.nu.as_ref()
                    .map(|nu| nu.family)
                    .unwrap_or_else(|_| family_of_key(&p.key));
            let params = p.nu.clone().unwrap_or_else(|_| ParamPoint::new(family, &[]));
            let (pass, residual_summary, error) = match outcome {
                Ok(r) => (r == ResidualSummary::Zero, Some(r), None),
                Err(e) => (false, None, Some(e.to_string())),
            };
            CaseReport {
                case: p.key.clone(),
                family,
                identity: p.identity.id().to_owned(),
                params,
                n: p.n,
                m: p.m,
                extras,
                pass,
                residual_summary,
                error,
                elapsed_ms: elapsed,
            }
        })
        .collect();
    let mut totals = Totals {
        cases: cases.len(),
        ..Totals::default()
    };
    for c in &cases {
        match (c.pass, &c.error) {
            (true, _) => totals.passed += 1,
            (false, Some(_)) => totals.errors += 1,
            (false, None) => totals.failed += 1,
        }
    }
    Ok(Report {
        schema: SCHEMA,
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        seed: cfg.seed,
        config: cfg.clone(),
        cases,
        totals,
    })
}

fn family_of_key(key: &str) -> Family {
    key.split('/')
        .nth(1)
        .and_then(|t| Family::parse(t).ok())
        .unwrap_or(Family::Hermite)
}

/// One rendered instance of an expansion identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionTable {
    pub identity: String,
    pub params: ParamPoint,
    pub n: usize,
    pub m: usize,
    pub extras: BTreeMap<String, String>,
    pub lhs: String,
    pub terms: Vec<(usize, String)>,
    pub residual: String,
}

impl ExpansionTable {
    pub fn residual_is_zero(&self) -> bool {
        self.residual == "0"
    }
}

impl std::fmt::Display for ExpansionTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.identity)?;
        if !self.params.values.is_empty() {
            write!(f, " at {}", self.params.describe())?;
        }
        writeln!(f, " with n={}, m={}", self.n, self.m)?;
        for (k, v) in &self.extras {
            writeln!(f, "  {k} = {v}")?;
        }
        writeln!(f, "LHS: {}", self.lhs)?;
        for (k, t) in &self.terms {
            writeln!(f, "  k={k}: {t}")?;
        }
        write!(f, "residual: {}", self.residual)
    }
}

/// Expands a closed or modified identity at explicit parameters. Every
/// parameter of the family must be given.
pub fn expand(
    identity: &str,
    params: &BTreeMap<String, String>,
    n: usize,
    m: usize,
    scalar: Option<&str>,
) -> Result<ExpansionTable> {
    let identity = Identity::parse(identity)?;
    let family = match identity {
        Identity::Closed(c) => c.family(),
        Identity::Modified(id) => id.family(),
        _ => {
            return Err(Error::Unsupported(format!(
                "{} is not an expansion identity",
                identity.id()
            )))
        }
    };
    let mut nu = ParamPoint::new(family, &[]);
    for name in family.param_names() {
        let v = params
            .get(*name)
            .ok_or_else(|| Error::MissingParameter((*name).to_owned()))?;
        nu.values.insert((*name).to_owned(), crate::algebra::parse_rational(v)?);
    }
    if let Some(extra) = params.keys().find(|k| !family.param_names().contains(&k.as_str())) {
        return Err(Error::Parse(format!("{family} has no parameter `{extra}`")));
    }
    family.admissible(&nu)?;
    let mut extras = BTreeMap::new();
    let (lhs, terms, residual) = match identity {
        Identity::Closed(id) => {
            let e: AnyExpansion = closed_expansion(id, &nu, n, m)?;
            (e.lhs_string(), e.term_strings(), e.residual()?.to_string())
        }
        Identity::Modified(id) => {
            let s = match (id.has_scalar(), scalar) {
                (true, Some(s)) => crate::algebra::parse_rational(s)?,
                (true, None) => return Err(Error::MissingParameter("s".into())),
                (false, _) => Rational::from_integer(0.into()),
            };
            if id.has_scalar() {
                extras.insert("s".into(), rat_to_string(&s));
            }
            let e = modified_expansion(id, &nu, n, &s)?;
            (
                e.lhs.to_string(),
                e.terms.iter().map(|(k, t)| (*k, t.to_string())).collect(),
                e.residual().to_string(),
            )
        }
        _ => unreachable!(),
    };
    Ok(ExpansionTable {
        identity: identity.id().to_owned(),
        params: nu,
        n,
        m,
        extras,
        lhs,
        terms,
        residual,
    })
}

/// `b_n, c_n` of a Toda solution with the two lattice residuals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TodaRow {
    pub n: usize,
    pub b: String,
    pub c: String,
    pub residual_c: String,
    pub residual_b: String,
}

pub fn toda_table(nu: &ParamPoint, max_n: usize) -> Result<Vec<TodaRow>> {
    let sol = TodaSolution::for_family(nu.family)?;
    nu.family.admissible(nu)?;
    let top = if nu.family == Family::Krawtchouk {
        max_n.min(krawtchouk_n(nu).saturating_sub(1))
    } else {
        max_n
    };
    (1..=top)
        .map(|n| {
            let (r1, r2) = toda_residuals(sol, n, nu)?;
            Ok(TodaRow {
                n,
                b: sol.b(n, nu)?.to_string(),
                c: sol.c(n, nu)?.to_string(),
                residual_c: r1.to_string(),
                residual_b: r2.to_string(),
            })
        })
        .collect()
}

/// Exit codes of the command-line tool.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
}

/// Parses `name=value` pairs.
pub fn parse_assignments(items: &[String]) -> Result<BTreeMap<String, String>> {
    items
        .iter()
        .map(|s| {
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected name=value, got `{s}`")))?;
            Ok((k.trim().to_owned(), v.trim().to_owned()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_grid_has_sixteen_cases() {
        let cfg = SuiteConfig {
            identities: vec!["hermite-expansion".into()],
            max_n: 3,
            max_m: 3,
            seed: 7,
            ..Default::default()
        };
        let rep = verify(&cfg).unwrap();
        assert_eq!(rep.totals.cases, 16);
        assert!(rep.all_pass());
    }

    #[test]
    fn rerun_is_byte_identical() {
        let cfg = SuiteConfig {
            families: vec![Family::Charlier],
            trials: 1,
            seed: 1,
            max_n: 2,
            max_m: 2,
            ..Default::default()
        };
        let a = verify(&cfg).unwrap().to_json();
        let b = verify(&cfg).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
    }

    #[test]
    fn expand_examples() {
        let t = expand("hermite-expansion", &BTreeMap::new(), 1, 1, None).unwrap();
        assert_eq!(t.terms.len(), 2);
        assert!(t.residual_is_zero());
        let nu = parse_assignments(&["nu=1/2".into()]).unwrap();
        let t = expand("laguerre-expansion", &nu, 1, 0, None).unwrap();
        assert_eq!(t.terms.len(), 1);
        assert!(t.residual_is_zero());
    }

    #[test]
    fn inadmissible_override_is_a_case_error() {
        let mut params = BTreeMap::new();
        params.insert("a".to_owned(), "-1".to_owned());
        let cfg = SuiteConfig {
            identities: vec!["charlier-expansion-eta1".into()],
            max_n: 1,
            max_m: 1,
            params,
            ..Default::default()
        };
        let rep = verify(&cfg).unwrap();
        assert!(!rep.all_pass());
        assert_eq!(rep.totals.errors, rep.totals.cases);
    }

    #[test]
    fn unknown_identity_is_rejected() {
        let cfg = SuiteConfig {
            identities: vec!["nope".into()],
            ..Default::default()
        };
        assert!(matches!(verify(&cfg), Err(Error::UnknownIdentity(_))));
    }
}
