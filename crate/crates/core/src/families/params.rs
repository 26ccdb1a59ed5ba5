//! Family tags, parameter points, admissible windows and seeded sampling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{int, rat, rat_to_string, Rational, UnitPhase, G};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Hermite,
    Laguerre,
    Jacobi,
    Meixner,
    Charlier,
    MeixnerPollaczek,
    Wilson,
    BigQJacobi,
    BigQLaguerre,
    AskeyWilson,
    CqHermite,
    Krawtchouk,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Hermite,
        Family::Laguerre,
        Family::Jacobi,
        Family::Meixner,
        Family::Charlier,
        Family::MeixnerPollaczek,
        Family::Wilson,
        Family::BigQJacobi,
        Family::BigQLaguerre,
        Family::AskeyWilson,
        Family::CqHermite,
        Family::Krawtchouk,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Hermite => "hermite",
            Family::Laguerre => "laguerre",
            Family::Jacobi => "jacobi",
            Family::Meixner => "meixner",
            Family::Charlier => "charlier",
            Family::MeixnerPollaczek => "meixner-pollaczek",
            Family::Wilson => "wilson",
            Family::BigQJacobi => "bigqjacobi",
            Family::BigQLaguerre => "bigqlaguerre",
            Family::AskeyWilson => "askey-wilson",
            Family::CqHermite => "cqhermite",
            Family::Krawtchouk => "krawtchouk",
        }
    }

    /// Parameter names in canonical order. `p` is `q^{1/2}` for the
    /// q-families and the success probability for Krawtchouk; `s` is the
    /// half-tangent of the Meixner–Pollaczek angle.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Hermite => &[],
            Family::Laguerre => &["nu"],
            Family::Jacobi => &["alpha", "beta"],
            Family::Meixner => &["beta", "c"],
            Family::Charlier => &["a"],
            Family::MeixnerPollaczek => &["lambda", "s"],
            Family::Wilson => &["a", "b", "c", "d"],
            Family::BigQJacobi => &["a", "b", "c", "p"],
            Family::BigQLaguerre => &["a", "c", "p"],
            Family::AskeyWilson => &["a", "b", "c", "d", "p"],
            Family::CqHermite => &["p"],
            Family::Krawtchouk => &["p", "N"],
        }
    }

    pub fn is_q_family(self) -> bool {
        matches!(
            self,
            Family::BigQJacobi | Family::BigQLaguerre | Family::AskeyWilson | Family::CqHermite
        )
    }

    /// Carried by Laurent polynomials in `z`.
    pub fn is_laurent(self) -> bool {
        matches!(self, Family::AskeyWilson | Family::CqHermite)
    }

    /// Raising-operator parameter shift `ν ↦ ν + kσ`.
    pub fn shift(self, nu: &ParamPoint, k: i64) -> Result<ParamPoint> {
        let mut out = nu.clone();
        let add = |out: &mut ParamPoint, name: &str, step: Rational| -> Result<()> {
            let v = nu.get(name)? + step * int(k);
            out.values.insert(name.to_owned(), v);
            Ok(())
        };
        match self {
            Family::Hermite | Family::Charlier | Family::CqHermite | Family::Krawtchouk => {}
            Family::Laguerre => add(&mut out, "nu", int(1))?,
            Family::Jacobi => {
                add(&mut out, "alpha", int(1))?;
                add(&mut out, "beta", int(1))?;
            }
            Family::Meixner => add(&mut out, "beta", int(1))?,
            Family::MeixnerPollaczek => add(&mut out, "lambda", rat(1, 2))?,
            Family::Wilson => {
                for name in ["a", "b", "c", "d"] {
                    add(&mut out, name, rat(1, 2))?;
                }
            }
            Family::BigQJacobi | Family::BigQLaguerre | Family::AskeyWilson => {
                let p = nu.get("p")?;
                // q-families scale by q; Askey–Wilson by q^{1/2} = p
                let step = if self == Family::AskeyWilson { p } else { &p * &p };
                let factor = crate::algebra::rational::rat_pow(&step, k)?;
                for name in self.param_names().iter().filter(|n| **n != "p") {
                    out.values.insert((*name).to_owned(), nu.get(name)? * &factor);
                }
            }
        }
        Ok(out)
    }

    /// Checks the parameter window.
    pub fn admissible(self, nu: &ParamPoint) -> Result<()> {
        let bad = |reason: String| {
            Err(Error::Inadmissible {
                family: self.tag().into(),
                reason,
            })
        };
        for name in self.param_names() {
            nu.get(name)?;
        }
        let zero = Rational::zero();
        let one = Rational::one();
        let pos = |name: &str| -> Result<bool> { Ok(nu.get(name)?.is_positive()) };
        match self {
            Family::Hermite => {}
            Family::Laguerre => {
                if nu.get("nu")? <= int(-1) {
                    return bad("nu must exceed -1".into());
                }
            }
            Family::Jacobi => {
                if nu.get("alpha")? <= int(-1) || nu.get("beta")? <= int(-1) {
                    return bad("alpha and beta must exceed -1".into());
                }
            }
            Family::Meixner => {
                let c = nu.get("c")?;
                if !pos("beta")? || c <= zero || c >= one {
                    return bad("need beta > 0 and 0 < c < 1".into());
                }
            }
            Family::Charlier => {
                if !pos("a")? {
                    return bad("need a > 0".into());
                }
            }
            Family::MeixnerPollaczek => {
                if !pos("lambda")? || !pos("s")? {
                    return bad("need lambda > 0 and 0 < phi < pi (s > 0)".into());
                }
            }
            Family::Wilson => {
                for name in ["a", "b", "c", "d"] {
                    if !pos(name)? {
                        return bad(format!("{name} must be positive"));
                    }
                }
            }
            Family::BigQJacobi | Family::BigQLaguerre => {
                let p = nu.get("p")?;
                if p <= zero || p >= one {
                    return bad("need 0 < p < 1".into());
                }
                let inv_q = (&p * &p).recip();
                let mut window = vec!["a"];
                if self == Family::BigQJacobi {
                    window.push("b");
                }
                for name in window {
                    let v = nu.get(name)?;
                    if v <= zero || v >= inv_q {
                        return bad(format!("need 0 < {name} < 1/q"));
                    }
                }
                if !nu.get("c")?.is_negative() {
                    return bad("need c < 0".into());
                }
            }
            Family::AskeyWilson => {
                let p = nu.get("p")?;
                if p <= zero || p >= one {
                    return bad("need 0 < p < 1".into());
                }
                for name in ["a", "b", "c", "d"] {
                    if nu.get(name)?.abs() >= one {
                        return bad(format!("need |{name}| < 1"));
                    }
                }
                if nu.get("a")?.is_zero() {
                    return bad("the standard normalization divides by a".into());
                }
            }
            Family::CqHermite => {
                let p = nu.get("p")?;
                if p <= zero || p >= one {
                    return bad("need 0 < p < 1".into());
                }
            }
            Family::Krawtchouk => {
                let p = nu.get("p")?;
                let n = nu.get("N")?;
                if p <= zero || p >= one || !crate::algebra::rational::is_integer(&n) || n < one {
                    return bad("need 0 < p < 1 and integer N >= 1".into());
                }
            }
        }
        Ok(())
    }

    /// Draws a parameter point with numerators and denominators at most 64,
    /// by rejection against [`Family::admissible`].
    pub fn sample<R: Rng>(self, rng: &mut R) -> ParamPoint {
        loop {
            let mut nu = ParamPoint::new(self, &[]);
            for name in self.param_names() {
                let v = match (self, *name) {
                    (Family::Krawtchouk, "N") => int(rng.gen_range(1..=8)),
                    _ => sample_rational(rng, self.window_hint(name)),
                };
                nu.values.insert((*name).to_owned(), v);
            }
            if self.admissible(&nu).is_ok() {
                return nu;
            }
        }
    }

    /// Coarse interval `[lo, hi]` used to propose values before rejection.
    fn window_hint(self, name: &str) -> (i64, i64) {
        match (self, name) {
            (Family::Laguerre, _) | (Family::Jacobi, _) => (-1, 4),
            (Family::BigQJacobi | Family::BigQLaguerre, "c") => (-3, 0),
            (Family::BigQJacobi | Family::BigQLaguerre, "a" | "b") => (0, 2),
            (Family::AskeyWilson, "a" | "b" | "c" | "d") => (-1, 1),
            (_, "p") | (Family::Meixner, "c") => (0, 1),
            _ => (0, 4),
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_owned()))
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::parse(s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Uniform proposal among `num/den` with `den ∈ [1, 64]`, `|num| ≤ 64`, and
/// value in the open interval `(lo, hi)`.
pub fn sample_rational<R: Rng>(rng: &mut R, (lo, hi): (i64, i64)) -> Rational {
    loop {
        let den = rng.gen_range(1..=64i64);
        let min = (lo * den + 1).max(-64);
        let max = (hi * den - 1).min(64);
        if min > max {
            continue;
        }
        return rat(rng.gen_range(min..=max), den);
    }
}

/// A family tag together with exact values for its named parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    pub family: Family,
    pub values: BTreeMap<String, Rational>,
}

impl ParamPoint {
    pub fn new(family: Family, values: &[(&str, Rational)]) -> Self {
        Self {
            family,
            values: values.iter().map(|(k, v)| ((*k).to_owned(), v.clone())).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Result<Rational> {
        self.values
            .get(name)
            .cloned()
            .ok_or_else(|| Error::MissingParameter(name.to_owned()))
    }

    pub fn g(&self, name: &str) -> Result<G> {
        Ok(G::from(self.get(name)?))
    }

    pub fn with(&self, name: &str, v: Rational) -> Self {
        let mut out = self.clone();
        out.values.insert(name.to_owned(), v);
        out
    }

    /// `q = p²` for the q-families.
    pub fn q(&self) -> Result<Rational> {
        let p = self.get("p")?;
        Ok(&p * &p)
    }

    /// `e^{iφ}` for Meixner–Pollaczek.
    pub fn phase(&self) -> Result<UnitPhase> {
        Ok(UnitPhase::from_half_tangent(self.get("s")?))
    }

    /// `k=v, ...` in canonical parameter order.
    pub fn describe(&self) -> String {
        self.values
            .iter()
            .map(|(k, v)| format!("{k}={}", crate::algebra::rational::rat_to_string(v)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.values.len()))?;
        for (k, v) in &self.values {
            m.serialize_entry(k, &rat_to_string(v))?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_admissible_and_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for fam in Family::ALL {
            for _ in 0..20 {
                let nu = fam.sample(&mut rng);
                assert!(fam.admissible(&nu).is_ok());
                for v in nu.values.values() {
                    assert!(v.denom() <= &64.into() && v.numer().abs() <= 64.into());
                }
                // windows are stable under the raising shift
                assert!(fam.admissible(&fam.shift(&nu, 3).unwrap()).is_ok(), "{fam}");
            }
        }
    }

    #[test]
    fn shifts() {
        let nu = ParamPoint::new(
            Family::Wilson,
            &[("a", rat(1, 3)), ("b", int(1)), ("c", int(2)), ("d", rat(1, 2))],
        );
        assert_eq!(Family::Wilson.shift(&nu, 2).unwrap().get("a").unwrap(), rat(4, 3));
        let bq = ParamPoint::new(
            Family::BigQJacobi,
            &[("a", rat(1, 2)), ("b", int(1)), ("c", int(-1)), ("p", rat(1, 2))],
        );
        let s = Family::BigQJacobi.shift(&bq, 1).unwrap();
        assert_eq!(s.get("c").unwrap(), rat(-1, 4));
        assert_eq!(s.get("p").unwrap(), rat(1, 2));
        assert!(Family::Meixner
            .admissible(&ParamPoint::new(Family::Meixner, &[("beta", int(1)), ("c", int(2))]))
            .is_err());
    }

    #[test]
    fn tags_round_trip() {
        for fam in Family::ALL {
            assert_eq!(fam.tag().parse::<Family>().unwrap(), fam);
        }
        assert!("legendre".parse::<Family>().is_err());
    }
}
