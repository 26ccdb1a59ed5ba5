//! Exact scalars and polynomial arithmetic.

pub mod carrier;
pub mod gaussian;
pub mod laurent;
pub mod phase;
pub mod poly;
pub mod rational;
pub mod special;

pub use carrier::Carrier;
pub use gaussian::{ArithOp, GaussianRational, G};
pub use laurent::{chebyshev_lift, chebyshev_project, laurent_to_poly, lift_to_laurent, Laurent, SymLaurent};
pub use phase::UnitPhase;
pub use poly::Poly;
pub use rational::{int, parse_rational, rat, rat_to_string, Rational};
pub use special::{binomial, factorial, pochhammer, q_binomial, q_number, q_pochhammer, sign};

/// Symbolic alias used by operators: `laurent_scale(f, p)` is `z ↦ f(pz)`.
pub fn laurent_scale(f: &SymLaurent, p: &G) -> crate::error::Result<Laurent> {
    f.scale(p)
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=20).prop_map(|(n, d)| rat(n, d))
    }

    fn gauss() -> impl Strategy<Value = G> {
        (small_rat(), small_rat()).prop_map(|(a, b)| G::new(a, b))
    }

    fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(gauss(), 0..=max_deg + 1).prop_map(Poly::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_laws(a in gauss(), b in gauss(), c in gauss()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), G::one());
            }
        }

        #[test]
        fn exact_divide_inverts_product(f in poly(10), g in poly(10)) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
        }

        #[test]
        fn project_inverts_lift(f in poly(12)) {
            prop_assert_eq!(chebyshev_project(&chebyshev_lift(&f)), f);
        }

        #[test]
        fn q_binomial_symmetry(num in 1i64..=63, extra in 1i64..=64) {
            let q = rat(num, num + extra);
            for n in 0..=10 {
                for k in 0..=n {
                    prop_assert_eq!(q_binomial(n, k, &q).unwrap(), q_binomial(n, n - k, &q).unwrap());
                }
            }
        }

        #[test]
        fn pochhammer_step(a in gauss(), k in 0usize..=12) {
            let next = &pochhammer(&a, k) * &(&a + &G::from_int(k as i64));
            prop_assert_eq!(pochhammer(&a, k + 1), next);
        }
    }
}
