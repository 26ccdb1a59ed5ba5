use burchnall::algebra::{rat, Poly, G};
use burchnall::burchnall::{closed_expansion, theorem21_residual, ClosedId};
use burchnall::families::{raise_chain, recurrence_extract, standard_poly, Family, ParamPoint};
use burchnall::functional::build_functional;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, 1i64..=5), 1..=max_deg + 1)
        .prop_map(|cs| Poly::new(cs.into_iter().map(|(a, b)| G::from(rat(a, b))).collect()))
}

fn family_strategy() -> impl Strategy<Value = Family> {
    prop::sample::select(
        Family::ALL
            .into_iter()
            .filter(|f| !f.schemes().is_empty())
            .collect::<Vec<_>>(),
    )
}

/// Families whose polynomials have degree `n` in `x`; Wilson's are polynomials
/// in `x²`.
fn x_families() -> Vec<Family> {
    Family::ALL.into_iter().filter(|f| *f != Family::Wilson).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn operational_formula_holds(family in family_strategy(), seed in any::<u64>(), f in poly_strategy(3), n in 0usize..=4) {
        let nu = family.sample(&mut ChaCha8Rng::seed_from_u64(seed));
        for scheme in family.schemes() {
            let r = theorem21_residual(&nu, scheme, n, &f).unwrap();
            prop_assert!(r.is_zero(), "{family}/{scheme} n={n}: {r}");
        }
    }

    #[test]
    fn standard_polynomials_satisfy_a_three_term_recurrence(family in prop::sample::select(x_families()), seed in any::<u64>()) {
        let nu = family.sample(&mut ChaCha8Rng::seed_from_u64(seed));
        let top = if family == Family::Krawtchouk {
            usize::try_from(nu.get("N").unwrap().to_integer()).unwrap().saturating_sub(1)
        } else {
            5
        };
        let rec = recurrence_extract(&nu, top).unwrap();
        prop_assert!(rec.c.iter().skip(1).all(|c| !c.is_zero()));
    }
}

#[test]
fn chain_and_standard_forms_share_zeros_of_the_functional() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for family in Family::ALL.into_iter().filter(|f| *f != Family::Krawtchouk) {
        let nu = family.sample(&mut rng);
        let l = build_functional(&nu, 6).unwrap();
        for n in 1..=6 {
            assert!(
                l.apply(&standard_poly(&nu, n).unwrap()).unwrap().is_zero(),
                "{family} n={n}"
            );
            assert!(
                l.apply(&raise_chain(&nu, n).unwrap()).unwrap().is_zero(),
                "{family} n={n}"
            );
        }
    }
}

#[test]
fn closed_expansion_examples() {
    let h = ParamPoint::new(Family::Hermite, &[]);
    let e = closed_expansion(ClosedId::Hermite, &h, 1, 1).unwrap();
    assert_eq!(e.lhs().unwrap(), Poly::from_ints(&[-2, 0, 4]));
    assert!(e.residual().unwrap().is_zero());
    let c = ParamPoint::new(Family::Charlier, &[("a", rat(3, 1))]);
    assert!(closed_expansion(ClosedId::CharlierEta1, &c, 2, 1)
        .unwrap()
        .residual()
        .unwrap()
        .is_zero());
}
