//! Property-based checks on randomly generated small monomial ideals:
//! antichain canonicity, closure monotonicity and idempotence, oracle
//! agreement between the polyhedral and definition-based closure routes,
//! and length cross-checks.

use proptest::prelude::*;

use normlab::ideal::minimalize;
use normlab::newton::{closure_by_definition, closure_of_power};
use normlab::ring::{Exponent, PolyRing};
use normlab::MonomialIdeal;

/// Random proper monomial ideal with bounded shape; `None` when the draw
/// degenerates to the zero or unit ideal.
fn arb_proper_ideal(
    d: usize,
    max_exp: u64,
    max_gens: usize,
) -> impl Strategy<Value = Option<MonomialIdeal>> {
    prop::collection::vec(
        prop::collection::vec(0..=max_exp, d),
        1..=max_gens,
    )
    .prop_map(move |vectors| {
        let gens: Vec<Exponent> = vectors
            .into_iter()
            .map(Exponent::new)
            .filter(|e| !e.is_zero())
            .collect();
        if gens.is_empty() {
            return None;
        }
        let ideal = MonomialIdeal::new(PolyRing::standard(d), gens).unwrap();
        ideal.is_proper().then_some(ideal)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn minimalize_is_an_idempotent_antichain(
        vectors in prop::collection::vec(prop::collection::vec(0u64..=5, 3), 0..6)
    ) {
        let gens: Vec<Exponent> = vectors.into_iter().map(Exponent::new).collect();
        let reduced = minimalize(gens);
        // antichain: no strict divisibility either way
        for (i, a) in reduced.iter().enumerate() {
            for (j, b) in reduced.iter().enumerate() {
                if i != j {
                    prop_assert!(!a.divides(b), "{a} divides {b}");
                }
            }
        }
        prop_assert_eq!(minimalize(reduced.clone()), reduced.clone());
        // sorted canonically
        let mut sorted = reduced.clone();
        sorted.sort();
        prop_assert_eq!(sorted, reduced);
    }

    #[test]
    fn product_generators_stay_in_ideal(
        maybe_a in arb_proper_ideal(2, 4, 3),
        maybe_b in arb_proper_ideal(2, 4, 3),
    ) {
        if let (Some(a), Some(b)) = (maybe_a, maybe_b) {
            let prod = a.multiply(&b).unwrap();
            for g in prod.generators() {
                prop_assert!(a.contains(g));
                prop_assert!(b.contains(g));
            }
            prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        }
    }

    #[test]
    fn closure_contains_ideal_and_is_idempotent(
        maybe_i in arb_proper_ideal(3, 4, 4),
    ) {
        if let Some(i) = maybe_i {
            let c = closure_of_power(&i, 1).unwrap();
            prop_assert!(c.contains_ideal(&i), "I not inside its closure");
            prop_assert_eq!(closure_of_power(&c, 1).unwrap(), c);
        }
    }

    #[test]
    fn closure_powers_multiply_into_higher_closures(
        maybe_i in arb_proper_ideal(2, 4, 3),
    ) {
        if let Some(i) = maybe_i {
            let c1 = closure_of_power(&i, 1).unwrap();
            let c2 = closure_of_power(&i, 2).unwrap();
            let c3 = closure_of_power(&i, 3).unwrap();
            prop_assert!(c2.contains_ideal(&c1.multiply(&c1).unwrap()));
            prop_assert!(c3.contains_ideal(&c1.multiply(&c2).unwrap()));
            prop_assert!(c2.contains_ideal(&i.power(2).unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn polyhedral_closure_matches_definition(
        maybe_i in arb_proper_ideal(2, 3, 3),
        n in 1u32..=2,
    ) {
        if let Some(i) = maybe_i {
            let fast = closure_of_power(&i, n).unwrap();
            let slow = closure_by_definition(&i, n, 12).unwrap();
            prop_assert_eq!(fast, slow);
        }
    }

    #[test]
    fn colength_matches_slice_sum(
        exps in prop::collection::vec(1u64..=4, 2),
        extra in prop::collection::vec(prop::collection::vec(0u64..=4, 2), 0..2),
    ) {
        // force m-primality with pure powers, then add noise generators
        let mut gens = vec![
            Exponent::new(vec![exps[0], 0]),
            Exponent::new(vec![0, exps[1]]),
        ];
        gens.extend(extra.into_iter().map(Exponent::new));
        let i = MonomialIdeal::new(PolyRing::standard(2), gens).unwrap();
        if !i.is_unit() {
            let colength = i.colength().unwrap();
            let max_deg = i.max_generator_degree();
            let mut total = 0;
            let mut e = 0;
            loop {
                let s = i.hilbert_slice(e);
                if s == 0 && e >= max_deg {
                    break;
                }
                total += s;
                e += 1;
            }
            prop_assert_eq!(colength, total);
        }
    }
}
