use downup_core::{Case, Scalar};
use proptest::prelude::*;

fn case_strategy() -> impl Strategy<Value = Case> {
    prop_oneof![Just(Case::One), Just(Case::Two)]
}

/// `(c0 + c1 r^a s^b) / (c2 + r^e s^f)` with small integers.
fn scalar_strategy(case: Case) -> impl Strategy<Value = Scalar> {
    (
        -4i64..=4,
        -4i64..=4,
        -2i64..=2,
        -2i64..=2,
        1i64..=3,
        -2i64..=2,
        -2i64..=2,
    )
        .prop_map(move |(c0, c1, a, b, c2, e, f)| {
            let num = &Scalar::from_int(c0) + &(&Scalar::from_int(c1) * &case.param_power(a, b));
            let den = &Scalar::from_int(c2) + &case.param_power(e, f);
            num.checked_div(&den).unwrap_or_else(|_| num.clone())
        })
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    case_strategy().prop_flat_map(|c| (scalar_strategy(c), scalar_strategy(c), scalar_strategy(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn equality_is_canonical((a, b, _c) in triple()) {
        // a + b - b must come back to the identical representation
        let round = &(&a + &b) - &b;
        prop_assert_eq!(&round, &a);
        prop_assert_eq!(round.to_string(), a.to_string());
        prop_assert_eq!(a == b, (&a - &b).is_zero());
    }

    #[test]
    fn param_power_is_additive(
        case in case_strategy(),
        m1 in -8i64..=8, n1 in -8i64..=8, m2 in -8i64..=8, n2 in -8i64..=8,
    ) {
        prop_assert_eq!(
            case.param_power(m1 + m2, n1 + n2),
            &case.param_power(m1, n1) * &case.param_power(m2, n2)
        );
    }
}

#[test]
fn case_two_parameter_identities() {
    let c = Case::Two;
    assert_eq!(c.r(), c.s().inv().unwrap());
    assert_eq!(c.r(), c.q().unwrap());
    assert!(Case::One.q().is_none());
    assert_eq!(Case::One.alpha(), &Case::One.r() + &Case::One.s());
}
