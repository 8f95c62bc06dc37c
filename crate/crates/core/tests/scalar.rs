use num_traits::{One, Zero};
use proptest::prelude::*;
use wreath_vo::scalar::{rat, Rational};
use wreath_vo::Cyclo;

const CONDUCTORS: [u32; 10] = [1, 3, 4, 5, 7, 8, 9, 12, 15, 24];

fn cyclo() -> impl Strategy<Value = Cyclo> {
    (prop::sample::select(CONDUCTORS.to_vec()), prop::collection::vec((-4i64..=4, 1i64..=3), 24)).prop_map(
        |(n, coeffs)| {
            (0..n as usize)
                .map(|k| Cyclo::root_of_unity(n, k as i64).scale(&rat(coeffs[k].0, coeffs[k].1)))
                .sum()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclo::one(), a.clone());
    }

    #[test]
    fn inverses(a in cyclo()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in cyclo(), b in cyclo()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn galois_is_multiplicative(a in cyclo(), b in cyclo(), k in prop::sample::select(vec![1i64, 11, 13, 17, 19, 23, -1])) {
        // every k listed is a unit mod every conductor used
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
    }

    #[test]
    fn hermitian_square_has_positive_trace(a in cyclo()) {
        let t = (&a * &a.conj()).trace();
        if a.is_zero() {
            prop_assert!(t.is_zero());
        } else {
            prop_assert!(t > Rational::zero());
            prop_assert!((&a * &a.conj()).norm() > Rational::zero());
        }
    }

    #[test]
    fn text_round_trip(a in cyclo()) {
        let back: Cyclo = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn embedding_preserves_value(a in cyclo(), m in 1u32..=4) {
        let big = a.conductor() * m;
        let e = a.embed(big).unwrap();
        prop_assert_eq!(&e, &a);
        prop_assert_eq!(&(&e * &e), &(&a * &a));
    }
}

#[test]
fn known_identities() {
    let z = |n, k| Cyclo::root_of_unity(n, k);
    // 1 + ζ_3 + ζ_3^2 = 0
    assert!((&(&Cyclo::one() + &z(3, 1)) + &z(3, 2)).is_zero());
    // (ζ_5 + ζ_5^4)(ζ_5^2 + ζ_5^3) = −1
    assert_eq!(&(&z(5, 1) + &z(5, 4)) * &(&z(5, 2) + &z(5, 3)), Cyclo::from_int(-1));
    // (ζ_8 + ζ_8^7)^2 = 2
    let s = &z(8, 1) + &z(8, 7);
    assert_eq!(&s * &s, Cyclo::from_int(2));
    // ζ_8^2 = i = ζ_4
    assert_eq!(z(8, 2), z(4, 1));
    // ζ_6 = −ζ_3^2
    assert_eq!(z(6, 1), -z(3, 2));
    assert_eq!(z(12, 4), z(3, 1));
    assert_eq!(z(7, 3).conj(), z(7, 4));
    assert_eq!(z(9, 2).pow(9), Cyclo::one());
    assert_eq!(Cyclo::from_rational(rat(3, 4)).to_rational(), Some(rat(3, 4)));
    assert!(z(5, 1).to_rational().is_none());
    assert_eq!(z(5, 1).trace(), rat(-1, 1));
    assert_eq!(Rational::one(), z(5, 2).norm());
}
