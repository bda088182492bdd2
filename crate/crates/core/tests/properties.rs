use golden_pascal::{BigInt, BigRational, GoldenNumber, GoldenPoly};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn golden() -> impl Strategy<Value = GoldenNumber> {
    (small_rational(), small_rational()).prop_map(|(x, y)| GoldenNumber::new(x, y))
}

fn integral_golden() -> impl Strategy<Value = GoldenNumber> {
    (-1000i64..=1000, -1000i64..=1000).prop_map(|(x, y)| GoldenNumber::from_integers(x, y))
}

fn small_golden() -> impl Strategy<Value = GoldenNumber> {
    (-5i64..=5, 1i64..=3, -5i64..=5, 1i64..=3)
        .prop_map(|(xn, xd, yn, yd)| GoldenNumber::from_fractions(xn, xd, yn, yd))
}

fn golden_poly() -> impl Strategy<Value = GoldenPoly> {
    prop::collection::vec(small_golden(), 0..=13).prop_map(GoldenPoly::from_coeffs)
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(p in golden(), q in golden(), r in golden()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &GoldenNumber::zero(), p.clone());
        prop_assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn multiplication_is_a_commutative_group_law(p in golden(), q in golden(), r in golden()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &GoldenNumber::one(), p.clone());
        if !p.is_zero() {
            prop_assert_eq!(&p * &p.inv().unwrap(), GoldenNumber::one());
        }
    }

    #[test]
    fn distributivity(p in golden(), q in golden(), r in golden()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn conjugation_is_a_ring_homomorphism(p in golden(), q in golden()) {
        prop_assert_eq!((&p * &q).conj(), &p.conj() * &q.conj());
        prop_assert_eq!((&p + &q).conj(), &p.conj() + &q.conj());
        prop_assert_eq!(p.conj().conj(), p.clone());
    }

    #[test]
    fn norm_is_multiplicative(p in golden(), q in golden()) {
        prop_assert_eq!((&p * &q).norm(), p.norm() * q.norm());
        prop_assert_eq!(p.norm().is_zero(), p.is_zero());
        prop_assert_eq!(GoldenNumber::from_rational(p.norm()), &p * &p.conj());
    }

    #[test]
    fn integral_elements_form_a_subring(p in integral_golden(), q in integral_golden(), e in 0i64..12) {
        prop_assert!((&p + &q).is_integral());
        prop_assert!((&p - &q).is_integral());
        prop_assert!((&p * &q).is_integral());
        prop_assert!((-&p).is_integral());
        prop_assert!(p.conj().is_integral());
        prop_assert!(p.pow(e).unwrap().is_integral());
    }

    #[test]
    fn negative_powers_invert_positive_ones(p in small_golden(), e in 0i64..10) {
        prop_assume!(!p.is_zero());
        prop_assert_eq!(p.pow(-e).unwrap(), p.pow(e).unwrap().inv().unwrap());
    }

    #[test]
    fn text_form_round_trips(p in golden()) {
        prop_assert_eq!(p.to_string().parse::<GoldenNumber>().unwrap(), p);
    }

    #[test]
    fn json_form_round_trips(p in golden()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<GoldenNumber>(&json).unwrap(), p);
    }

    #[test]
    fn polynomial_ring_axioms(p in golden_poly(), q in golden_poly(), r in golden_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn degree_is_additive(p in golden_poly(), q in golden_poly()) {
        let product = &p * &q;
        match (p.degree(), q.degree()) {
            (Some(dp), Some(dq)) => prop_assert_eq!(product.degree(), Some(dp + dq)),
            _ => prop_assert!(product.is_zero()),
        }
    }

    #[test]
    fn argument_scalings_compose(p in golden_poly(), c in small_golden(), d in small_golden()) {
        prop_assert_eq!(p.scale_arg(&c).scale_arg(&d), p.scale_arg(&(&c * &d)));
    }

    #[test]
    fn product_coefficients_are_convolutions(p in golden_poly(), q in golden_poly()) {
        let product = &p * &q;
        let top = p.coeffs().len() + q.coeffs().len();
        for j in 0..=top {
            let expected: GoldenNumber = (0..=j).map(|m| &p.coeff(m) * &q.coeff(j - m)).sum();
            prop_assert_eq!(product.coeff(j), expected);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in golden_poly(), q in golden_poly(), z in small_golden()) {
        prop_assert_eq!((&p * &q).eval(&z), &p.eval(&z) * &q.eval(&z));
        prop_assert_eq!(p.scale_arg(&z).eval(&GoldenNumber::one()), p.eval(&z));
    }

    #[test]
    fn polynomial_json_round_trips(p in golden_poly()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<GoldenPoly>(&json).unwrap(), p);
    }
}

#[test]
fn fibonacci_coordinates_of_phi_powers() {
    let phi = GoldenNumber::phi();
    let (mut f0, mut f1) = (BigInt::zero(), BigInt::one());
    for k in 1..200i64 {
        // φ^k = F(k−1) + F(k)·φ
        assert_eq!(phi.pow(k).unwrap(), GoldenNumber::from_integers(f0.clone(), f1.clone()));
        let next = &f0 + &f1;
        f0 = std::mem::replace(&mut f1, next);
    }
}
