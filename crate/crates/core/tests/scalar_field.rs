use affine_schur::{Params, Scalar, Specialization};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2, -2i32..=2), 1..4).prop_map(|terms| {
        terms.into_iter().fold(Scalar::zero(), |acc, (c, a, b, e)| acc + Scalar::laurent_monomial(c, [a, b, e]))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| n.checked_div(&d).ok())
}

/// Value at an integer point as a reduced-free pair, for cross-multiplied
/// comparison.
fn at(x: &Scalar, pt: &[BigInt; 3]) -> (BigInt, BigInt) {
    x.eval_at(pt)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn inverses(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * a.inv().unwrap(), Scalar::one());
        prop_assert_eq!(a.pow(-2).unwrap() * a.pow(2).unwrap(), Scalar::one());
    }

    #[test]
    fn canonical_form_is_idempotent(a in scalar()) {
        let again = Scalar::new(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(&a.to_string().parse::<Scalar>().unwrap(), &a);
    }

    /// Independent oracle: evaluation at an integer point.
    #[test]
    fn agrees_with_pointwise_evaluation(a in scalar(), b in scalar(), x in 2i64..6, y in 7i64..11, z in 13i64..17) {
        let pt = [BigInt::from(x), BigInt::from(y), BigInt::from(z)];
        let (an, ad) = at(&a, &pt);
        let (bn, bd) = at(&b, &pt);
        prop_assume!(ad != BigInt::from(0) && bd != BigInt::from(0));
        let (pn, pd) = at(&(&a * &b), &pt);
        prop_assert_eq!(pn * (&ad * &bd), (&an * &bn) * pd);
        let (sn, sd) = at(&(&a + &b), &pt);
        prop_assert_eq!(sn * (&ad * &bd), (&an * &bd + &bn * &ad) * sd);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar(), b in scalar()) {
        for spec in [Specialization::B2, Specialization::B1, Specialization::D1] {
            let p = Params::new(spec);
            let (Ok(sa), Ok(sb)) = (p.specialize(&a), p.specialize(&b)) else { continue };
            if let Ok(sum) = p.specialize(&(&a + &b)) {
                prop_assert_eq!(sum, &sa + &sb);
            }
            if let Ok(prod) = p.specialize(&(&a * &b)) {
                prop_assert_eq!(prod, &sa * &sb);
            }
        }
    }
}

#[test]
fn reduced_fraction_examples() {
    let q: Scalar = "q".parse().unwrap();
    let x: Scalar = "(q^2 - 1)/(q - 1)".parse().unwrap();
    assert_eq!(x, &q + Scalar::one());
    let half: Scalar = "1/2".parse().unwrap();
    assert_eq!(&half + &half, Scalar::one());
    assert!("1/(q - q)".parse::<Scalar>().is_err());
}
