use affine_schur::{HeckeAlgebra, Params, Specialization, TensorModule, TensorVec, Variant, WeylElt};
use proptest::prelude::*;

fn word(d: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=d, 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_is_bounded_by_words_and_has_their_parity((d, w) in (2usize..=3).prop_flat_map(|d| (Just(d), word(d, 10)))) {
        let x = WeylElt::from_word(d, &w).unwrap();
        prop_assert!(x.length() <= w.len());
        prop_assert_eq!(x.length() % 2, w.len() % 2);
        prop_assert_eq!(x.inverse().length(), x.length());
        let red = x.reduced_word();
        prop_assert_eq!(red.len(), x.length());
        prop_assert_eq!(WeylElt::from_word(d, &red).unwrap(), x.clone());
        prop_assert_eq!(WeylElt::parse(d, &x.word_string()).unwrap(), x);
    }

    #[test]
    fn action_is_a_right_action(a in word(2, 6), b in word(2, 6), f in prop::collection::vec(-20i64..20, 2)) {
        let (g, h) = (WeylElt::from_word(2, &a).unwrap(), WeylElt::from_word(2, &b).unwrap());
        let n = 8;
        prop_assert_eq!(h.act(&g.act(&f, n), n), g.mul(&h).unwrap().act(&f, n));
    }

    #[test]
    fn hecke_product_is_associative(a in word(2, 3), b in word(2, 3), c in word(2, 3)) {
        let h = HeckeAlgebra::new(2, Params::generic()).unwrap();
        let (x, y, z) = (h.word(&a).unwrap(), h.word(&b).unwrap(), h.word(&c).unwrap());
        let left = h.mul(&h.mul(&x, &y).unwrap(), &z).unwrap();
        let right = h.mul(&x, &h.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn specialization_respects_products(a in word(2, 3), b in word(2, 3)) {
        let h = HeckeAlgebra::new(2, Params::generic()).unwrap();
        for spec in [Specialization::B2, Specialization::B1, Specialization::D1] {
            let p = Params::new(spec);
            let hs = HeckeAlgebra::new(2, p.clone()).unwrap();
            let lhs = h.specialize(&h.mul(&h.word(&a).unwrap(), &h.word(&b).unwrap()).unwrap(), &p).unwrap();
            let rhs = hs.mul(&hs.word(&a).unwrap(), &hs.word(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    /// `(v · a) · b = v · (ab)` on random basis vectors.
    #[test]
    fn tensor_space_is_a_right_module(a in word(2, 2), b in word(2, 2), f in prop::collection::vec(-16i64..=16, 2)) {
        let m = TensorModule::new(3, 2, Variant::JJ, Params::generic()).unwrap();
        let h = m.hecke();
        let (x, y) = (h.word(&a).unwrap(), h.word(&b).unwrap());
        let v: TensorVec = m.basis(&f).unwrap();
        let lhs = m.act_hecke(&m.act_hecke(&v, &x).unwrap(), &y).unwrap();
        let rhs = m.act_hecke(&v, &h.mul(&x, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn generators_are_invertible() {
    let h = HeckeAlgebra::new(3, Params::generic()).unwrap();
    for i in 0..=3 {
        let t = h.generator(i).unwrap();
        assert_eq!(h.mul(&t, &h.generator_inverse(i).unwrap()).unwrap(), h.one());
    }
}
