use affine_schur::schur::SchurAlgebra;
use affine_schur::weyl::double_coset_reps_upto;
use affine_schur::{Params, Variant, WeylElt};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::OnceLock;

fn algebra() -> &'static SchurAlgebra {
    static S: OnceLock<SchurAlgebra> = OnceLock::new();
    S.get_or_init(|| SchurAlgebra::new(3, 2, Variant::JJ, Params::generic()).unwrap())
}

/// A basis element `φ^g_{λμ}` with `ℓ(g) ≤ 2`, chosen by indices.
fn phi_with(lam: usize, mu: usize, pick: usize) -> (usize, usize, WeylElt) {
    let s = algebra();
    let reps = double_coset_reps_upto(s.d(), s.gens(lam), s.gens(mu), 2).unwrap();
    (lam, mu, reps[pick % reps.len()].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_is_associative(l in 0usize..15, m in 0usize..15, n in 0usize..15, k in 0usize..15, p in any::<[usize; 3]>()) {
        let s = algebra();
        let (a, b, c) = (phi_with(l, m, p[0]), phi_with(m, n, p[1]), phi_with(n, k, p[2]));
        let a = s.phi(a.0, a.1, &a.2).unwrap();
        let b = s.phi(b.0, b.1, &b.2).unwrap();
        let c = s.phi(c.0, c.1, &c.2).unwrap();
        let left = s.compose(&s.compose(&a, &b).unwrap(), &c).unwrap();
        let right = s.compose(&a, &s.compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// Each basis element expands to itself alone, so the φ's are
    /// linearly independent.
    #[test]
    fn basis_elements_expand_to_themselves(l in 0usize..15, m in 0usize..15, p in any::<usize>()) {
        let s = algebra();
        let key = phi_with(l, m, p);
        let e = s.expand(&s.phi(key.0, key.1, &key.2).unwrap()).unwrap();
        prop_assert_eq!(e.len(), 1);
        prop_assert!(e[&key].is_one());
    }

    #[test]
    fn kappa_round_trip(l in 0usize..15, w in prop::collection::vec(0usize..=2, 0..=5)) {
        let s = algebra();
        let w = WeylElt::from_word(2, &w).unwrap();
        let h = affine_schur::HeckeElt::basis(w);
        let t = BTreeMap::from([(l, h.clone())]);
        let back = s.kappa_inv(&s.kappa(&t).unwrap()).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(&back[&l], &s.normal_form(l, &h).unwrap());
    }
}

#[test]
fn identity_is_the_sum_of_idempotents() {
    let s = algebra();
    let e = WeylElt::identity(2);
    let x = s.phi(3, 5, &double_coset_reps_upto(2, s.gens(3), s.gens(5), 1).unwrap()[0]).unwrap();
    assert_eq!(s.compose(&s.identity().unwrap(), &x).unwrap(), x);
    assert_eq!(s.compose(&x, &s.phi(5, 5, &e).unwrap()).unwrap(), x);
}
