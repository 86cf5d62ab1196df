use proptest::prelude::*;

use schubert_core::parabolic::ParabolicData;
use schubert_core::peterson::{HomologyClass, Peterson};
use schubert_core::quantum::QuantumRing;
use schubert_core::{AffineElt, CorootVec, RootSystem};

fn levis() -> Vec<(&'static str, Vec<usize>)> {
    vec![("A3", vec![2, 3]), ("A3", vec![1, 3]), ("A3", vec![2]), ("B3", vec![2, 3]), ("C3", vec![1]), ("G2", vec![2])]
}

fn affine_word(rs: &RootSystem, word: &[usize]) -> AffineElt {
    let w: Vec<usize> = word.iter().map(|&i| i % (rs.rank() + 1)).collect();
    rs.aff_from_word(&w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projection_of_translation_has_closed_form(k in 0..6usize, c in prop::array::uniform3(-4i32..=4)) {
        let (t, ip) = &levis()[k];
        let rs = RootSystem::build(t).unwrap();
        let pd = ParabolicData::new(&rs, ip).unwrap();
        let lam = CorootVec::from_slice(&c[..rs.rank()]);
        let x = rs.aff_translation(lam);
        let p = pd.pi_p(&x).unwrap();
        prop_assert_eq!(p, pd.pi_p_translation(&lam).unwrap());
        prop_assert!(pd.in_wpaff(&p));
    }

    #[test]
    fn projection_is_an_idempotent_factorization(k in 0..6usize, word in prop::collection::vec(0..8usize, 0..10)) {
        let (t, ip) = &levis()[k];
        let rs = RootSystem::build(t).unwrap();
        let pd = ParabolicData::new(&rs, ip).unwrap();
        let x = affine_word(&rs, &word);
        let p = pd.pi_p(&x).unwrap();
        prop_assert!(pd.in_wpaff(&p));
        prop_assert_eq!(pd.pi_p(&p).unwrap(), p);
        // x = π_P(x) y with y in (W_P)_af
        let y = rs.aff_mul(&rs.aff_inv(&p), &x);
        prop_assert!(pd.pi_p(&y).unwrap() == rs.aff_identity());
        prop_assert!(rs.bruhat_leq(&p, &x));
    }

    #[test]
    fn quantum_product_commutes(t in prop::sample::select(vec!["A3", "B2", "G2"]), i in 0..48usize, j in 0..48usize) {
        let rs = RootSystem::build(t).unwrap();
        let qr = QuantumRing::new(&rs).unwrap();
        let els = rs.weyl_elements();
        let (u, v) = (&els[i % els.len()], &els[j % els.len()]);
        prop_assert_eq!(qr.product(u, v), qr.product(v, u));
        prop_assert_eq!(qr.product(u, &rs.weyl_identity()), qr.schubert(u));
    }

    #[test]
    fn homology_product_commutes(i in 0..40usize, j in 0..40usize) {
        let rs = RootSystem::build("A2").unwrap();
        let pet = Peterson::new(&rs).unwrap();
        let gr = rs.grassmannian_elements(4);
        let a = HomologyClass::basis(&rs, gr[i % gr.len()]).unwrap();
        let b = HomologyClass::basis(&rs, gr[j % gr.len()]).unwrap();
        let ab = pet.hom_product(&a, &b).unwrap();
        let ba = pet.hom_product(&b, &a).unwrap();
        prop_assert_eq!(ab.clear_denominator(&rs).unwrap(), ba.clear_denominator(&rs).unwrap());
    }

    #[test]
    fn pieri_matches_full_product(i in 0..60usize) {
        let rs = RootSystem::build("A2").unwrap();
        let pet = Peterson::new(&rs).unwrap();
        let gr = rs.grassmannian_elements(5);
        let x = HomologyClass::basis(&rs, gr[i % gr.len()]).unwrap();
        let r0 = HomologyClass::basis(&rs, rs.aff_simple(0)).unwrap();
        let full = pet.hom_product(&r0, &x).unwrap().eval_zero().clear_denominator(&rs).unwrap();
        prop_assert_eq!(full, rs.pieri_r0(&x.terms));
    }
}

#[test]
fn cominuscule_theta_lands_in_affine_quotient() {
    for (n, j) in [(4, 2), (5, 2), (6, 3), (7, 4)] {
        let rs = RootSystem::build(&format!("A{}", n - 1)).unwrap();
        let pd = ParabolicData::maximal(&rs, j).unwrap();
        for y in pd.coset_reps() {
            let x = pd.theta_cominuscule(&y).unwrap();
            assert!(pd.in_wpaff(&x), "Gr({j},{n}) {}", rs.format_word(&y));
        }
    }
}
