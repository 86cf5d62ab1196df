use schubert_core::coeffring::Scalar;
use schubert_core::parabolic::{KBoundedPartition, ParabolicData};
use schubert_core::quantum::QHClass;
use schubert_core::{AffineElt, CorootVec, RootSystem};

#[test]
fn projection_of_minus_first_coroot_in_a3() {
    let rs = RootSystem::build("A3").unwrap();
    let pd = ParabolicData::new(&rs, &[2, 3]).unwrap();
    let p = pd.pi_p(&rs.aff_translation(CorootVec::from_slice(&[-1, 0, 0]))).unwrap();
    let want = AffineElt { w: rs.weyl_from_word(&[2, 3]).unwrap(), t: CorootVec::from_slice(&[-1, -1, -1]) };
    assert_eq!(p, want);
}

#[test]
fn cocovers_of_negative_highest_coroot_in_a2() {
    let rs = RootSystem::build("A2").unwrap();
    let x = rs.aff_translation(-rs.theta_vee());
    assert_eq!(rs.aff_length(&x), 4);
    assert_eq!(rs.cocovers(&x).len(), 3);
}

#[test]
fn lapointe_morse_image_in_gr_4_7() {
    let rs = RootSystem::build("A6").unwrap();
    let pd = ParabolicData::maximal(&rs, 4).unwrap();
    let x = rs.partition_to_affine(&KBoundedPartition::new(&[3, 2], 6).unwrap()).unwrap();
    assert_eq!(x, rs.aff_from_word(&[0, 6, 2, 1, 0]).unwrap());
    let y = pd.lm_map(&x).unwrap().unwrap();
    assert_eq!(y, rs.weyl_from_word(&[4, 5, 2, 3, 4]).unwrap());
}

#[test]
fn strange_duality_is_an_involution_on_gr_2_4() {
    let rs = RootSystem::build("A3").unwrap();
    let pd = ParabolicData::maximal(&rs, 2).unwrap();
    for w in pd.coset_reps() {
        let s = QHClass::single((w, CorootVec::ZERO), Scalar::one());
        let d = pd.strange_duality(&s).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(pd.strange_duality(&d).unwrap(), s, "{}", rs.format_word(&w));
    }
}
