use super::*;
use crate::report::Status;

#[test]
fn syz_333_244_2222_match_targets() {
    for orb in [OrbifoldId::P333, OrbifoldId::P244, OrbifoldId::P2222] {
        let r = verify_syz(orb, exp_int(30)).unwrap();
        assert_eq!(r.status, Status::Ok, "{orb}: {r:?}");
    }
}

#[test]
fn syz_leading_terms() {
    let s = syz_map(OrbifoldId::P333, exp_int(5)).unwrap().series;
    assert_eq!(s.leading().map(|(e, c)| (e, c.clone())), Some((exp(-1, 3), q_int(1))));
    let s = syz_map(OrbifoldId::P244, exp_int(5)).unwrap().series;
    assert_eq!(s.leading().map(|(e, c)| (e, c.clone())), Some((exp(-1, 2), q_frac(-1, 4))));
    let t = inverse_mirror_target(OrbifoldId::P236, exp_int(3)).unwrap();
    assert_eq!(t.power, 3);
    assert_eq!(t.series.coefficient(exp_int(0)).unwrap(), q_frac(-27, 4));
}

#[test]
fn sigma244_printed_and_eta_form() {
    assert!(verify_sigma244_printed().unwrap().is_ok());
    let ord = exp_int(30);
    let s = syz_map(OrbifoldId::P244, ord).unwrap().series;
    assert!(s.equal_to_order(&target_244_eta(ord).unwrap(), ord).is_match());
}

#[test]
fn sigma236_cube() {
    let ord = exp_int(8);
    let s3 = syz_map(OrbifoldId::P236, ord).unwrap().series;
    assert!(s3.equal_to_order(&target_236_derived(ord).unwrap(), ord).is_match());
    assert!(verify_sigma236_printed().unwrap().is_ok());
    // the printed E₄³/E₆² form disagrees already at q¹
    let r = verify_syz(OrbifoldId::P236, ord).unwrap();
    assert_eq!(r.status, Status::Mismatch);
    assert_eq!(r.first_mismatch.unwrap().exponent, "1");
}

#[test]
fn target_2222_two_forms() {
    let ord = exp_int(30);
    let a = inverse_mirror_target(OrbifoldId::P2222, ord).unwrap().series;
    assert!(a.equal_to_order(&target_2222_eta(ord).unwrap(), ord).is_match());
}

#[test]
fn j_2222_found_at_q() {
    let r = j_consistency_2222(exp_int(10)).unwrap();
    assert!(r.is_ok(), "{r:?}");
    assert_eq!(r.note.as_deref(), Some("argument q^1"));
}

#[test]
fn kp2_open_invariants() {
    assert_eq!((1..=6).map(chi_minus3).collect::<Vec<_>>(), vec![1, -1, 0, 1, -1, 0]);
    let k = kp2_suite(10).unwrap();
    assert!(k.report.is_ok(), "{:?}", k.report);
    assert_eq!(k.n_k[7], q_int(-454880));
    assert_eq!(k.qtau_of_qt.coefficient(exp_int(2)).unwrap(), q_int(9));
    assert!(kp2_suite(7).is_err());
}

#[test]
fn list_report_flags_first_difference() {
    let r = list_report("l", &[q_int(1), q_int(3)], &[1, 2]);
    assert_eq!(r.status, Status::Mismatch);
    assert_eq!(r.first_mismatch.unwrap().exponent, "1");
}
