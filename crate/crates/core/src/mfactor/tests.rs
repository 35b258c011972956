use super::*;
use crate::potentials::{coeffs_236, dyz_244, psi_333};
use crate::report::Status;

fn coeff(p: &Poly, m: Monomial) -> Series {
    p.coefficient(&m).unwrap().clone()
}

#[test]
fn w333_parts_sum_to_psi() {
    let p = 400;
    let s = &w333_yz(p) + &w333_mixed(p).scale_int(2);
    assert!(s.equal_to_order(&psi_333(p), exp_int(p)).is_match());
    assert_eq!(w333_yz(30).raw_terms()[0].0, 1);
    assert_eq!(w333_mixed(60).raw_terms()[0], (25, q_frac(-2, 1)));
}

#[test]
fn w244_yz2_is_half_dyz() {
    let p = 600;
    let w = mf_coefficients(OrbifoldId::P244, p).unwrap();
    assert_eq!(coeff(&w.wy, mono(0, 3, 0)), dy_244(p));
    let half = dyz_244(p).scale(&q_frac(1, 2));
    assert!(coeff(&w.wy, mono(0, 1, 2)).equal_to_order(&half, exp_int(p)).is_match());
}

#[test]
fn w236_split_sums() {
    let p = 1200;
    let c = coeffs_236(p);
    let ord = exp_int(p);
    assert!((w236_y_yz2(p) + w236_z_y2z(p)).equal_to_order(&c.cyz2, ord).is_match());
    assert!((w236_y_z4(p) + w236_z_yz3(p)).equal_to_order(&c.cyz4, ord).is_match());
}

#[test]
fn delta_entries_and_signs() {
    let w = mf_coefficients(OrbifoldId::P333, 50).unwrap();
    let d = delta_from(&w, 50);
    let idx = |m: u8| BASIS.iter().position(|&b| b == m).unwrap();
    let x = Poly::var(3, 0, exp_int(50));
    assert_eq!(d.entry(idx(1), idx(0)), &x);
    assert_eq!(d.entry(idx(0), idx(1)), &w.wx);
    assert_eq!(d.entry(idx(3), idx(2)), &x);
    assert_eq!(d.entry(idx(2), idx(3)), &w.wx);
    assert_eq!(d.entry(idx(1), idx(3)), &w.wy.neg());
    assert!(d.is_odd());
}

#[test]
fn clifford_and_square_hold() {
    for orb in [OrbifoldId::P333, OrbifoldId::P244, OrbifoldId::P236] {
        let c = verify_clifford(orb, 120).unwrap();
        assert_eq!(c.status, Status::Ok, "{c:?}");
        let s = verify_square(orb, 60).unwrap();
        assert_eq!(s.status, Status::Ok, "{s:?}");
    }
    assert!(mf_coefficients(OrbifoldId::P2222, 10).is_err());
}

#[test]
fn broken_w_fails_both_checks() {
    let p = 80;
    let mut w = mf_coefficients(OrbifoldId::P244, p).unwrap();
    w.wy.add_term(mono(0, 3, 0), qd_monomial(1, 28, p));
    let lhs = clifford_sum(&w, p);
    let wpot = assemble_potential(OrbifoldId::P244, p);
    let c = IdentityReport::from_poly("c", &lhs.compare(&wpot, exp_int(p)));
    assert_eq!(c.status, Status::Mismatch);
    let s = square_report("s", &delta_from(&w, p), &wpot, p);
    assert_eq!(s.status, Status::Mismatch);
}

#[test]
fn printed_sign_of_xyz_term_breaks_clifford() {
    let p = 60;
    let w = mf_coefficients(OrbifoldId::P333, p).unwrap();
    let mut flipped = assemble_potential(OrbifoldId::P333, p);
    flipped.add_term(mono(1, 1, 1), psi_333(p).scale_int(-2));
    let c = IdentityReport::from_poly("c", &clifford_sum(&w, p).compare(&flipped, exp_int(p)));
    assert_eq!(c.status, Status::Mismatch);
}

#[test]
fn closed_forms_proof_vs_statement() {
    let r = closed_forms_333(40).unwrap();
    let status = |n: &str| r.iter().find(|x| x.name == n).unwrap().status;
    assert_eq!(status("mf333:x2"), Status::Ok);
    assert_eq!(status("mf333:yz-proof"), Status::Ok);
    assert_eq!(status("mf333:xz-proof"), Status::Ok);
    assert_eq!(status("mf333:xy-proof"), Status::Ok);
    assert_eq!(status("mf333:yz-statement"), Status::Mismatch);
    assert_eq!(status("mf333:xz-statement"), Status::Mismatch);
    // η(q³)³ starts at q^{3/8}; the two forms differ by 2η(q³)³ there.
    let m = r.iter().find(|x| x.name == "mf333:yz-statement").unwrap();
    assert_eq!(m.first_mismatch.as_ref().unwrap().exponent, "3/8");
}

#[test]
fn extras_heads_and_identities() {
    let x = series_236_extras(40);
    assert_eq!(x.s2364.leading().map(|(e, c)| (e, c.clone())), Some((exp_int(1), q_frac(1, 1))));
    for s in [&x.s2361, &x.s2362, &x.s2363, &x.s2364, &x.s2365, &x.s2366] {
        assert!(s.is_integral());
    }
    assert!(verify_eq2363(60).unwrap().is_ok());
    let r = verify_reductions_236(20).unwrap();
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn c236_coefficients_match_potential() {
    let p = 300;
    let w = mf_coefficients(OrbifoldId::P236, p).unwrap();
    let c = coeffs_236(p);
    assert_eq!(coeff(&w.wy, mono(0, 2, 0)), c.cy);
    assert_eq!(coeff(&w.wz, mono(0, 0, 5)), c.cz);
}
