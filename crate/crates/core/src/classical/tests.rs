use super::*;
use crate::qseries::exp;
use crate::rational::{q_frac, q_int};

fn ok(a: &Series, b: &Series, order: i64) {
    let c = a.equal_to_order(b, exp_int(order));
    assert!(c.is_match(), "{c:?}");
}

#[test]
fn sigma_values() {
    assert_eq!(divisor_sigma(1, 6), BigInt::from(12));
    assert_eq!(divisor_sigma(3, 2), BigInt::from(9));
    assert_eq!(divisor_sigma(5, 1), BigInt::from(1));
    for n in 1..60u64 {
        assert_eq!(sigma_table(3, 60)[n as usize], divisor_sigma(3, n));
    }
}

#[test]
fn eisenstein_leading() {
    let e2 = eisenstein(2, exp_int(10)).unwrap();
    assert_eq!(e2.coefficient(exp_int(2)).unwrap(), q_int(-72));
    let e4 = eisenstein(4, exp_int(10)).unwrap();
    assert_eq!(e4.coefficient(exp_int(1)).unwrap(), q_int(240));
    assert_eq!(e4.coefficient(exp_int(2)).unwrap(), q_int(2160));
    assert_eq!(e4.coefficient(exp_int(3)).unwrap(), q_int(6720));
    let e6 = eisenstein(6, exp_int(10)).unwrap();
    assert_eq!(e6.coefficient(exp_int(1)).unwrap(), q_int(-504));
    assert!(matches!(eisenstein(8, exp_int(3)), Err(Error::UnsupportedWeight(8))));
    assert_eq!(e2.scale(&q_frac(-1, 24)).coefficient(exp_int(1)).unwrap(), q_int(1));
}

#[test]
fn e2_matches_lambert_form() {
    ok(&eisenstein(2, exp_int(80)).unwrap(), &e2_lambert(exp_int(80)), 80);
}

#[test]
fn eta_pentagonal_vs_euler() {
    let p = exp_int(200);
    let a = dedekind_eta(p);
    assert_eq!(a.unit(), 24);
    assert_eq!(a.precision(), p);
    ok(&a, &eta_euler_product(p), 200);
}

#[test]
fn eta_first_terms() {
    let e = dedekind_eta(exp_int(5));
    let got: Vec<(i64, Q)> = e.raw_terms().iter().take(3).cloned().collect();
    assert_eq!(got, vec![(1, q_int(1)), (25, q_int(-1)), (49, q_int(-1))]);
}

#[test]
fn theta_is_eta_cubed() {
    let p = exp_int(100);
    let d = theta1_vderiv(p);
    assert_eq!(d.leading().map(|t| t.0), Some(exp(1, 8)));
    ok(&d, &eta_power(1, 3, p), 100);
}

#[test]
fn delta_second_coefficient() {
    let d = eta_power(1, 24, exp_int(10));
    assert_eq!(d.coefficient(exp_int(2)).unwrap(), q_int(-24));
}

#[test]
fn eta_quotient_precision_is_exact() {
    let spec = EtaQuotientSpec::new(&[(2, 10), (1, -4), (4, -4)]);
    assert_eq!(spec.order(), exp_int(0));
    let a4 = eta_quotient(&spec, exp_int(30));
    assert_eq!(a4.precision(), exp_int(30));
    let c4 = abc_generator(LevelId::N4, Which::C, exp_int(30)).unwrap();
    assert_eq!(c4.leading().map(|t| (t.0, t.1.clone())), Some((exp(1, 2), q_int(4))));
}

#[test]
fn discriminant() {
    let p = exp_int(60);
    let e4 = eisenstein(4, p).unwrap();
    let e6 = eisenstein(6, p).unwrap();
    let lhs = e4.pow_int(3).unwrap() - e6.pow_int(2).unwrap();
    ok(&lhs, &eta_power(1, 24, p).scale_int(1728), 60);
}

#[test]
fn table_ring_identities() {
    let p = exp_int(40);
    let g = |l, w, k| abc_to_power(l, w, k, p).unwrap();
    use LevelId::*;
    use Which::*;
    ok(&g(N2, A, 2), &(g(N4, A, 2) + g(N4, C, 2)), 40);
    ok(&g(N2, C, 2), &(g(N4, A, 1) * g(N4, C, 1)).scale_int(2), 40);
    ok(&g(N2, A, 4), &(g(N2, B, 4) + g(N2, C, 4)), 40);
    ok(&g(N4, A, 1), &a4_root_form(p).unwrap(), 40);
}

#[test]
fn n1star_c_only_at_sixth_power() {
    let c6 = abc_generator(LevelId::N1star, Which::C, exp_int(5)).unwrap();
    assert_eq!(c6.leading().map(|t| (t.0, t.1.clone())), Some((exp_int(1), q_int(432))));
    assert!(matches!(
        abc_to_power(LevelId::N1star, Which::C, 1, exp_int(5)),
        Err(Error::StoredPower { stored: 6, .. })
    ));
}

#[test]
fn hauptmoduls_vanish_at_cusp() {
    for l in LevelId::ALL {
        let a = hauptmodul(l, exp_int(12)).unwrap();
        assert_eq!(a.precision(), exp_int(12));
        assert_eq!(a.leading().map(|t| (t.0, t.1.clone())), Some((exp_int(1), q_int(l.kappa()))));
    }
}

#[test]
fn j_classical_head() {
    let j = j_classical(exp_int(3)).unwrap();
    assert_eq!(j.coefficient(exp_int(-1)).unwrap(), q_int(1));
    assert_eq!(j.coefficient(exp_int(0)).unwrap(), q_int(744));
    assert_eq!(j.coefficient(exp_int(1)).unwrap(), q_int(196884));
}

#[test]
fn families_reproduce_j() {
    let j = j_classical(exp_int(10)).unwrap();
    for l in LevelId::ALL {
        let z = hauptmodul(l, exp_int(12)).unwrap().scale(&q_frac(1, l.kappa()));
        let jz = j_family(l.family(), &z).unwrap();
        ok(&jz, &j, 10);
    }
    let z = Series::var(exp_int(10));
    assert_eq!(j_family(8, &z).unwrap().order(), exp_int(-1));
}

#[test]
fn hypergeometric() {
    let f = hyp2f1(&q_frac(1, 3), &q_frac(2, 3), &q_int(1), 5).unwrap();
    assert_eq!(f.coefficient(exp_int(0)).unwrap(), q_int(1));
    assert_eq!(f.coefficient(exp_int(1)).unwrap(), q_frac(2, 9));
    assert!(hyp2f1(&q_int(1), &q_int(1), &q_int(-2), 5).is_err());
}

#[test]
fn regular_periods() {
    for l in [LevelId::N2, LevelId::N3, LevelId::N4] {
        let a = abc_generator(l, Which::A, exp_int(20)).unwrap();
        ok(&regular_period(l, exp_int(20)).unwrap(), &a, 20);
    }
}
