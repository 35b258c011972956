use super::*;
use crate::rational::{q_frac, q_int};

fn s(unit: i64, terms: &[(i64, i64)], prec: i64) -> Series {
    Series::from_terms(unit, terms.iter().map(|&(k, c)| (k, q_int(c))), prec).unwrap()
}

fn geometric(prec: i64) -> Series {
    // 1 / (1 - q)
    s(1, &[(0, 1), (1, -1)], prec).invert().unwrap()
}

#[test]
fn normalizes_unit() {
    let a = s(6, &[(3, 1), (9, 2)], 12);
    assert_eq!(a.unit(), 2);
    assert_eq!(a.precision(), exp_int(2));
    assert_eq!(a.order(), exp(1, 2));
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(
        Series::from_terms(1, vec![(1, q_int(1)), (1, q_int(2))], 5),
        Err(Error::DuplicateExponent(_))
    ));
    assert!(matches!(
        Series::from_terms(1, vec![(5, q_int(1))], 5),
        Err(Error::BeyondPrecision { .. })
    ));
    assert!(matches!(Series::from_terms(0, Vec::new(), 5), Err(Error::InvalidUnit(0))));
}

#[test]
fn coefficient_lookup() {
    let a = s(2, &[(1, 3)], 8);
    assert_eq!(a.coefficient(exp(1, 2)).unwrap(), q_int(3));
    assert_eq!(a.coefficient(exp(1, 3)).unwrap(), q_int(0));
    assert!(a.coefficient(exp_int(4)).is_err());
}

#[test]
fn geometric_series_inverse() {
    let g = geometric(10);
    assert_eq!(g.precision(), exp_int(10));
    for k in 0..10 {
        assert_eq!(g.coefficient(exp_int(k)).unwrap(), q_int(1));
    }
}

#[test]
fn product_precision_rule() {
    // (q + O(q^5)) * (q^2 + O(q^4)) is known to min(5 + 2, 4 + 1) = 5
    let a = s(1, &[(1, 1)], 5);
    let b = s(1, &[(2, 1)], 4);
    let c = &a * &b;
    assert_eq!(c.precision(), exp_int(5));
    assert_eq!(c.coefficient(exp_int(3)).unwrap(), q_int(1));
}

#[test]
fn mixed_units_multiply() {
    let a = s(2, &[(1, 1)], 10); // q^{1/2}
    let b = s(3, &[(1, 1)], 15); // q^{1/3}
    let c = &a * &b;
    assert_eq!(c.unit(), 6);
    assert_eq!(c.order(), exp(5, 6));
}

#[test]
fn sparse_product_matches_dense() {
    let a = s(1, &[(0, 1), (72, -2), (144, 3)], 300);
    let b = s(1, &[(0, 1), (48, 5)], 300);
    let c = &a * &b;
    let expect = s(1, &[(0, 1), (48, 5), (72, -2), (120, -10), (144, 3), (192, 15)], 300);
    assert_eq!(c, expect);
}

#[test]
fn square_root_round_trip() {
    let f = s(1, &[(0, 4), (1, 4), (2, 1)], 12); // (2 + q)^2
    let r = f.nth_root(2).unwrap();
    assert_eq!(r, s(1, &[(0, 2), (1, 1)], 12));
}

#[test]
fn fractional_power_shifts_order() {
    let f = s(1, &[(3, 8)], 9);
    let r = f.nth_root(3).unwrap();
    assert_eq!(r.leading().map(|t| (t.0, t.1.clone())), Some((exp_int(1), q_int(2))));
    assert_eq!(r.precision(), exp_int(7));
}

#[test]
fn irrational_root_is_an_error() {
    let f = s(1, &[(0, 432), (1, 1)], 5);
    assert!(matches!(f.nth_root(6), Err(Error::NotRationalRoot { .. })));
    let g = s(1, &[(0, -4)], 5);
    assert!(g.nth_root(2).is_err());
}

#[test]
fn catalan_reversion() {
    // f = q - q^2 reverts to Σ C_{n-1} q^n
    let f = s(1, &[(1, 1), (2, -1)], 10);
    let g = f.revert().unwrap();
    let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
    for (n, c) in catalan.iter().enumerate() {
        assert_eq!(g.coefficient(exp_int(n as i64 + 1)).unwrap(), q_int(*c));
    }
    assert_eq!(g.precision(), exp_int(10));
    let id = f.compose(&g).unwrap();
    assert!(id.equal_to_order(&Series::var(exp_int(10)), exp_int(10)).is_match());
}

#[test]
fn compose_geometric() {
    // 1/(1-x) at x = 2q gives Σ 2^n q^n
    let f = geometric(8);
    let g = s(1, &[(1, 2)], 20);
    let h = f.compose(&g).unwrap();
    assert_eq!(h.precision(), exp_int(8));
    assert_eq!(h.coefficient(exp_int(7)).unwrap(), q_int(128));
}

#[test]
fn compose_puiseux_outer() {
    // f = x^{1/2}, g = q^2 (1 + q) gives q (1 + q)^{1/2}
    let f = s(2, &[(1, 1)], 20);
    let g = s(1, &[(2, 1), (3, 1)], 10);
    let h = f.compose(&g).unwrap();
    assert_eq!(h.coefficient(exp_int(1)).unwrap(), q_int(1));
    assert_eq!(h.coefficient(exp_int(2)).unwrap(), q_frac(1, 2));
    assert_eq!(h.coefficient(exp_int(3)).unwrap(), q_frac(-1, 8));
}

#[test]
fn compose_needs_positive_order() {
    let f = geometric(5);
    assert!(matches!(f.compose(&geometric(5)), Err(Error::NonPositiveOrder(_))));
}

#[test]
fn substitute_and_truncate() {
    let f = s(1, &[(0, 1), (1, 2), (2, 3)], 3);
    let g = f.substitute_power(exp(1, 24));
    assert_eq!(g.precision(), exp(1, 8));
    assert_eq!(g.coefficient(exp(1, 24)).unwrap(), q_int(2));
    let t = f.truncate_inclusive(exp_int(1));
    assert_eq!(t.precision(), exp_int(2));
}

#[test]
fn comparison_reports_first_mismatch() {
    let a = s(1, &[(0, 1), (3, 2)], 10);
    let b = s(1, &[(0, 1), (3, 5)], 6);
    let c = a.equal_to_order(&b, exp_int(8));
    assert!(!c.sufficient);
    assert_eq!(c.verified_to, exp_int(6));
    assert_eq!(c.first_mismatch.unwrap().exponent, exp_int(3));
}

#[test]
fn json_round_trip() {
    let a = Series::from_terms(3, vec![(-1, q_frac(-7, 4)), (2, q_int(9))], 11).unwrap();
    let back = Series::from_json(&a.to_json()).unwrap();
    assert_eq!(a, back);
}
