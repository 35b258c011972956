use super::*;
use crate::qseries::exp_int;
use crate::rational::q_int;
use crate::report::Status;
use crate::qseries::Exponent;

fn series(v: Value) -> crate::qseries::Series {
    match v {
        Value::Series(s) => s,
        other => panic!("not a series: {other:?}"),
    }
}

#[test]
fn names_are_unique_and_sorted() {
    let names: Vec<String> = series_catalog().into_iter().map(|e| e.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(names, sorted);
    for n in ["eta", "E4", "A@N3", "alpha@N4", "C6@N1star", "C2@N2", "phi@333", "W@236", "wx@244", "delta@333", "cy@236"] {
        assert!(names.iter().any(|x| x == n), "{n}");
    }
    let checks: Vec<String> = check_catalog().into_iter().map(|c| c.name).collect();
    assert!(checks.len() >= 25);
    let mut c2 = checks.clone();
    c2.dedup();
    assert_eq!(checks, c2);
}

#[test]
fn expand_inclusive_orders() {
    let eta = series(expand("eta", exp_int(5), Var::Q).unwrap());
    assert_eq!(eta.unit(), 24);
    let ks: Vec<i64> = eta.raw_terms().iter().map(|t| t.0).collect();
    assert_eq!(ks, vec![1, 25, 49]);
    let e4 = series(expand("E4", exp_int(3), Var::Q).unwrap());
    assert_eq!(e4.coefficient(exp_int(3)).unwrap(), q_int(6720));
    let phi = series(expand("phi@333", exp_int(100), Var::Qd).unwrap());
    assert_eq!(phi.raw_terms(), &[(9, q_int(-1)), (81, q_int(3))]);
    let phi_q = series(expand("phi@333", exp_int(4), Var::Q).unwrap());
    assert_eq!(phi_q.leading().map(|t| t.0), Some(Exponent::new(3, 8)));
    assert!(matches!(expand("E4", exp_int(3), Var::Qd), Err(Error::NoDiscVariable(_))));
    assert!(matches!(expand("nope", exp_int(3), Var::Q), Err(Error::UnknownName(_))));
    assert!(matches!(expand("E4", exp_int(1_000_000), Var::Q), Err(Error::OrderTooLarge { .. })));
}

#[test]
fn expand_poly_and_matrix() {
    match expand("W@244", exp_int(40), Var::Qd).unwrap() {
        Value::Poly(p) => assert_eq!(p.len(), 5),
        other => panic!("{other:?}"),
    }
    assert!(matches!(expand("delta@333", exp_int(2), Var::Q).unwrap(), Value::Matrix(_)));
}

#[test]
fn syz_glob_yields_four() {
    let r = run_registry("syz@*", Some(exp_int(10)), 2).unwrap();
    let names: Vec<&str> = r.iter().map(|x| x.name.as_str()).collect();
    assert_eq!(names, vec!["syz@2222", "syz@236", "syz@244", "syz@333"]);
    assert!(matches!(run_registry("nosuchcheck", None, 1), Err(Error::UnknownName(_))));
}

#[test]
fn parallelism_does_not_change_output() {
    let one: Vec<String> = run_registry("ring:*", None, 1).unwrap().iter().map(|r| r.to_json(false)).collect();
    let eight: Vec<String> = run_registry("ring:*", None, 8).unwrap().iter().map(|r| r.to_json(false)).collect();
    assert_eq!(one, eight);
    assert!(run_registry("ring:*", None, 1).unwrap().iter().all(|r| r.status == Status::Ok));
}
