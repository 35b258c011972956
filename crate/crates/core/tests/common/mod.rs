//! Random series and the engine properties shared by `properties` and `acceptance`.
#![allow(dead_code)]

use modq::rational::{q_frac, q_int};
use modq::{exp, exp_int, Exponent, Series};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

type Prop = Result<(), TestCaseError>;

fn coeff() -> impl Strategy<Value = (i64, i64)> {
    (-9i64..=9, 1i64..=4)
}

/// A Laurent-Puiseux series with unit in {1,2,3,6}, possibly negative order.
pub fn series() -> impl Strategy<Value = Series> {
    (prop::sample::select(vec![1i64, 2, 3, 6]), -4i64..4, 2i64..18)
        .prop_flat_map(|(unit, lo, width)| {
            let prec = lo + width;
            (Just(unit), Just(prec), prop::collection::btree_map(lo..prec, coeff(), 0..8))
        })
        .prop_map(|(unit, prec, m)| {
            Series::from_terms(unit, m.into_iter().map(|(k, (n, d))| (k, q_frac(n, d))), prec).unwrap()
        })
}

/// A series whose leading coefficient is a positive integer, with at least one
/// known term past the leading one.
pub fn unit_series() -> impl Strategy<Value = Series> {
    (prop::sample::select(vec![1i64, 2, 3]), -3i64..3, 1i64..5, 2i64..14, 0usize..6)
        .prop_flat_map(|(unit, lo, lead, width, n)| {
            (
                Just(unit),
                Just(lo),
                Just(lead),
                Just(lo + width),
                prop::collection::btree_map(lo + 1..lo + width, coeff(), 0..=n),
            )
        })
        .prop_map(|(unit, lo, lead, prec, m)| {
            let terms = std::iter::once((lo, q_int(lead)))
                .chain(m.into_iter().map(|(k, (n, d))| (k, q_frac(n, d))));
            Series::from_terms(unit, terms, prec).unwrap()
        })
}

/// `q + a_2 q^2 + …` with integer exponents.
pub fn reversible() -> impl Strategy<Value = Series> {
    (3i64..12)
        .prop_flat_map(|prec| (Just(prec), prop::collection::btree_map(2..prec, coeff(), 0..6)))
        .prop_map(|(prec, m)| {
            let terms = std::iter::once((1, q_int(1))).chain(m.into_iter().map(|(k, (n, d))| (k, q_frac(n, d))));
            Series::from_terms(1, terms, prec).unwrap()
        })
}

fn agree(a: &Series, b: &Series) -> Prop {
    let order = a.precision().min(b.precision());
    let c = a.equal_to_order(b, order);
    prop_assert!(c.is_match(), "{a} vs {b}: {c:?}");
    Ok(())
}

pub fn ring_laws(a: &Series, b: &Series, c: &Series) -> Prop {
    agree(&(&(a + b) + c), &(a + &(b + c)))?;
    agree(&(a + b), &(b + a))?;
    agree(&(&(a * b) * c), &(a * &(b * c)))?;
    agree(&(a * b), &(b * a))?;
    agree(&(a * &(b + c)), &(&(a * b) + &(a * c)))?;
    prop_assert!((a - &a.clone()).is_zero());
    let one = Series::one(a.precision().max(exp_int(1)) - a.order().min(exp_int(0)) + exp_int(1));
    prop_assert_eq!(&(a * &one), a);
    Ok(())
}

pub fn invert_round_trip(a: &Series) -> Prop {
    let inv = a.invert().unwrap();
    let prod = a * &inv;
    prop_assert_eq!(prod.precision(), a.precision() - a.order());
    agree(&prod, &Series::one(prod.precision()))?;
    agree(&inv.invert().unwrap(), a)
}

pub fn root_round_trip(a: &Series, n: i64) -> Prop {
    let p = a.pow_int(n).unwrap();
    agree(&p.nth_root(n).unwrap(), a)?;
    let r = a.nth_root(n);
    if let Ok(r) = r {
        agree(&r.pow_int(n).unwrap(), a)?;
    }
    Ok(())
}

pub fn revert_round_trip(f: &Series) -> Prop {
    let g = f.revert().unwrap();
    let q = Series::var(f.precision());
    agree(&f.compose(&g).unwrap(), &q)?;
    agree(&g.compose(f).unwrap(), &q)
}

pub fn unit_lift_round_trip(a: &Series, b: &Series, k: i64) -> Prop {
    prop_assert_eq!(&a.lifted(k).normalize(), a);
    prop_assert_eq!(&(a.lifted(k) + b.clone()), &(a + b));
    prop_assert_eq!(&(a.lifted(k) * b.lifted(k + 1)), &(a * b));
    let r = exp(1, k);
    prop_assert_eq!(&a.substitute_power(exp_int(k)).substitute_power(r), a);
    Ok(())
}

pub fn precision_monotone(a: &Series, b: &Series, cut: Exponent) -> Prop {
    let (ta, tb) = (a.truncate(cut), b.truncate(cut));
    prop_assert!(ta.precision() <= a.precision());
    prop_assert!(ta.precision() <= cut);
    let full = a * b;
    let cut_prod = &ta * &tb;
    prop_assert!(cut_prod.precision() <= full.precision());
    agree(&cut_prod, &full)?;
    let sum = &ta + &tb;
    prop_assert!(sum.precision() <= (a + b).precision());
    agree(&sum, &(a + b))
}

/// Runs every property with `cases` cases each; returns the failures by name.
pub fn run_all(cases: u32) -> Vec<(&'static str, String)> {
    use proptest::test_runner::{Config, TestRunner};
    let cfg = Config { cases, failure_persistence: None, ..Config::default() };
    let mut failures = Vec::new();
    let mut record = |name: &'static str, r: Result<(), proptest::test_runner::TestError<_>>| {
        if let Err(e) = r {
            failures.push((name, format!("{e}")));
        }
    };
    let run = || TestRunner::new(cfg.clone());
    record("ring-laws", run().run(&(series(), series(), series()), |(a, b, c)| ring_laws(&a, &b, &c)).map_err(dbg_err));
    record("invert", run().run(&unit_series(), |a| invert_round_trip(&a)).map_err(dbg_err));
    record("root", run().run(&(unit_series(), 2i64..5), |(a, n)| root_round_trip(&a, n)).map_err(dbg_err));
    record("revert", run().run(&reversible(), |f| revert_round_trip(&f)).map_err(dbg_err));
    record("unit-lift", run().run(&(series(), series(), 1i64..5), |(a, b, k)| unit_lift_round_trip(&a, &b, k)).map_err(dbg_err));
    record(
        "precision",
        run().run(&(series(), series(), -2i64..20, 1i64..4), |(a, b, n, d)| precision_monotone(&a, &b, exp(n, d))).map_err(dbg_err),
    );
    failures
}

fn dbg_err<E: std::fmt::Debug>(e: E) -> proptest::test_runner::TestError<String> {
    proptest::test_runner::TestError::Abort(format!("{e:?}").into())
}
