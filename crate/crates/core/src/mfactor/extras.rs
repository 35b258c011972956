//! The auxiliary `(2,3,6)` series left over after splitting `c_yz2` and
//! `c_yz4` between `w_y` and `w_z`. All are in `q` with integer exponents.

use crate::classical::eisenstein;
use crate::error::Result;
use crate::potentials::{sign, Acc};
use crate::qseries::{exp, exp_int, Series};
use crate::rational::{q_frac, q_int};
use crate::report::IdentityReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extras236 {
    pub s2361: Series,
    pub s2362: Series,
    pub s2363: Series,
    pub s2364: Series,
    pub s2365: Series,
    pub s2366: Series,
}

/// `Σ_{a,b≥0} (-1)^b f(a,b) q^{(b+1)(b+2a+2)/2}`.
fn ab_sum(prec: i64, f: impl Fn(i64, i64) -> i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |a: i64, b: i64| (b + 1) * (b + 2 * a + 2) / 2;
    let mut a = 0;
    while e(a, 0) < prec {
        let mut b = 0;
        while e(a, b) < prec {
            acc.add(e(a, b), q_int(sign(b) * f(a, b)));
            b += 1;
        }
        a += 1;
    }
    acc.series()
}

/// `Σ_{k,a,b≥0} (-1)^k f(k,a) q^{1+a+b+ab+k(k+3)/2+ak+bk}`.
fn kab_sum(prec: i64, f: impl Fn(i64, i64) -> i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |k: i64, a: i64, b: i64| 1 + a + b + a * b + k * (k + 3) / 2 + a * k + b * k;
    let mut k = 0;
    while e(k, 0, 0) < prec {
        let mut a = 0;
        while e(k, a, 0) < prec {
            let mut b = 0;
            while e(k, a, b) < prec {
                acc.add(e(k, a, b), q_int(sign(k) * f(k, a)));
                b += 1;
            }
            a += 1;
        }
        k += 1;
    }
    acc.series()
}

/// The six series to `O(q^prec)`.
pub fn series_236_extras(prec: i64) -> Extras236 {
    Extras236 {
        s2361: ab_sum(prec, |a, b| 4 * b + 2 * a + 5),
        s2362: ab_sum(prec, |a, b| 2 * b + 2 * a + 3),
        s2363: ab_sum(prec, |a, _| 2 * a + 1),
        // k = b+1 recovers Σ_{k≥1,a≥0} (-1)^{k-1} k q^{k(k+2a+1)/2}
        s2364: ab_sum(prec, |_, b| b + 1),
        s2365: kab_sum(prec, |_, a| 2 * a + 1),
        s2366: kab_sum(prec, |k, _| 2 * k + 1),
    }
}

/// `Σ_{k≥1} (-1)^{k-1} k q^{k(k+1)/2} / (1-q^k)` expanded by geometric series.
pub fn s2364_lambert(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let mut k = 1;
    while k * (k + 1) / 2 < prec {
        let mut e = k * (k + 1) / 2;
        while e < prec {
            acc.add(e, q_int(sign(k - 1) * k));
            e += k;
        }
        k += 1;
    }
    acc.series()
}

/// `s2363 = (1 - E₂)/24`.
pub fn verify_eq2363(order: i64) -> Result<IdentityReport> {
    let lhs = series_236_extras(order).s2363;
    let e2 = eisenstein(2, exp_int(order))?;
    let rhs = (Series::one(exp_int(order)) - e2).scale(&q_frac(1, 24));
    Ok(IdentityReport::from_comparison("eq2363", &lhs.equal_to_order(&rhs, exp_int(order))))
}

/// The reductions between the six series: `s2361 = s2363 + 4·s2364`,
/// `s2362 = s2363 + 2·s2364`, the Lambert form of `s2364`, and the split of
/// the `(2,3,6)` w-coefficients into these series.
pub fn verify_reductions_236(order: i64) -> Result<IdentityReport> {
    let x = series_236_extras(order);
    let ord = exp_int(order);
    let cmp = |a: &Series, b: &Series| IdentityReport::from_comparison("", &a.equal_to_order(b, ord));
    let mut parts = vec![
        ("s2361".to_string(), cmp(&x.s2361, &(&x.s2363 + &x.s2364.scale_int(4)))),
        ("s2362".to_string(), cmp(&x.s2362, &(&x.s2363 + &x.s2364.scale_int(2)))),
        ("s2361-s2362".to_string(), cmp(&(&x.s2361 - &x.s2362), &x.s2364.scale_int(2))),
        ("lambert".to_string(), cmp(&x.s2364, &s2364_lambert(order))),
    ];
    // w-coefficients: q_d^{4}(alternating part) etc. are read off in q.
    let qd = order * 48 + 17;
    let to_q = |s: Series, shift: i64| s.shift(exp_int(shift)).substitute_power(exp(1, 48));
    let wy = to_q(super::sums::w236_y_yz2(qd), 4);
    let wz = to_q(super::sums::w236_z_y2z(qd), 4);
    let e2 = eisenstein(2, ord)?;
    let half_par = (Series::one(ord) - e2).scale(&q_frac(1, 12));
    // wy - (parallelogram half) = s2361, wz - (parallelogram half) = s2362
    parts.push(("w_y yz^2".to_string(), cmp(&(&wy - &half_par), &x.s2361)));
    parts.push(("w_z y^2z".to_string(), cmp(&(&wz - &half_par), &x.s2362)));
    let z4 = to_q(super::sums::w236_y_z4(qd), 17);
    let yz3 = to_q(super::sums::w236_z_yz3(qd), 17);
    let split = &x.s2365.scale_int(2) + &x.s2366;
    parts.push(("w_z yz^3 - w_y z^4".to_string(), cmp(&(&yz3 - &z4), &split)));
    Ok(IdentityReport::combine("reductions@236", parts))
}
