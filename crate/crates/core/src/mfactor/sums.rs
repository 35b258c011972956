//! Coefficient sums of `w_x, w_y, w_z`, all in `q_d` to `O(q_d^prec)`.

use crate::potentials::{a_combin, sign, Acc};
use crate::qseries::Series;
use crate::rational::q_int;

/// `-q_d + Σ_{k≥1} (-1)^{k+1} ((2k+1) q_d^{(6k+1)²} - (2k-1) q_d^{(6k-1)²})`, the `yz` part of `w_x`.
pub fn w333_yz(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    acc.add(1, q_int(-1));
    let mut k = 1;
    while (6 * k - 1) * (6 * k - 1) < prec {
        acc.add((6 * k + 1) * (6 * k + 1), q_int(sign(k + 1) * (2 * k + 1)));
        acc.add((6 * k - 1) * (6 * k - 1), q_int(-sign(k + 1) * (2 * k - 1)));
        k += 1;
    }
    acc.series()
}

/// `Σ_{k≥1} (-1)^{k+1} 2k (q_d^{(6k+1)²} - q_d^{(6k-1)²})`, the `xz` part of `w_y` and `xy` part of `w_z`.
pub fn w333_mixed(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let mut k = 1;
    while (6 * k - 1) * (6 * k - 1) < prec {
        acc.add((6 * k + 1) * (6 * k + 1), q_int(sign(k + 1) * 2 * k));
        acc.add((6 * k - 1) * (6 * k - 1), q_int(-sign(k + 1) * 2 * k));
        k += 1;
    }
    acc.series()
}

/// `Σ_{r,s≥1} (-(2r+2s-1) q_d^{32s(2r-1)-4} + m(r,s) q_d^{64rs-4})` with `m = 2r` (`yz²` of `w_y`)
/// or `m = 2s` (`y²z` of `w_z`).
pub fn w244_mixed(prec: i64, second_r: bool) -> Series {
    let mut acc = Acc::new(prec);
    let e1 = |r: i64, s: i64| 32 * s * (2 * r - 1) - 4;
    let e2 = |r: i64, s: i64| 64 * r * s - 4;
    let mut r = 1;
    while e1(r, 1).min(e2(r, 1)) < prec {
        let mut s = 1;
        while e1(r, s).min(e2(r, s)) < prec {
            acc.add(e1(r, s), q_int(-(2 * r + 2 * s - 1)));
            acc.add(e2(r, s), q_int(if second_r { 2 * r } else { 2 * s }));
            s += 1;
        }
        r += 1;
    }
    acc.series()
}

/// `Σ_{a,b≥0} ((-1)^b f(a,b) q_d^{48A(a+b,a,0,0)-4} + g(a,b) q_d^{48A(a+b,a,b,0)-4})`.
fn two_part(prec: i64, f: impl Fn(i64, i64) -> i64, g: impl Fn(i64, i64) -> i64) -> Series {
    let mut acc = Acc::new(prec);
    let e1 = |a: i64, b: i64| 48 * a_combin(a + b, a, 0, 0) - 4;
    let e2 = |a: i64, b: i64| 48 * a_combin(a + b, a, b, 0) - 4;
    let mut a = 0;
    while e1(a, 0).min(e2(a, 0)) < prec {
        let mut b = 0;
        while e1(a, b).min(e2(a, b)) < prec {
            acc.add(e1(a, b), q_int(sign(b) * f(a, b)));
            acc.add(e2(a, b), q_int(g(a, b)));
            b += 1;
        }
        a += 1;
    }
    acc.series()
}

/// `Σ_{a,b≥0, n≥a+b} (-1)^{n-a-b} f(n,a,b) q_d^{48A(n,a,b,0)-17}`.
fn triple(prec: i64, f: impl Fn(i64, i64, i64) -> i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |a: i64, b: i64, k: i64| 48 * a_combin(a + b + k, a, b, 0) - 17;
    let mut a = 0;
    while e(a, 0, 0) < prec {
        let mut b = 0;
        while e(a, b, 0) < prec {
            let mut k = 0;
            while e(a, b, k) < prec {
                acc.add(e(a, b, k), q_int(sign(k) * f(a + b + k, a, b)));
                k += 1;
            }
            b += 1;
        }
        a += 1;
    }
    acc.series()
}

/// `yz²` part of `w_y` for `(2,3,6)`.
pub fn w236_y_yz2(prec: i64) -> Series {
    two_part(prec, |a, b| 2 * a + 4 * b + 5, |_, b| 2 * b + 2)
}

/// `z⁴` part of `w_y` for `(2,3,6)`.
pub fn w236_y_z4(prec: i64) -> Series {
    triple(prec, |n, a, _| 2 * n - 2 * a + 2)
}

/// `y²z` part of `w_z` for `(2,3,6)`.
pub fn w236_z_y2z(prec: i64) -> Series {
    two_part(prec, |a, b| 2 * a + 2 * b + 3, |a, _| 2 * a + 2)
}

/// `yz³` part of `w_z` for `(2,3,6)`.
pub fn w236_z_yz3(prec: i64) -> Series {
    triple(prec, |n, _, b| 4 * n - 2 * b + 5)
}
