//! Coefficient series of the potentials by direct truncated summation.
//!
//! Every function returns a series in `q_d` known to `O(q_d^prec)`. Each sum
//! is enumerated with nested loops whose exponent is monotone in every index,
//! so a loop stops as soon as the exponent at the inner minima reaches `prec`.

use std::collections::BTreeMap;

use crate::qseries::Series;
use crate::rational::{q_frac, q_int, Q};

pub(crate) struct Acc {
    prec: i64,
    terms: BTreeMap<i64, Q>,
}

impl Acc {
    pub(crate) fn new(prec: i64) -> Acc {
        Acc { prec, terms: BTreeMap::new() }
    }

    pub(crate) fn add(&mut self, e: i64, c: Q) {
        if e < self.prec {
            *self.terms.entry(e).or_default() += c;
        }
    }

    pub(crate) fn series(self) -> Series {
        Series::from_terms(1, self.terms, self.prec).expect("exponents below precision")
    }
}

pub(crate) fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(m choose 2) = m(m-1)/2`, for every integer `m`.
pub fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `A(n,a,b,c) = C(n+2,2) - C(a+1,2) - C(b+1,2) - C(c+1,2)`.
pub fn a_combin(n: i64, a: i64, b: i64, c: i64) -> i64 {
    choose2(n + 2) - choose2(a + 1) - choose2(b + 1) - choose2(c + 1)
}

/// `Σ_{k≥0} s(k) (2k+1) q_d^{9(2k+1)²}` with the sign rule `s`.
fn phi_333_with(prec: i64, s: impl Fn(i64) -> i64) -> Series {
    let mut acc = Acc::new(prec);
    let mut k = 0;
    while 9 * (2 * k + 1) * (2 * k + 1) < prec {
        acc.add(9 * (2 * k + 1) * (2 * k + 1), q_int(s(k) * (2 * k + 1)));
        k += 1;
    }
    acc.series()
}

/// `φ = Σ_{k≥0} (-1)^{k+1} (2k+1) q_d^{3(12k²+12k+3)}`.
pub fn phi_333(prec: i64) -> Series {
    phi_333_with(prec, |k| sign(k + 1))
}

/// The same sum with the sign written `(-1)^{3k+1}`.
pub fn phi_333_sign3k(prec: i64) -> Series {
    phi_333_with(prec, |k| sign(3 * k + 1))
}

/// `ψ = -q_d + Σ_{k≥1} ((-1)^{3k+1}(6k+1) q_d^{(6k+1)²} + (-1)^{3k}(6k-1) q_d^{(6k-1)²})`.
pub fn psi_333(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    acc.add(1, q_int(-1));
    let mut k = 1;
    while (6 * k - 1) * (6 * k - 1) < prec {
        acc.add((6 * k + 1) * (6 * k + 1), q_int(sign(3 * k + 1) * (6 * k + 1)));
        acc.add((6 * k - 1) * (6 * k - 1), q_int(sign(3 * k) * (6 * k - 1)));
        k += 1;
    }
    acc.series()
}

/// `d_y = Σ_{r≥0} (2r+1) q_d^{16(2r+1)²-4} + Σ_{0≤r<s} (2r+2s+2) q_d^{16(2r+1)(2s+1)-4}`.
pub fn dy_244(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |r: i64, s: i64| 16 * (2 * r + 1) * (2 * s + 1) - 4;
    let mut r = 0;
    while e(r, r) < prec {
        acc.add(e(r, r), q_int(2 * r + 1));
        let mut s = r + 1;
        while e(r, s) < prec {
            acc.add(e(r, s), q_int(2 * r + 2 * s + 2));
            s += 1;
        }
        r += 1;
    }
    acc.series()
}

/// `d_yz = Σ_{r,s≥1} (-(4r+4s-2) q_d^{16(2r-1)2s-4} + (2r+2s) q_d^{64rs-4})`.
pub fn dyz_244(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let e1 = |r: i64, s: i64| 16 * (2 * r - 1) * 2 * s - 4;
    let e2 = |r: i64, s: i64| 64 * r * s - 4;
    let mut r = 1;
    while e1(r, 1).min(e2(r, 1)) < prec {
        let mut s = 1;
        while e1(r, s).min(e2(r, s)) < prec {
            acc.add(e1(r, s), q_int(-(4 * r + 4 * s - 2)));
            acc.add(e2(r, s), q_int(2 * r + 2 * s));
            s += 1;
        }
        r += 1;
    }
    acc.series()
}

/// `c_y = Σ_{a≥0} (-1)^{a+1} (2a+1) q_d^{48A(a-1,0,0,0)+9}`.
pub fn cy_236(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |a: i64| 48 * a_combin(a - 1, 0, 0, 0) + 9;
    let mut a = 0;
    while e(a) < prec {
        acc.add(e(a), q_int(sign(a + 1) * (2 * a + 1)));
        a += 1;
    }
    acc.series()
}

/// First (alternating) part of `c_yz2`: `Σ_{n≥a≥0} (-1)^{n-a}(6n-2a+8) q_d^{48A(n,a,0,0)-4}`.
pub fn cyz2_alternating(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |n: i64, a: i64| 48 * a_combin(n, a, 0, 0) - 4;
    let mut a = 0;
    while e(a, a) < prec {
        let mut n = a;
        while e(n, a) < prec {
            acc.add(e(n, a), q_int(sign(n - a) * (6 * n - 2 * a + 8)));
            n += 1;
        }
        a += 1;
    }
    acc.series()
}

/// Second part of `c_yz2`, counting parallelograms: `Σ_{n≥a≥0} (2n+4) q_d^{48A(n,a,n-a,0)-4}`.
pub fn cyz2_parallelogram(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |n: i64, a: i64| 48 * a_combin(n, a, n - a, 0) - 4;
    let mut a = 0;
    while e(a, a) < prec {
        let mut n = a;
        while e(n, a) < prec {
            acc.add(e(n, a), q_int(2 * n + 4));
            n += 1;
        }
        a += 1;
    }
    acc.series()
}

pub fn cyz2_236(prec: i64) -> Series {
    cyz2_alternating(prec) + cyz2_parallelogram(prec)
}

/// `c_yz4 = Σ_{a,b≥0, n≥a+b} (-1)^{n-a-b} (6n-2a-2b+7) q_d^{48A(n,a,b,0)-17}`.
pub fn cyz4_236(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |a: i64, b: i64, k: i64| 48 * a_combin(a + b + k, a, b, 0) - 17;
    let mut a = 0;
    while e(a, 0, 0) < prec {
        let mut b = 0;
        while e(a, b, 0) < prec {
            let mut k = 0;
            while e(a, b, k) < prec {
                let n = a + b + k;
                acc.add(e(a, b, k), q_int(sign(k) * (6 * n - 2 * a - 2 * b + 7)));
                k += 1;
            }
            b += 1;
        }
        a += 1;
    }
    acc.series()
}

/// Which of `T₁, T₂, T₃, T₆` contains `(n,a,b,c)`, if any.
///
/// `T₁` uses the same condition on `a, b, c` as `T₂`, without asking the
/// three to be distinct; the distinct reading breaks `c_z` at `q⁵`.
pub fn t_class(n: i64, a: i64, b: i64, c: i64) -> Option<u8> {
    if a < 0 || b < 0 || c < 0 {
        return None;
    }
    let s = a + b + c;
    if a == b && b == c {
        return match n.cmp(&(3 * a)) {
            std::cmp::Ordering::Equal => Some(6),
            std::cmp::Ordering::Greater => Some(3),
            std::cmp::Ordering::Less => None,
        };
    }
    let cond = a < b.min(c) || (a == c && a < b);
    if !cond {
        return None;
    }
    match n.cmp(&s) {
        std::cmp::Ordering::Equal => Some(2),
        std::cmp::Ordering::Greater => Some(1),
        std::cmp::Ordering::Less => None,
    }
}

/// `c_z = Σ_{T₁∐T₂∐T₃∐T₆} (-1)^{n-a-b-c} (6n-2a-2b-2c+6)/i · q_d^{48A(n,a,b,c)-30}`.
pub fn cz_236(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let e = |a: i64, b: i64, c: i64, k: i64| 48 * a_combin(a + b + c + k, a, b, c) - 30;
    let mut a = 0;
    while e(a, 0, 0, 0) < prec {
        let mut b = 0;
        while e(a, b, 0, 0) < prec {
            let mut c = 0;
            while e(a, b, c, 0) < prec {
                let mut k = 0;
                while e(a, b, c, k) < prec {
                    let n = a + b + c + k;
                    if let Some(i) = t_class(n, a, b, c) {
                        let w = sign(k) * (6 * n - 2 * a - 2 * b - 2 * c + 6);
                        acc.add(e(a, b, c, k), q_frac(w, i64::from(i)));
                    }
                    k += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    acc.series()
}

/// `Σ_{k,l≥0} (k+l+1) q_d^{(4k+1)(4l+3)}`; leading term `q_d³`.
pub fn phi_2222(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    let mut k = 0;
    while (4 * k + 1) * 3 < prec {
        let mut l = 0;
        while (4 * k + 1) * (4 * l + 3) < prec {
            acc.add((4 * k + 1) * (4 * l + 3), q_int(k + l + 1));
            l += 1;
        }
        k += 1;
    }
    acc.series()
}

/// `Σ_{k,l≥0} (4k+1) q_d^{(4k+1)(4l+1)} + Σ_{k,l≥0} (4k+3) q_d^{(4k+3)(4l+3)}`; leading term `q_d`.
pub fn psi_2222(prec: i64) -> Series {
    let mut acc = Acc::new(prec);
    for off in [1, 3] {
        let mut k = 0;
        while (4 * k + off) * off < prec {
            let mut l = 0;
            while (4 * k + off) * (4 * l + off) < prec {
                acc.add((4 * k + off) * (4 * l + off), q_int(4 * k + off));
                l += 1;
            }
            k += 1;
        }
    }
    acc.series()
}
