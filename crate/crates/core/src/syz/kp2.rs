//! Open invariants of local `P²` from the level-3 Hauptmodul.
//!
//! `q_t = (-q_τ) Π (1 - q_τ^n)^{9nχ(n)}` is reverted to `q_τ(q_t)`, then
//! `(1+δ)³ = -27 q_t / α(q_τ(q_t))` and `1+δ` is its cube root with
//! constant term 1.

use num_traits::Zero;

use crate::classical::{hauptmodul, LevelId};
use crate::error::{Error, Result};
use crate::qseries::{exp_int, Series};
use crate::rational::{q_int, Q};
use crate::report::IdentityReport;

/// Genus-zero Gopakumar-Vafa invariants of local `P²`, degrees 1 to 5.
pub const GV_INVARIANTS: [i64; 5] = [3, -6, 27, -192, 1695];

/// Expected coefficients of `1+δ(q_t)`.
pub const KP2_OPEN: [i64; 7] = [1, -2, 5, -32, 286, -3038, 35870];

/// The non-trivial character mod 3: `0, 1, -1` on `3k, 3k+1, 3k+2`.
pub fn chi_minus3(n: i64) -> i64 {
    [0, 1, -1][n.rem_euclid(3) as usize]
}

/// `(-q) Π_{n≥1} (1 - q^n)^{e(n)}` to `O(q^prec)`, `prec ≥ 2`.
fn signed_product(prec: i64, e: impl Fn(i64) -> i64) -> Result<Series> {
    let rel = exp_int(prec - 1);
    let mut acc = Series::one(rel);
    for n in 1..prec - 1 {
        let k = e(n);
        if k == 0 {
            continue;
        }
        let f = Series::from_terms(1, vec![(0, q_int(1)), (n, q_int(-1))], prec - 1)?;
        acc = &acc * &f.pow_int(k)?;
    }
    Ok(acc.shift(exp_int(1)).scale_int(-1))
}

/// `q_t` as a series in `q_τ`, to `O(q_τ^prec)`.
pub fn qt_of_qtau(prec: i64) -> Result<Series> {
    signed_product(prec, |n| 9 * n * chi_minus3(n))
}

/// `q_τ` as a series in `q_t` from the Gopakumar-Vafa product, to `O(q_t^6)`.
pub fn qtau_gv_product() -> Result<Series> {
    signed_product(6, |d| {
        GV_INVARIANTS
            .get(d as usize - 1)
            .map_or(0, |n| 3 * d * d * n)
    })
}

/// `f(-q)` for a series with integer exponents.
fn negate_argument(f: &Series) -> Series {
    let terms: Vec<(i64, Q)> = f
        .raw_terms()
        .iter()
        .map(|(k, c)| (*k, if k.rem_euclid(2) == 0 { c.clone() } else { -c.clone() }))
        .collect();
    Series::from_terms(1, terms, f.precision_numer()).expect("same exponents")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kp2Suite {
    pub alpha3: Series,
    pub qt_of_qtau: Series,
    pub qtau_of_qt: Series,
    pub one_plus_delta_cubed: Series,
    pub one_plus_delta: Series,
    pub n_k: Vec<Q>,
    pub report: IdentityReport,
}

/// Runs the pipeline to `O(q_t^order)`, `order ≥ 8`.
pub fn kp2_suite(order: i64) -> Result<Kp2Suite> {
    if order < 8 {
        return Err(Error::OrderTooSmall { needed: 8, got: order });
    }
    let n = order + 1;
    let qt = qt_of_qtau(n)?;
    // q_t(q_τ) starts with -q_τ. With h(u) = q_t(-u) = u + …, q_τ(q_t) = -h⁻¹(q_t).
    let h = negate_argument(&qt);
    let qtau = -h.revert()?;
    let alpha3 = hauptmodul(LevelId::N3, exp_int(n))?;
    let composed = alpha3.compose(&qtau)?;
    let minus27qt = Series::monomial(q_int(-27), exp_int(1), exp_int(n + 1));
    let cube = minus27qt.divide(&composed)?;
    let lead = cube.coefficient(exp_int(0))?;
    if lead != q_int(1) {
        return Err(Error::NotRationalRoot { coefficient: lead.to_string(), degree: 3 });
    }
    let root = cube.nth_root(3)?.truncate(exp_int(order));
    let n_k: Vec<Q> = (0..order)
        .map(|k| root.coefficient(exp_int(k)).unwrap_or_else(|_| Q::zero()))
        .collect();

    let gv = qtau_gv_product()?;
    let ord6 = exp_int(6);
    let gv_vs_revert = IdentityReport::from_comparison("", &qtau.equal_to_order(&gv, ord6));
    let q = Series::var(ord6);
    let mutual = IdentityReport::from_comparison("", &qt.compose(&gv)?.equal_to_order(&q, ord6));
    let list = super::list_report("", &n_k, &KP2_OPEN);
    let report = IdentityReport::combine(
        "kp2",
        vec![
            ("n_k".to_string(), list),
            ("gv-product".to_string(), gv_vs_revert),
            ("mutual-inverse".to_string(), mutual),
        ],
    );
    Ok(Kp2Suite {
        alpha3,
        qt_of_qtau: qt,
        qtau_of_qt: qtau,
        one_plus_delta_cubed: cube,
        one_plus_delta: root,
        n_k,
        report,
    })
}
