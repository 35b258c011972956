//! Multiplication and powers.
//!
//! Both kernels work on a dense view of the series: exponents are written as
//! `ord + i·stride` where `stride` is the gcd of all exponent gaps, so sparse
//! series such as `φ(q_d)` (gaps of 72) collapse to short dense vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{Exponent, Series};
use crate::error::{Error, Result};
use crate::rational::{gcd_i64, rational_power, Q};

fn stride_of(s: &Series, base: i64, acc: i64) -> i64 {
    s.terms.iter().fold(acc, |g, t| gcd_i64(g, t.0 - base))
}

/// Integer numerators of `s` over a common denominator, indexed by `(k - base) / stride`.
fn integerize(s: &Series, base: i64, stride: i64, len: usize) -> (Vec<(usize, BigInt)>, BigInt) {
    let den = s
        .terms
        .iter()
        .fold(BigInt::one(), |d, t| d.lcm(t.1.denom()));
    let mut out = Vec::with_capacity(s.terms.len());
    for (k, c) in &s.terms {
        let idx = ((k - base) / stride) as usize;
        if idx >= len {
            break;
        }
        let n = c.numer() * (&den / c.denom());
        out.push((idx, n));
    }
    (out, den)
}

impl Series {
    pub(super) fn mul_series(&self, other: &Series) -> Series {
        let (a, b) = Series::unify(self, other);
        let (oa, ob) = (a.ord_numer(), b.ord_numer());
        let prec = (a.precision + ob).min(b.precision + oa);
        if a.is_zero() || b.is_zero() {
            return Series::raw(a.unit, prec, Vec::new());
        }
        let base = oa + ob;
        if base >= prec {
            return Series::raw(a.unit, prec, Vec::new());
        }
        let stride = stride_of(&b, ob, stride_of(&a, oa, 0));
        let stride = if stride == 0 { prec - base } else { stride };
        let len = ((prec - base + stride - 1) / stride) as usize;
        let (xs, da) = integerize(&a, oa, stride, len);
        let (ys, db) = integerize(&b, ob, stride, len);
        let mut acc = vec![BigInt::zero(); len];
        for (i, x) in &xs {
            for (j, y) in &ys {
                let k = i + j;
                if k >= len {
                    break;
                }
                acc[k] += x * y;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (base + i as i64 * stride, Q::new(c, den.clone())))
            .collect();
        Series::raw(a.unit, prec, terms)
    }

    /// `self^alpha` for rational `alpha`, via the J.C.P. Miller recurrence on
    /// the normalized tail. The leading coefficient must have an exact
    /// rational root of the needed degree.
    ///
    /// Relative precision is preserved: the result is known to
    /// `alpha·ord + (P - ord)`.
    pub fn pow_rational(&self, alpha: Exponent) -> Result<Series> {
        let Some((_, lead)) = self.leading() else {
            if alpha.is_positive() {
                // 0^alpha with unknown tail: only the precision can be stated.
                return Ok(Series::zero(self.precision() * alpha));
            }
            return Err(Error::ZeroSeries(self.precision()));
        };
        if alpha.is_zero() {
            return Ok(Series::one(self.precision() - self.order()));
        }
        if alpha.is_one() {
            return Ok(self.clone());
        }
        let c0 = rational_power(lead, alpha)?;
        // Lift so that alpha·ord is on the grid.
        let s = self.lifted(*alpha.denom());
        let ord = s.ord_numer();
        let rel = s.precision - ord;
        let base_out = (Ratio::from_integer(ord) * alpha).to_integer();
        if rel <= 0 {
            return Ok(Series::raw(s.unit, base_out + rel, Vec::new()));
        }
        let stride = stride_of(&s, ord, 0);
        let stride = if stride == 0 { rel } else { stride };
        let n = ((rel + stride - 1) / stride) as usize;

        let inv_lead = lead.recip();
        let mut f: Vec<(usize, Q)> = Vec::with_capacity(s.terms.len());
        for (k, c) in s.terms.iter().skip(1) {
            let idx = ((k - ord) / stride) as usize;
            if idx >= n {
                break;
            }
            f.push((idx, c * &inv_lead));
        }
        let h = miller(&f, alpha, n);
        let terms = h
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (base_out + i as i64 * stride, c * &c0))
            .collect();
        Ok(Series::raw(s.unit, base_out + rel, terms))
    }

    pub fn invert(&self) -> Result<Series> {
        if self.is_zero() {
            return Err(Error::ZeroSeries(self.precision()));
        }
        self.pow_rational(Ratio::from_integer(-1))
    }

    /// The `n`-th root whose leading coefficient is the real rational root of
    /// the leading coefficient of `self`.
    pub fn nth_root(&self, n: i64) -> Result<Series> {
        assert!(n > 0, "root degree must be positive");
        if self.is_zero() {
            return Err(Error::ZeroSeries(self.precision()));
        }
        self.pow_rational(Ratio::new(1, n))
    }

    pub fn pow_int(&self, n: i64) -> Result<Series> {
        match n {
            1 => Ok(self.clone()),
            2 => Ok(self * self),
            _ => self.pow_rational(Ratio::from_integer(n)),
        }
    }
}

/// Coefficients of `(1 + Σ f_i u^i)^alpha` up to `u^{n-1}`.
///
/// `h_0 = 1`, `m·h_m = Σ_{k=1}^{m} ((alpha+1)k - m) f_k h_{m-k}`.
fn miller(f: &[(usize, Q)], alpha: Exponent, n: usize) -> Vec<Q> {
    let ap1 = Q::new(
        BigInt::from(*alpha.numer() + *alpha.denom()),
        BigInt::from(*alpha.denom()),
    );
    let integral_alpha = alpha.is_integer();
    let integral_f = f.iter().all(|(_, c)| c.is_integer());
    if integral_alpha && integral_f {
        return miller_int(f, alpha.to_integer(), n);
    }
    let mut h: Vec<Q> = Vec::with_capacity(n);
    h.push(Q::one());
    for m in 1..n {
        let mut acc = Q::zero();
        for (k, fk) in f {
            if *k > m {
                break;
            }
            let w = &ap1 * Q::from_integer(BigInt::from(*k)) - Q::from_integer(BigInt::from(m));
            if w.is_zero() || h[m - k].is_zero() {
                continue;
            }
            acc += w * fk * &h[m - k];
        }
        h.push(acc / Q::from_integer(BigInt::from(m)));
    }
    h
}

/// Integer specialization: an integral power of `1 + (integer series)` has
/// integer coefficients, so every division by `m` is exact.
fn miller_int(f: &[(usize, Q)], alpha: i64, n: usize) -> Vec<Q> {
    let fi: Vec<(usize, BigInt)> = f.iter().map(|(k, c)| (*k, c.to_integer())).collect();
    let mut h: Vec<BigInt> = Vec::with_capacity(n);
    h.push(BigInt::one());
    for m in 1..n {
        let mut acc = BigInt::zero();
        for (k, fk) in &fi {
            if *k > m {
                break;
            }
            let w = (alpha + 1) * (*k as i64) - m as i64;
            if w == 0 || h[m - k].is_zero() {
                continue;
            }
            acc += fk * &h[m - k] * w;
        }
        let (quot, rem) = acc.div_rem(&BigInt::from(m));
        debug_assert!(rem.is_zero());
        h.push(quot);
    }
    h.into_iter().map(Q::from_integer).collect()
}
