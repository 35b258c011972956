//! Composition and compositional inverse.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{Exponent, Series};
use crate::error::{Error, Result};
use crate::rational::Q;

impl Series {
    /// `f(g(q))` where `f = self`. Requires `ord(g) > 0`.
    ///
    /// When `f` has fractional exponents (unit `M > 1`), `g^{1/M}` is taken
    /// with [`Series::nth_root`] and the integer-exponent form of `f` is
    /// composed with it.
    ///
    /// Precision: the truncation of `f` costs `O(g^{P_f})`, and each power
    /// `g^k` is known to `P_g + (k-1)·ord(g)`; the result carries the minimum.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        let v = g.order();
        if !v.is_positive() {
            return Err(Error::NonPositiveOrder(v));
        }
        if self.unit > 1 {
            let root = g.nth_root(self.unit)?;
            let flat = Series {
                unit: 1,
                precision: self.precision,
                terms: self.terms.clone(),
            };
            return flat.compose(&root);
        }
        let bound = v * self.precision;
        let mut acc = Series::zero(bound);
        let Some(first) = self.terms.first().map(|t| t.0) else {
            return Ok(acc);
        };
        let last = self.terms.last().map(|t| t.0).unwrap_or(first);

        // Negative powers come from g^{-1}; positive ones by repeated products.
        if first < 0 {
            let ginv = g.invert()?;
            let mut pw = ginv.clone();
            for k in (first..0).rev() {
                let c = self.coeff_at(k);
                if !c.is_zero() {
                    acc = acc + pw.scale(&c);
                }
                if k > first {
                    pw = &pw * &ginv;
                }
            }
        }
        let c0 = self.coeff_at(0);
        if !c0.is_zero() {
            acc = acc + Series::constant(c0, bound);
        }
        if last > 0 {
            let g = g.truncate(bound);
            let mut pw = g.clone();
            for k in 1..=last {
                let c = self.coeff_at(k);
                if !c.is_zero() {
                    acc = acc + pw.scale(&c);
                }
                if k < last {
                    pw = (&pw * &g).truncate(bound);
                    if pw.order() >= bound {
                        break;
                    }
                }
            }
        }
        Ok(acc.truncate(bound))
    }

    fn coeff_at(&self, k: i64) -> Q {
        self.terms
            .binary_search_by_key(&k, |t| t.0)
            .map_or_else(|_| Q::zero(), |i| self.terms[i].1.clone())
    }

    /// Compositional inverse of `c·q + …` (`c ≠ 0`) by Lagrange inversion:
    /// `[q^n] g = (1/n) [u^{n-1}] (u/f(u))^n`. The result is known to the
    /// same precision as `self`.
    pub fn revert(&self) -> Result<Series> {
        let f = self.truncate(Ratio::from_integer(self.precision().floor().to_integer()));
        if f.order() != Exponent::one() || f.unit != 1 {
            return Err(Error::NotReversible(self.order()));
        }
        let p = f.precision;
        let mut out = Vec::new();
        if p > 1 {
            let h = f.shift(Ratio::from_integer(-1)).invert()?;
            let rel = Ratio::from_integer(p - 1);
            let h = h.truncate(rel);
            let mut hp = Series::one(rel);
            for n in 1..p {
                hp = (&hp * &h).truncate(rel);
                let c = hp.coefficient(Ratio::from_integer(n - 1))?;
                if !c.is_zero() {
                    out.push((n, c / Q::from_integer(BigInt::from(n))));
                }
            }
        }
        Ok(Series::raw(1, p, out))
    }
}
