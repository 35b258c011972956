//! Truncated Laurent-Puiseux series with exact rational coefficients.
//!
//! A [`Series`] stores `Σ c_k q^{k/M}` known modulo `O(q^{P/M})`. The unit `M`
//! is kept minimal: every constructor and operation returns a series whose
//! unit is the smallest one that can represent all of its exponents and its
//! precision. Binary operations lift both operands to the lcm of their units.

mod arith;
mod compose;
mod json;

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{gcd_i64, lcm_i64, Q};

pub use json::SeriesDoc;

/// A rational exponent of `q`.
pub type Exponent = Ratio<i64>;

pub fn exp(n: i64, d: i64) -> Exponent {
    Ratio::new(n, d)
}

pub fn exp_int(n: i64) -> Exponent {
    Ratio::from_integer(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    unit: i64,
    precision: i64,
    terms: Vec<(i64, Q)>,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Exponent,
    pub lhs: Q,
    pub rhs: Q,
}

/// Outcome of comparing two series up to a requested order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// Every representable exponent below this value was compared.
    pub verified_to: Exponent,
    /// Whether both operands were known far enough to reach the requested order.
    pub sufficient: bool,
    pub first_mismatch: Option<Mismatch>,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none() && self.sufficient
    }
}

impl Series {
    /// Builds a series from `(k, c)` pairs meaning `c·q^{k/unit}`, known modulo
    /// `O(q^{precision/unit})`. Zero coefficients are dropped.
    pub fn from_terms<I>(unit: i64, terms: I, precision: i64) -> Result<Series>
    where
        I: IntoIterator<Item = (i64, Q)>,
    {
        if unit <= 0 {
            return Err(Error::InvalidUnit(unit));
        }
        let mut terms: Vec<(i64, Q)> = terms.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        for w in terms.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateExponent(Ratio::new(w[0].0, unit)));
            }
        }
        if let Some((k, _)) = terms.iter().find(|t| t.0 >= precision) {
            return Err(Error::BeyondPrecision {
                exponent: Ratio::new(*k, unit),
                precision: Ratio::new(precision, unit),
            });
        }
        terms.retain(|t| !t.1.is_zero());
        Ok(Series { unit, precision, terms }.normalized())
    }

    /// Internal constructor for already sorted, in-range terms.
    fn raw(unit: i64, precision: i64, mut terms: Vec<(i64, Q)>) -> Series {
        terms.retain(|t| !t.1.is_zero() && t.0 < precision);
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        Series { unit, precision, terms }.normalized()
    }

    /// Builds from a map of rational exponents; the unit is the lcm of all denominators.
    pub fn from_exponents<I>(terms: I, precision: Exponent) -> Result<Series>
    where
        I: IntoIterator<Item = (Exponent, Q)>,
    {
        let terms: Vec<(Exponent, Q)> = terms.into_iter().collect();
        let unit = terms.iter().fold(*precision.denom(), |m, (e, _)| lcm_i64(m, *e.denom()));
        let scaled = terms.into_iter().map(|(e, c)| ((e * unit).to_integer(), c));
        let prec = (precision * unit).to_integer();
        Series::from_terms(unit, scaled, prec)
    }

    pub fn zero(precision: Exponent) -> Series {
        Series::raw(*precision.denom(), *precision.numer(), Vec::new())
    }

    pub fn constant(c: Q, precision: Exponent) -> Series {
        Series::monomial(c, Exponent::zero(), precision)
    }

    pub fn one(precision: Exponent) -> Series {
        Series::constant(Q::one(), precision)
    }

    /// `c·q^e + O(q^precision)`; the term is dropped when `e >= precision`.
    pub fn monomial(c: Q, e: Exponent, precision: Exponent) -> Series {
        let unit = lcm_i64(*e.denom(), *precision.denom());
        let k = (e * unit).to_integer();
        let p = (precision * unit).to_integer();
        Series::raw(unit, p, vec![(k, c)])
    }

    /// The variable `q` itself, known to `O(q^precision)`.
    pub fn var(precision: Exponent) -> Series {
        Series::monomial(Q::one(), Exponent::one(), precision)
    }

    pub fn unit(&self) -> i64 {
        self.unit
    }

    /// Precision numerator in units of `1/unit`.
    pub fn precision_numer(&self) -> i64 {
        self.precision
    }

    pub fn precision(&self) -> Exponent {
        Ratio::new(self.precision, self.unit)
    }

    /// Raw `(k, c)` pairs with exponents `k/unit`, ascending.
    pub fn raw_terms(&self) -> &[(i64, Q)] {
        &self.terms
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Q)> + '_ {
        self.terms.iter().map(move |(k, c)| (Ratio::new(*k, self.unit), c))
    }

    /// Number of stored nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn ord_numer(&self) -> i64 {
        self.terms.first().map_or(self.precision, |t| t.0)
    }

    /// Least exponent with a nonzero coefficient; the precision for the zero series.
    pub fn order(&self) -> Exponent {
        Ratio::new(self.ord_numer(), self.unit)
    }

    pub fn leading(&self) -> Option<(Exponent, &Q)> {
        self.terms.first().map(|(k, c)| (Ratio::new(*k, self.unit), c))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_integer())
    }

    fn normalized(mut self) -> Series {
        let g = self
            .terms
            .iter()
            .fold(gcd_i64(self.unit, self.precision), |g, t| gcd_i64(g, t.0));
        if g > 1 {
            self.unit /= g;
            self.precision /= g;
            for t in &mut self.terms {
                t.0 /= g;
            }
        }
        self
    }

    /// Re-expresses the series with unit `unit * factor`, without normalizing.
    /// Only useful for inspecting raw numerators; all operations normalize.
    pub fn lifted(&self, factor: i64) -> Series {
        assert!(factor > 0, "lift factor must be positive");
        Series {
            unit: self.unit * factor,
            precision: self.precision * factor,
            terms: self.terms.iter().map(|(k, c)| (k * factor, c.clone())).collect(),
        }
    }

    /// Returns the minimal-unit form of a possibly lifted series.
    pub fn normalize(self) -> Series {
        self.normalized()
    }

    fn unify(a: &Series, b: &Series) -> (Series, Series) {
        let l = lcm_i64(a.unit, b.unit);
        (a.lifted(l / a.unit), b.lifted(l / b.unit))
    }

    fn representable(&self, e: Exponent) -> Option<i64> {
        let scaled = e * self.unit;
        scaled.is_integer().then(|| scaled.to_integer())
    }

    /// Coefficient of `q^e`; zero for absent exponents below the precision.
    pub fn coefficient(&self, e: Exponent) -> Result<Q> {
        if e >= self.precision() {
            return Err(Error::BeyondPrecision { exponent: e, precision: self.precision() });
        }
        let Some(k) = self.representable(e) else {
            // Not on this series' grid, so the coefficient is zero.
            return Ok(Q::zero());
        };
        Ok(self
            .terms
            .binary_search_by_key(&k, |t| t.0)
            .map_or_else(|_| Q::zero(), |i| self.terms[i].1.clone()))
    }

    /// Drops everything at or beyond `order`; the precision becomes `min(P, order)`.
    pub fn truncate(&self, order: Exponent) -> Series {
        if order >= self.precision() {
            return self.clone();
        }
        let unit = lcm_i64(self.unit, *order.denom());
        let s = self.lifted(unit / self.unit);
        let p = (order * unit).to_integer();
        Series::raw(unit, p, s.terms.into_iter().filter(|t| t.0 < p).collect())
    }

    /// Keeps the terms with exponent `<= order`; precision is the next grid
    /// point after `order` in the (possibly lifted) unit.
    pub fn truncate_inclusive(&self, order: Exponent) -> Series {
        let unit = lcm_i64(self.unit, *order.denom());
        let next = order + Ratio::new(1, unit);
        self.truncate(next)
    }

    /// Multiplication by the exact monomial `q^e`.
    pub fn shift(&self, e: Exponent) -> Series {
        let unit = lcm_i64(self.unit, *e.denom());
        let s = self.lifted(unit / self.unit);
        let d = (e * unit).to_integer();
        Series::raw(
            unit,
            s.precision + d,
            s.terms.into_iter().map(|(k, c)| (k + d, c)).collect(),
        )
    }

    pub fn scale(&self, c: &Q) -> Series {
        if c.is_zero() {
            return Series::raw(self.unit, self.precision, Vec::new());
        }
        Series::raw(
            self.unit,
            self.precision,
            self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        )
    }

    pub fn scale_int(&self, c: i64) -> Series {
        self.scale(&crate::rational::q_int(c))
    }

    /// `f(q^r)` for a positive rational `r`.
    pub fn substitute_power(&self, r: Exponent) -> Series {
        assert!(r.is_positive(), "substitute_power needs r > 0");
        let (a, b) = (*r.numer(), *r.denom());
        Series::raw(
            self.unit * b,
            self.precision * a,
            self.terms.iter().map(|(k, c)| (k * a, c.clone())).collect(),
        )
    }

    /// Compares `self` and `other` at every representable exponent below
    /// `min(order, P_self, P_other)`.
    pub fn equal_to_order(&self, other: &Series, order: Exponent) -> Comparison {
        let avail = self.precision().min(other.precision());
        let verified_to = avail.min(order);
        let (a, b) = Series::unify(self, other);
        let limit = verified_to * a.unit;
        let mut i = 0;
        let mut j = 0;
        let mut first = None;
        loop {
            let next = match (a.terms.get(i), b.terms.get(j)) {
                (None, None) => break,
                (Some(x), None) => (x.0, x.1.clone(), Q::zero(), 1),
                (None, Some(y)) => (y.0, Q::zero(), y.1.clone(), 2),
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Less => (x.0, x.1.clone(), Q::zero(), 1),
                    Ordering::Greater => (y.0, Q::zero(), y.1.clone(), 2),
                    Ordering::Equal => (x.0, x.1.clone(), y.1.clone(), 3),
                },
            };
            let (k, l, r, step) = next;
            if Ratio::from_integer(k) >= limit {
                break;
            }
            if l != r {
                first = Some(Mismatch { exponent: Ratio::new(k, a.unit), lhs: l, rhs: r });
                break;
            }
            if step & 1 != 0 {
                i += 1;
            }
            if step & 2 != 0 {
                j += 1;
            }
        }
        Comparison { verified_to, sufficient: avail >= order, first_mismatch: first }
    }

    pub fn add_series(&self, other: &Series) -> Series {
        let (a, b) = Series::unify(self, other);
        let p = a.precision.min(b.precision);
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            match (a.terms.get(i), b.terms.get(j)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    out.push((x.0, &x.1 + &y.1));
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    out.push(x.clone());
                    i += 1;
                }
                (Some(_), Some(y)) => {
                    out.push(y.clone());
                    j += 1;
                }
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(y)) => {
                    out.push(y.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Series::raw(a.unit, p, out)
    }

    pub fn negate(&self) -> Series {
        Series {
            unit: self.unit,
            precision: self.precision,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn divide(&self, other: &Series) -> Result<Series> {
        Ok(self.mul_series(&other.invert()?))
    }
}

/// Runs `build` with increasing working precision until the result is known
/// to `target`, then truncates to exactly `target`.
///
/// Builders whose output precision depends on intermediate leading orders
/// (roots, quotients) use this instead of tracking every offset by hand.
pub fn build_to<F>(target: Exponent, mut build: F) -> Result<Series>
where
    F: FnMut(Exponent) -> Result<Series>,
{
    let mut work = target;
    let mut last = build(work)?;
    for _ in 0..16 {
        if last.precision() >= target {
            return Ok(last.truncate(target));
        }
        work += target - last.precision();
        last = build(work)?;
    }
    Ok(last)
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "O(q^{})", self.precision());
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let c = c.abs();
            match (c.is_one(), e.is_zero()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => write!(f, "q^{e}")?,
                (false, false) => write!(f, "{c}*q^{e}")?,
            }
        }
        write!(f, " + O(q^{})", self.precision())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl std::ops::$trait<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                self.$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$impl_fn(&rhs)
            }
        }
        impl std::ops::$trait<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                (&self).$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                self.$impl_fn(&rhs)
            }
        }
    };
}

impl Series {
    fn sub_series(&self, other: &Series) -> Series {
        self.add_series(&other.negate())
    }
}

forward_binop!(Add, add, add_series);
forward_binop!(Sub, sub, sub_series);
forward_binop!(Mul, mul, mul_series);

impl std::ops::Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

impl std::ops::Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

#[cfg(test)]
mod tests;
