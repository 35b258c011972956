//! Small helpers for exact rationals: parsing, formatting and exact roots.

use num_bigint::{BigInt, Sign};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_from_ratio(r: Ratio<i64>) -> Q {
    q_frac(*r.numer(), *r.denom())
}

/// Parses `"n"` or `"n/d"` with optional leading sign.
pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

fn exact_int_root(n: &BigInt, degree: u32) -> Option<BigInt> {
    let r = n.nth_root(degree);
    (r.pow(degree) == *n).then_some(r)
}

/// The real rational `degree`-th root of `c`, if there is one.
///
/// Negative `c` has a real root only for odd degree; the negative real root is returned.
pub fn rational_root(c: &Q, degree: i64) -> Result<Q> {
    let fail = || Error::NotRationalRoot { coefficient: c.to_string(), degree };
    if degree <= 0 {
        return Err(fail());
    }
    if degree == 1 || c.is_zero() {
        return Ok(c.clone());
    }
    if c.is_negative() && degree % 2 == 0 {
        return Err(fail());
    }
    let deg = u32::try_from(degree).map_err(|_| fail())?;
    let num = c.numer().abs();
    let den = c.denom().clone();
    let rn = exact_int_root(&num, deg).ok_or_else(fail)?;
    let rd = exact_int_root(&den, deg).ok_or_else(fail)?;
    let root = Q::new(rn, rd);
    Ok(if c.numer().sign() == Sign::Minus { -root } else { root })
}

/// `c^(p/d)` for a rational exponent, exact or an error.
pub fn rational_power(c: &Q, exp: Ratio<i64>) -> Result<Q> {
    let root = rational_root(c, *exp.denom())?;
    let p = *exp.numer();
    if p < 0 && root.is_zero() {
        return Err(Error::ZeroSeries(Ratio::zero()));
    }
    let mut out = Q::one();
    for _ in 0..p.unsigned_abs() {
        out *= &root;
    }
    Ok(if p < 0 { out.recip() } else { out })
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    num_integer::lcm(a, b)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Floor and ceiling of a rational as integers.
pub fn floor_ratio(r: Ratio<i64>) -> i64 {
    r.floor().to_integer()
}

pub fn ceil_ratio(r: Ratio<i64>) -> i64 {
    r.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert_eq!(rational_root(&q_frac(8, 27), 3).unwrap(), q_frac(2, 3));
        assert_eq!(rational_root(&q_int(-27), 3).unwrap(), q_int(-3));
        assert!(rational_root(&q_int(432), 6).is_err());
        assert!(rational_root(&q_int(-4), 2).is_err());
        assert_eq!(rational_power(&q_int(4), Ratio::new(-3, 2)).unwrap(), q_frac(1, 8));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1", "-1/4", "1889/2", "0"] {
            assert_eq!(parse_q(s).unwrap().to_string(), s);
        }
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("0.5").is_err());
    }
}
