//! Levels `1*, 2, 3, 4`: the generators `A, B, C`, Hauptmoduls `α = C^r/A^r`,
//! j-invariants of the `E_n` families and truncated `₂F₁`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{eisenstein, eta_power, eta_quotient, konst, EtaQuotientSpec};
use crate::error::{Error, Result};
use crate::qseries::{build_to, exp_int, Exponent, Series};
use crate::rational::{q_frac, q_int, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LevelId {
    N1star,
    N2,
    N3,
    N4,
}

impl LevelId {
    pub const ALL: [LevelId; 4] = [LevelId::N1star, LevelId::N2, LevelId::N3, LevelId::N4];

    pub fn r(self) -> i64 {
        match self {
            LevelId::N1star => 6,
            LevelId::N2 => 4,
            LevelId::N3 => 3,
            LevelId::N4 => 2,
        }
    }

    /// `α = κ_N z` where `z` is the parameter of the matching `E_n` family.
    pub fn kappa(self) -> i64 {
        match self {
            LevelId::N1star => 432,
            LevelId::N2 => 64,
            LevelId::N3 => 27,
            LevelId::N4 => 16,
        }
    }

    /// Index `n` of the `E_n` family whose base is this modular curve.
    pub fn family(self) -> u32 {
        match self {
            LevelId::N1star => 8,
            LevelId::N2 => 7,
            LevelId::N3 => 6,
            LevelId::N4 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LevelId::N1star => "N1star",
            LevelId::N2 => "N2",
            LevelId::N3 => "N3",
            LevelId::N4 => "N4",
        }
    }
}

impl fmt::Display for LevelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LevelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LevelId> {
        LevelId::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Which {
    A,
    B,
    C,
}

impl Which {
    pub const ALL: [Which; 3] = [Which::A, Which::B, Which::C];

    pub fn letter(self) -> char {
        match self {
            Which::A => 'A',
            Which::B => 'B',
            Which::C => 'C',
        }
    }
}

/// The power at which a generator is stored. `B, C` at level `1*` and `C` at
/// level 2 have irrational leading coefficients (`432^{1/6}`, `2^{3/2}`), so
/// only a power with rational coefficients is kept.
pub fn abc_power(level: LevelId, which: Which) -> i64 {
    match (level, which) {
        (LevelId::N1star, Which::B | Which::C) => 6,
        (LevelId::N2, Which::C) => 2,
        _ => 1,
    }
}

fn eq(factors: &[(u32, i32)], prec: Exponent) -> Series {
    eta_quotient(&EtaQuotientSpec::new(factors), prec)
}

/// `(k·η(q^s)^m + η(q)^m)^{1/d}` divided by the eta quotient `den`.
fn root_form(k: i64, s: u32, m: i32, d: i64, den: &[(u32, i32)], prec: Exponent) -> Result<Series> {
    build_to(prec, |p| {
        let den = eq(den, p);
        let work = p + den.order();
        let num = eta_power(s, m, work).scale_int(k) + eta_power(1, m, work);
        num.nth_root(d)?.divide(&den)
    })
}

/// The generator `which` of `level`, raised to [`abc_power`], known to `O(q^prec)`.
pub fn abc_generator(level: LevelId, which: Which, prec: Exponent) -> Result<Series> {
    match (level, which) {
        (LevelId::N1star, Which::A) => eisenstein(4, prec)?.nth_root(4),
        (LevelId::N1star, _) => {
            let e4 = eisenstein(4, prec)?;
            let e6 = eisenstein(6, prec)?;
            let e4_32 = e4.nth_root(2)?.pow_int(3)?;
            let half = q_frac(1, 2);
            let sum = match which {
                Which::B => e4_32 + e6,
                _ => e4_32 - e6,
            };
            Ok(sum.scale(&half))
        }
        (LevelId::N2, Which::A) => root_form(64, 2, 24, 4, &[(1, 2), (2, 2)], prec),
        (LevelId::N2, Which::B) => Ok(eq(&[(1, 4), (2, -2)], prec)),
        (LevelId::N2, Which::C) => Ok(eq(&[(2, 8), (1, -4)], prec).scale_int(8)),
        (LevelId::N3, Which::A) => root_form(27, 3, 12, 3, &[(1, 1), (3, 1)], prec),
        (LevelId::N3, Which::B) => Ok(eq(&[(1, 3), (3, -1)], prec)),
        (LevelId::N3, Which::C) => Ok(eq(&[(3, 3), (1, -1)], prec).scale_int(3)),
        (LevelId::N4, Which::A) => Ok(eq(&[(2, 10), (1, -4), (4, -4)], prec)),
        (LevelId::N4, Which::B) => Ok(eq(&[(1, 4), (2, -2)], prec)),
        (LevelId::N4, Which::C) => Ok(eq(&[(4, 4), (2, -2)], prec).scale_int(4)),
    }
}

/// The second printed form of `A` at level 4: `(16η(q⁴)⁸ + η(q)⁸)^{1/2} / η(q²)²`.
pub fn a4_root_form(prec: Exponent) -> Result<Series> {
    root_form(16, 4, 8, 2, &[(2, 2)], prec)
}

/// `G^k` for a generator `G`; `k` must be a multiple of the stored power.
pub fn abc_to_power(level: LevelId, which: Which, k: i64, prec: Exponent) -> Result<Series> {
    let stored = abc_power(level, which);
    if k % stored != 0 {
        return Err(Error::StoredPower {
            level: level.name(),
            which: which.letter(),
            stored,
            requested: k,
        });
    }
    build_to(prec, |p| abc_generator(level, which, p)?.pow_int(k / stored))
}

/// `α = C^r / A^r`.
pub fn hauptmodul(level: LevelId, prec: Exponent) -> Result<Series> {
    let r = level.r();
    build_to(prec, |p| {
        let c = abc_to_power(level, Which::C, r, p + 1)?;
        let a = abc_to_power(level, Which::A, r, p + 1)?;
        c.divide(&a)
    })
}

/// `j = E₄³ / η²⁴`.
pub fn j_classical(prec: Exponent) -> Result<Series> {
    build_to(prec, |p| {
        let e4 = eisenstein(4, p + 1)?;
        let delta = eta_power(1, 24, p + 2);
        e4.pow_int(3)?.divide(&delta)
    })
}

/// `j(z)` of the `E_n` family, `n ∈ {5, 6, 7, 8}`, evaluated on a series `z`
/// of positive order.
pub fn j_family(n: u32, z: &Series) -> Result<Series> {
    if z.is_zero() {
        return Err(Error::ZeroSeries(z.precision()));
    }
    if !z.order().is_positive() {
        return Err(Error::NonPositiveOrder(z.order()));
    }
    let p = z.precision();
    let lin = |a: i64, b: i64| konst(a, p) + z.scale_int(b);
    let (num, den) = match n {
        5 => {
            let poly = lin(1, 224) + z.pow_int(2)?.scale_int(256);
            (poly.pow_int(3)?, z * lin(1, -16).pow_int(4)?)
        }
        6 => (lin(1, 216).pow_int(3)?, z * lin(1, -27).pow_int(3)?),
        7 => (lin(1, 192).pow_int(3)?, z * lin(1, -64).pow_int(2)?),
        8 => (konst(1, p), z * lin(1, -432)),
        _ => return Err(Error::UnknownName(format!("E{n}"))),
    };
    num.divide(&den)
}

/// `Σ_{k < len} (a)_k (b)_k / ((c)_k k!) x^k`.
pub fn hyp2f1(a: &Q, b: &Q, c: &Q, len: i64) -> Result<Series> {
    if c.is_integer() && !c.is_positive() {
        return Err(Error::InvalidHypergeometric(format!("c = {c} is a nonpositive integer")));
    }
    let mut terms = Vec::new();
    let mut t = Q::one();
    for k in 0..len {
        if t.is_zero() {
            break;
        }
        terms.push((k, t.clone()));
        let kq = q_int(k);
        t = t * (a + &kq) * (b + &kq) / ((c + &kq) * (&kq + Q::one()));
    }
    Series::from_terms(1, terms, len.max(0))
}

/// `₂F₁(1/r, 1 - 1/r; 1; α_N(q))`, which should reproduce `A_N(q)`.
pub fn regular_period(level: LevelId, prec: Exponent) -> Result<Series> {
    let r = level.r();
    let a = q_frac(1, r);
    let b = Q::one() - &a;
    let len = super::ceil_int(prec);
    let f = hyp2f1(&a, &b, &Q::one(), len)?;
    let alpha = hauptmodul(level, exp_int(len))?;
    Ok(f.compose(&alpha)?.truncate(prec))
}
