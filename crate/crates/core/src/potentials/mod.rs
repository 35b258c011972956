//! Open Gromov-Witten potentials of the elliptic orbifolds `P¹_{3,3,3}`,
//! `P¹_{2,4,4}`, `P¹_{2,3,6}` and `P¹_{2,2,2,2}`.
//!
//! All coefficient series live natively in the disc parameter `q_d`, with
//! `q = q_d^e` for the cover exponent `e` of the orbifold.

mod poly;
mod sums;

pub(crate) use sums::{sign, Acc};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::{exp, exp_int, Exponent, Series};
use crate::rational::Q;

pub use poly::{monomial_name, Monomial, Poly, PolyComparison, VAR_NAMES};
pub use sums::{
    a_combin, choose2, cy_236, cyz2_236, cyz2_alternating, cyz2_parallelogram, cyz4_236, cz_236,
    dy_244, dyz_244, phi_2222, phi_333, phi_333_sign3k, psi_2222, psi_333, t_class,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbifoldId {
    P333,
    P244,
    P236,
    P2222,
}

impl OrbifoldId {
    pub const ALL: [OrbifoldId; 4] =
        [OrbifoldId::P333, OrbifoldId::P244, OrbifoldId::P236, OrbifoldId::P2222];

    /// `e` with `q = q_d^e`.
    pub fn cover(self) -> i64 {
        match self {
            OrbifoldId::P333 => 24,
            OrbifoldId::P244 => 32,
            OrbifoldId::P236 => 48,
            OrbifoldId::P2222 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbifoldId::P333 => "333",
            OrbifoldId::P244 => "244",
            OrbifoldId::P236 => "236",
            OrbifoldId::P2222 => "2222",
        }
    }

    pub fn nvars(self) -> usize {
        match self {
            OrbifoldId::P2222 => 4,
            _ => 3,
        }
    }

    /// Precision in `q_d` matching an order in `q`.
    pub fn qd_len(self, order_q: Exponent) -> i64 {
        (order_q * self.cover()).ceil().to_integer()
    }
}

impl fmt::Display for OrbifoldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrbifoldId {
    type Err = Error;

    fn from_str(s: &str) -> Result<OrbifoldId> {
        let s = s.trim_start_matches('P');
        OrbifoldId::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Rewrites a `q_d` series in the variable `q = q_d^e`.
pub fn qd_to_q(s: &Series, orb: OrbifoldId) -> Series {
    s.substitute_power(exp(1, orb.cover()))
}

/// Rewrites a `q` series in the variable `q_d`.
pub fn q_to_qd(s: &Series, orb: OrbifoldId) -> Series {
    s.substitute_power(exp_int(orb.cover()))
}

/// `c·q_d^k` known to `O(q_d^prec)`.
pub(crate) fn qd_monomial(c: i64, k: i64, prec: i64) -> Series {
    Series::monomial(Q::from_integer(c.into()), exp_int(k), exp_int(prec))
}

/// The four coefficient series of the `(2,3,6)` potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeffs236 {
    pub cy: Series,
    pub cyz2: Series,
    pub cyz4: Series,
    pub cz: Series,
}

pub fn coeffs_236(prec: i64) -> Coeffs236 {
    Coeffs236 {
        cy: cy_236(prec),
        cyz2: cyz2_236(prec),
        cyz4: cyz4_236(prec),
        cz: cz_236(prec),
    }
}

fn mono(x: u32, y: u32, z: u32, w: u32) -> Monomial {
    [x, y, z, w]
}

/// The potential `W` with the monomial structure of each orbifold, known to
/// `O(q_d^prec)` in every coefficient.
///
/// For `P¹_{3,3,3}` the `xyz` coefficient is `+ψ`: with `ψ = -q_d + …` this is
/// the `-q_d·xyz` term shared by all three cases, and it is the sign for which
/// `x·w_x + y·w_y + z·w_z = W` holds.
pub fn assemble_potential(orb: OrbifoldId, prec: i64) -> Poly {
    let mut w = Poly::zero(orb.nvars());
    match orb {
        OrbifoldId::P333 => {
            let phi = phi_333(prec);
            for m in [mono(3, 0, 0, 0), mono(0, 3, 0, 0), mono(0, 0, 3, 0)] {
                w.add_term(m, phi.clone());
            }
            w.add_term(mono(1, 1, 1, 0), psi_333(prec));
        }
        OrbifoldId::P244 => {
            let dy = dy_244(prec);
            w.add_term(mono(2, 0, 0, 0), qd_monomial(1, 6, prec));
            w.add_term(mono(1, 1, 1, 0), qd_monomial(-1, 1, prec));
            w.add_term(mono(0, 4, 0, 0), dy.clone());
            w.add_term(mono(0, 0, 4, 0), dy);
            w.add_term(mono(0, 2, 2, 0), dyz_244(prec));
        }
        OrbifoldId::P236 => {
            let c = coeffs_236(prec);
            w.add_term(mono(2, 0, 0, 0), qd_monomial(1, 6, prec));
            w.add_term(mono(1, 1, 1, 0), qd_monomial(-1, 1, prec));
            w.add_term(mono(0, 3, 0, 0), c.cy);
            w.add_term(mono(0, 0, 6, 0), c.cz);
            w.add_term(mono(0, 2, 2, 0), c.cyz2);
            w.add_term(mono(0, 1, 4, 0), c.cyz4);
        }
        OrbifoldId::P2222 => {
            let phi = phi_2222(prec);
            for m in [mono(2, 2, 0, 0), mono(2, 0, 0, 2), mono(0, 2, 2, 0), mono(0, 0, 2, 2)] {
                w.add_term(m, phi.clone());
            }
            w.add_term(mono(1, 1, 1, 1), psi_2222(prec));
        }
    }
    w
}
