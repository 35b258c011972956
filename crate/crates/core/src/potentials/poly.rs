//! Polynomials in up to four formal variables with series coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::qseries::{Comparison, Exponent, Mismatch, Series};

pub type Monomial = [u32; 4];

pub const VAR_NAMES: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Series>,
}

/// Result of comparing two polynomials monomial by monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyComparison {
    pub verified_to: Exponent,
    pub sufficient: bool,
    /// The first failing monomial (in monomial order) and its mismatch.
    pub first_mismatch: Option<(String, Mismatch)>,
}

impl PolyComparison {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none() && self.sufficient
    }
}

pub fn monomial_name(m: &Monomial, nvars: usize) -> String {
    let parts: Vec<String> = (0..nvars)
        .filter(|&i| m[i] > 0)
        .map(|i| match m[i] {
            1 => VAR_NAMES[i].to_string(),
            e => format!("{}^{e}", VAR_NAMES[i]),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        assert!((1..=4).contains(&nvars), "1 to 4 variables");
        Poly { nvars, terms: BTreeMap::new() }
    }

    /// A single term `c · m`.
    pub fn term(nvars: usize, m: Monomial, c: Series) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(m, c);
        p
    }

    /// The variable with index `i` and an exact coefficient 1 known to `O(q^prec)`.
    pub fn var(nvars: usize, i: usize, prec: Exponent) -> Poly {
        let mut m = [0; 4];
        m[i] = 1;
        Poly::term(nvars, m, Series::one(prec))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, m: Monomial, c: Series) {
        debug_assert!(m[self.nvars..].iter().all(|&e| e == 0));
        let next = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        self.terms.insert(m, next);
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Series> {
        self.terms.get(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Monomial, &Series)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars.max(other.nvars));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = [m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]];
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, s: &Series) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&Series) -> Series) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, f(c))).collect(),
        }
    }

    /// Least coefficient precision over all monomials.
    pub fn precision(&self) -> Option<Exponent> {
        self.terms.values().map(Series::precision).min()
    }

    /// Compares coefficient series of every monomial present on either side.
    /// A monomial absent from one side counts as an exact zero there.
    pub fn compare(&self, other: &Poly, order: Exponent) -> PolyComparison {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        let mut verified_to = order;
        let mut sufficient = true;
        for m in keys {
            let exact_zero = || Series::zero(order);
            let a = self.terms.get(m).cloned().unwrap_or_else(exact_zero);
            let b = other.terms.get(m).cloned().unwrap_or_else(exact_zero);
            let c: Comparison = a.equal_to_order(&b, order);
            verified_to = verified_to.min(c.verified_to);
            sufficient &= c.sufficient;
            if let Some(mm) = c.first_mismatch {
                return PolyComparison {
                    verified_to,
                    sufficient,
                    first_mismatch: Some((monomial_name(m, self.nvars), mm)),
                };
            }
        }
        PolyComparison { verified_to, sufficient, first_mismatch: None }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("\n  + ")?;
            }
            write!(f, "({c})*{}", monomial_name(m, self.nvars))?;
        }
        Ok(())
    }
}
