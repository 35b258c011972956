//! Classical modular objects as q-expansions: divisor sums, Eisenstein
//! series, Dedekind eta and eta quotients, the theta derivative, the Table
//! generators `A, B, C` of the levels `1*, 2, 3, 4`, Hauptmoduls,
//! j-invariants and truncated `₂F₁`.

mod levels;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::{exp, exp_int, Exponent, Series};
use crate::rational::{q_int, Q};

pub use levels::{
    a4_root_form, abc_generator, abc_power, abc_to_power, hauptmodul, hyp2f1, j_classical,
    j_family, regular_period, LevelId, Which,
};

/// Smallest integer `n` with `n >= e`.
pub(crate) fn ceil_int(e: Exponent) -> i64 {
    e.ceil().to_integer()
}

/// `σ_k(n) = Σ_{d | n} d^k`.
pub fn divisor_sigma(k: u32, n: u64) -> BigInt {
    assert!(n >= 1, "divisor_sigma needs n >= 1");
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

/// `σ_k(n)` for `1 <= n < len`, by sieve. Index 0 is unused.
fn sigma_table(k: u32, len: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); len.max(1)];
    for d in 1..len {
        let dk = BigInt::from(d).pow(k);
        for m in (d..len).step_by(d) {
            t[m] += &dk;
        }
    }
    t
}

/// `E_k = 1 + c_k Σ σ_{k-1}(d) q^d` for `k ∈ {2, 4, 6}`, known to `O(q^prec)`.
pub fn eisenstein(k: u32, prec: Exponent) -> Result<Series> {
    let c: i64 = match k {
        2 => -24,
        4 => 240,
        6 => -504,
        _ => return Err(Error::UnsupportedWeight(k)),
    };
    let n = ceil_int(prec).max(0);
    let sig = sigma_table(k - 1, n as usize);
    let mut terms = vec![(0, Q::one())];
    for (d, s) in sig.into_iter().enumerate().skip(1) {
        terms.push((d as i64, Q::from_integer(s * c)));
    }
    terms.retain(|t| t.0 < n);
    Ok(Series::from_terms(1, terms, n)?.truncate(prec))
}

/// `Σ_{n ∈ Z} (-1)^n q^{n(3n-1)/2}` known to `O(q^len)`.
fn pentagonal(len: i64) -> Series {
    let mut terms = vec![(0, Q::one())];
    let mut n = 1i64;
    loop {
        let a = n * (3 * n - 1) / 2;
        if a >= len {
            break;
        }
        let c = if n % 2 == 0 { Q::one() } else { -Q::one() };
        terms.push((a, c.clone()));
        let b = n * (3 * n + 1) / 2;
        if b < len {
            terms.push((b, c));
        }
        n += 1;
    }
    Series::from_terms(1, terms, len).expect("pentagonal exponents are distinct")
}

/// Dedekind eta `q^{1/24} Σ (-1)^n q^{n(3n-1)/2}`, known to `O(q^prec)`.
pub fn dedekind_eta(prec: Exponent) -> Series {
    eta_power(1, 1, prec)
}

/// `η(q^scale)^power`, known to `O(q^prec)`.
pub fn eta_power(scale: u32, power: i32, prec: Exponent) -> Series {
    assert!(scale > 0, "eta scale must be positive");
    let lead = exp(i64::from(scale) * i64::from(power), 24);
    let rel = prec - lead;
    if rel <= Exponent::zero() {
        return Series::zero(prec);
    }
    let len = ceil_int(rel / i64::from(scale));
    let p = pentagonal(len)
        .pow_int(i64::from(power))
        .expect("pentagonal sum has constant term 1");
    p.substitute_power(exp_int(i64::from(scale)))
        .shift(lead)
        .truncate(prec)
}

/// `q^{1/24} Π (1 - q^n)` by repeated multiplication; an independent route to eta.
pub fn eta_euler_product(prec: Exponent) -> Series {
    let lead = exp(1, 24);
    let len = ceil_int(prec - lead).max(0);
    let mut acc = Series::one(exp_int(len));
    for n in 1..len {
        let f = Series::from_terms(1, vec![(0, Q::one()), (n, -Q::one())], len)
            .expect("binomial factor");
        acc = &acc * &f;
    }
    acc.shift(lead).truncate(prec)
}

/// `Π η(q^s)^p` over `(s, p)` pairs with distinct scales.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    pub factors: Vec<(u32, i32)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: &[(u32, i32)]) -> EtaQuotientSpec {
        let spec = EtaQuotientSpec { factors: factors.to_vec() };
        debug_assert!(spec.scales_distinct());
        spec
    }

    fn scales_distinct(&self) -> bool {
        let mut s: Vec<u32> = self.factors.iter().map(|f| f.0).collect();
        s.sort_unstable();
        s.windows(2).all(|w| w[0] != w[1])
    }

    /// Leading exponent `Σ s·p / 24`.
    pub fn order(&self) -> Exponent {
        self.factors
            .iter()
            .map(|&(s, p)| exp(i64::from(s) * i64::from(p), 24))
            .fold(Exponent::zero(), |a, b| a + b)
    }
}

/// The eta quotient known to exactly `O(q^prec)`.
pub fn eta_quotient(spec: &EtaQuotientSpec, prec: Exponent) -> Series {
    let total = spec.order();
    let mut acc = Series::one(prec - total);
    for &(s, p) in &spec.factors {
        let own = exp(i64::from(s) * i64::from(p), 24);
        acc = &acc * &eta_power(s, p, prec - total + own);
    }
    acc
}

/// `D(q) = Σ_{r ∈ Z+1/2} (-1)^{r-1/2} r q^{r²/2}`, which equals `η(q)³`.
pub fn theta1_vderiv(prec: Exponent) -> Series {
    // r = m/2 with m odd; q^{r²/2} = q^{m²/8}
    let p8 = ceil_int(prec * 8);
    let mut acc: Vec<(i64, Q)> = Vec::new();
    let mut m = 1i64;
    while m * m < p8 {
        for sm in [m, -m] {
            let sign = if ((sm - 1) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
            let c = Q::new(BigInt::from(sign * sm), BigInt::from(2));
            match acc.binary_search_by_key(&(m * m), |t| t.0) {
                Ok(i) => acc[i].1 += c,
                Err(i) => acc.insert(i, (m * m, c)),
            }
        }
        m += 2;
    }
    Series::from_terms(8, acc, p8)
        .expect("theta exponents below precision")
        .truncate(prec)
}

/// `1 - 24 Σ n q^n / (1 - q^n)`, each term expanded as a geometric series.
pub fn e2_lambert(prec: Exponent) -> Series {
    let len = ceil_int(prec).max(1);
    let mut coeffs = vec![BigInt::zero(); len as usize];
    coeffs[0] = BigInt::one();
    for n in 1..len {
        for m in (n..len).step_by(n as usize) {
            coeffs[m as usize] -= BigInt::from(24 * n);
        }
    }
    let terms = coeffs
        .into_iter()
        .enumerate()
        .map(|(i, c)| (i as i64, Q::from_integer(c)));
    Series::from_terms(1, terms, len).expect("dense terms").truncate(prec)
}

/// `c` as an exact constant series known to `O(q^prec)`.
pub(crate) fn konst(c: i64, prec: Exponent) -> Series {
    Series::constant(q_int(c), prec)
}

#[cfg(test)]
mod tests;
