//! The identity catalog.

use std::sync::Arc;
use std::time::Instant;

use crate::classical::{
    a4_root_form, abc_generator, abc_to_power, e2_lambert, eisenstein, eta_euler_product,
    eta_power, eta_quotient, hauptmodul, j_classical, j_family, regular_period, theta1_vderiv,
    EtaQuotientSpec, LevelId, Which,
};
use crate::error::Result;
use crate::mfactor::{closed_forms_333, verify_clifford, verify_eq2363, verify_reductions_236, verify_square};
use crate::potentials::{
    cy_236, cyz2_parallelogram, dy_244, dyz_244, phi_2222, phi_333, psi_2222, psi_333, qd_to_q,
    OrbifoldId,
};
use crate::qseries::{exp, exp_int, Exponent, Series};
use crate::rational::q_frac;
use crate::report::{IdentityReport, Status};
use crate::syz::{
    inverse_mirror_target, j_consistency_2222, kp2_suite, syz_map, target_2222_eta,
    target_236_derived, target_244_eta, verify_sigma236_printed, verify_sigma244_printed,
    verify_syz,
};

use super::Var;

type Runner = Arc<dyn Fn(Exponent) -> Result<IdentityReport> + Send + Sync>;

/// One named identity with its default order.
#[derive(Clone)]
pub struct Check {
    pub name: String,
    pub default_order: Exponent,
    /// Variable the order is measured in.
    pub variable: Var,
    run: Runner,
}

impl Check {
    /// Runs at `order` (or the default). A computation error becomes a
    /// mismatch report carrying the error text.
    pub fn run(&self, order: Option<Exponent>) -> IdentityReport {
        let order = order.unwrap_or(self.default_order);
        let start = Instant::now();
        let mut r = match (self.run)(order) {
            Ok(r) => r,
            Err(e) => IdentityReport {
                name: String::new(),
                verified_to: Exponent::from_integer(0),
                status: Status::Mismatch,
                first_mismatch: None,
                note: Some(format!("error: {e}")),
                runtime: None,
            },
        };
        r.name = self.name.clone();
        r.runtime = Some(start.elapsed());
        r
    }
}

fn check(
    name: impl Into<String>,
    default: i64,
    variable: Var,
    f: impl Fn(Exponent) -> Result<IdentityReport> + Send + Sync + 'static,
) -> Check {
    Check { name: name.into(), default_order: exp_int(default), variable, run: Arc::new(f) }
}

fn q_check(
    name: impl Into<String>,
    default: i64,
    f: impl Fn(Exponent) -> Result<IdentityReport> + Send + Sync + 'static,
) -> Check {
    check(name, default, Var::Q, f)
}

/// Series identity `a = b` to `O(q^order)`.
fn eq_check(
    name: &str,
    default: i64,
    f: impl Fn(Exponent) -> Result<(Series, Series)> + Send + Sync + 'static,
) -> Check {
    let n = name.to_string();
    q_check(name, default, move |p| {
        let (a, b) = f(p)?;
        Ok(IdentityReport::from_comparison(&n, &a.equal_to_order(&b, p)))
    })
}

fn ceil(p: Exponent) -> i64 {
    p.ceil().to_integer()
}

/// A `q_d` series rewritten in `q`, built with enough `q_d` terms for `O(q^p)`.
fn in_q(orb: OrbifoldId, p: Exponent, f: fn(i64) -> Series) -> Series {
    qd_to_q(&f(orb.qd_len(p) + 1), orb)
}

/// `Π η(q_d^s)^p` in the variable `q_d`.
fn eta_qd(f: &[(u32, i32)], prec: i64) -> Series {
    eta_quotient(&EtaQuotientSpec::new(f), exp_int(prec))
}

fn g(level: LevelId, which: Which, k: i64, p: Exponent) -> Result<Series> {
    abc_to_power(level, which, k, p)
}

fn classical_checks() -> Vec<Check> {
    use LevelId::*;
    use Which::*;
    let mut v = vec![
        eq_check("E2:lambert", 60, |p| Ok((eisenstein(2, p)?, e2_lambert(p)))),
        eq_check("eta:euler", 200, |p| Ok((eta_power(1, 1, p), eta_euler_product(p)))),
        eq_check("theta:eta3", 100, |p| Ok((theta1_vderiv(p), eta_power(1, 3, p)))),
        eq_check("discriminant", 100, |p| {
            let lhs = eisenstein(4, p)?.pow_int(3)? - eisenstein(6, p)?.pow_int(2)?;
            Ok((lhs, eta_power(1, 24, p).scale_int(1728)))
        }),
        eq_check("ring:A2^2=A4^2+C4^2", 60, |p| {
            Ok((g(N2, A, 2, p)?, g(N4, A, 2, p)? + g(N4, C, 2, p)?))
        }),
        eq_check("ring:C2^2=2A4C4", 60, |p| {
            Ok((g(N2, C, 2, p)?, (g(N4, A, 1, p)? * g(N4, C, 1, p)?).scale_int(2)))
        }),
        eq_check("ring:A2^4=B2^4+C2^4", 60, |p| {
            Ok((g(N2, A, 4, p)?, g(N2, B, 4, p)? + g(N2, C, 4, p)?))
        }),
        eq_check("ring:A2^2=2E2(q^2)-E2", 60, |p| {
            let e2q2 = eisenstein(2, p / 2 + 1)?.substitute_power(exp_int(2));
            Ok((g(N2, A, 2, p)?, e2q2.scale_int(2) - eisenstein(2, p)?))
        }),
        eq_check("ring:A2^2(q^2)", 60, |p| {
            let lhs = g(N2, A, 2, p / 2 + 1)?.substitute_power(exp_int(2));
            let rhs = (g(N2, A, 2, p)? + g(N2, B, 2, p)?.scale_int(3)).scale(&q_frac(1, 4));
            Ok((lhs, rhs))
        }),
        eq_check("ring:C2^2(q^2)", 60, |p| {
            let lhs = g(N2, C, 2, p / 2 + 1)?.substitute_power(exp_int(2));
            let rhs = (g(N2, A, 2, p)? - g(N2, B, 2, p)?).scale(&q_frac(1, 4));
            Ok((lhs, rhs))
        }),
        eq_check("ring:A4-root-form", 60, |p| Ok((g(N4, A, 1, p)?, a4_root_form(p)?))),
    ];
    for level in [N2, N3, N4] {
        v.push(eq_check(&format!("period@{level}"), 20, move |p| {
            Ok((regular_period(level, p)?, abc_generator(level, A, p)?))
        }));
    }
    for level in LevelId::ALL {
        v.push(eq_check(&format!("jfamily@{level}"), 10, move |p| {
            let z = hauptmodul(level, p + 2)?.scale(&q_frac(1, level.kappa()));
            Ok((j_family(level.family(), &z)?, j_classical(p)?))
        }));
    }
    v
}

fn potential_checks() -> Vec<Check> {
    use OrbifoldId::*;
    vec![
        eq_check("phi@333:eta", 60, |p| Ok((in_q(P333, p, phi_333), -eta_power(3, 3, p)))),
        eq_check("psi@333:eta", 60, |p| {
            let e13 = eta_power(1, 3, p * 3).substitute_power(exp(1, 3));
            Ok((in_q(P333, p, psi_333), -(e13 + eta_power(3, 3, p).scale_int(3))))
        }),
        eq_check("dy@244:eta", 60, |p| {
            let c2sq = g(LevelId::N2, Which::C, 2, p + exp(1, 8))?;
            Ok((in_q(P244, p, dy_244), c2sq.shift(exp(-1, 8)).scale(&q_frac(1, 8))))
        }),
        eq_check("dy@244:eisenstein", 60, |p| {
            let e2h = eisenstein(2, p * 2 + 1)?.substitute_power(exp(1, 2));
            let e2 = eisenstein(2, p + 1)?;
            let e2d = eisenstein(2, p / 2 + 1)?.substitute_power(exp_int(2));
            let inner = e2h.scale(&q_frac(-1, 24)) + e2.scale(&q_frac(1, 8)) - e2d.scale(&q_frac(1, 12));
            Ok((in_q(P244, p, dy_244), inner.shift(exp(-1, 8))))
        }),
        eq_check("dyz@244:eisenstein", 60, |p| {
            let e2 = eisenstein(2, p + 1)?;
            let e2d = eisenstein(2, p / 2 + 1)?.substitute_power(exp_int(2));
            let inner = Series::constant(q_frac(1, 4), p + 1) + e2.scale(&q_frac(1, 4)) - e2d.scale(&q_frac(1, 2));
            Ok((in_q(P244, p, dyz_244), inner.shift(exp(-1, 8))))
        }),
        eq_check("cy@236:eta", 20, |p| Ok((in_q(P236, p, cy_236), -eta_power(1, 3, p).shift(exp(1, 16))))),
        eq_check("cyz2@236:parallelogram", 20, |p| {
            let one_minus = Series::one(p + 1) - eisenstein(2, p + 1)?;
            Ok((in_q(P236, p, cyz2_parallelogram), one_minus.shift(exp(-1, 12)).scale(&q_frac(1, 6))))
        }),
        check("phi@2222:eta", 200, Var::Qd, move |p| {
            let n = ceil(p);
            let r = phi_2222(n).equal_to_order(&eta_qd(&[(8, 2), (16, 4), (4, -2)], n), p);
            Ok(IdentityReport::from_comparison("", &r))
        }),
        check("psi@2222:eta", 200, Var::Qd, move |p| {
            let n = ceil(p);
            let r = psi_2222(n).equal_to_order(&eta_qd(&[(8, 14), (4, -6), (16, -4)], n), p);
            Ok(IdentityReport::from_comparison("", &r))
        }),
        check("psi+4phi@2222", 200, Var::Qd, move |p| {
            let n = ceil(p);
            let lhs = psi_2222(n) + phi_2222(n).scale_int(4);
            let r = lhs.equal_to_order(&eta_qd(&[(4, 8), (2, -4)], n), p);
            Ok(IdentityReport::from_comparison("", &r))
        }),
        check("psi-4phi@2222", 200, Var::Qd, move |p| {
            let n = ceil(p);
            let lhs = psi_2222(n) - phi_2222(n).scale_int(4);
            let r = lhs.equal_to_order(&eta_qd(&[(8, 4), (2, 4), (4, -4)], n), p);
            Ok(IdentityReport::from_comparison("", &r))
        }),
    ]
}

fn syz_checks() -> Vec<Check> {
    use OrbifoldId::*;
    let mut v = Vec::new();
    for orb in OrbifoldId::ALL {
        let default = if orb == P236 { 20 } else { 60 };
        v.push(q_check(format!("syz@{orb}"), default, move |p| verify_syz(orb, p)));
    }
    v.extend([
        check("sigma@244:printed", 177, Var::Qd, |_| verify_sigma244_printed()),
        eq_check("sigma@244:eta", 60, |p| Ok((syz_map(P244, p)?.series, target_244_eta(p)?))),
        eq_check("sigma@236:derived", 20, |p| Ok((syz_map(P236, p)?.series, target_236_derived(p)?))),
        q_check("sigma@236:printed", 6, |_| verify_sigma236_printed()),
        eq_check("sigma@2222:eta", 30, |p| Ok((syz_map(P2222, p)?.series, target_2222_eta(p)?))),
        eq_check("target@2222:forms", 60, |p| {
            Ok((inverse_mirror_target(P2222, p)?.series, target_2222_eta(p)?))
        }),
        q_check("j@2222", 10, j_consistency_2222),
        q_check("kp2", 10, |p| Ok(kp2_suite(ceil(p))?.report)),
    ]);
    v
}

fn mfactor_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for orb in [OrbifoldId::P333, OrbifoldId::P244, OrbifoldId::P236] {
        v.push(check(format!("clifford@{orb}"), 120, Var::Qd, move |p| verify_clifford(orb, ceil(p))));
        v.push(check(format!("square@{orb}"), 80, Var::Qd, move |p| verify_square(orb, ceil(p))));
    }
    for part in ["x2", "yz-proof", "xz-proof", "xy-proof", "yz-statement", "xz-statement"] {
        let name = format!("mf333:{part}");
        let key = name.clone();
        v.push(q_check(name, 60, move |p| {
            let all = closed_forms_333(ceil(p))?;
            Ok(all.into_iter().find(|r| r.name == key).expect("known part"))
        }));
    }
    v.push(q_check("eq2363", 60, |p| verify_eq2363(ceil(p))));
    v.push(q_check("reductions@236", 20, |p| verify_reductions_236(ceil(p))));
    v
}

/// The full catalog, sorted by name.
pub fn check_catalog() -> Vec<Check> {
    let mut v = classical_checks();
    v.extend(potential_checks());
    v.extend(syz_checks());
    v.extend(mfactor_checks());
    v.sort_by(|a, b| a.name.cmp(&b.name));
    v
}
