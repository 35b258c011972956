//! Named series, polynomials and matrices addressable by stable strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::classical::{
    abc_generator, abc_power, dedekind_eta, eisenstein, eta_power, hauptmodul, j_classical,
    theta1_vderiv, LevelId, Which,
};
use crate::error::{Error, Result};
use crate::mfactor::{delta_matrix, mf_coefficients, series_236_extras, ExtMatrix};
use crate::potentials::{
    assemble_potential, cy_236, cyz2_236, cyz4_236, cz_236, dy_244, dyz_244, phi_2222, phi_333,
    psi_2222, psi_333, qd_to_q, OrbifoldId, Poly,
};
use crate::qseries::{exp_int, Exponent, Series};
use crate::syz::{inverse_mirror_target, kp2_suite, syz_map};

/// Variable a value is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q,
    Qd,
}

/// The variable a named object is built in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Native {
    Q,
    Qd(OrbifoldId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Series(Series),
    Poly(Poly),
    Matrix(ExtMatrix),
}

type Builder = Arc<dyn Fn(Exponent) -> Result<Value> + Send + Sync>;

/// A registry entry. `build` receives a precision in the native variable.
#[derive(Clone)]
pub struct SeriesEntry {
    pub name: String,
    pub native: Native,
    build: Builder,
}

/// Largest order accepted by `expand`, in the native variable.
pub const MAX_NATIVE_ORDER: i64 = 20_000;

fn q_entry(name: impl Into<String>, f: impl Fn(Exponent) -> Result<Series> + Send + Sync + 'static) -> SeriesEntry {
    SeriesEntry { name: name.into(), native: Native::Q, build: Arc::new(move |p| f(p).map(Value::Series)) }
}

fn qd_entry(
    name: impl Into<String>,
    orb: OrbifoldId,
    f: impl Fn(i64) -> Result<Value> + Send + Sync + 'static,
) -> SeriesEntry {
    SeriesEntry {
        name: name.into(),
        native: Native::Qd(orb),
        build: Arc::new(move |p| f(p.ceil().to_integer())),
    }
}

fn qd_series(name: &str, orb: OrbifoldId, f: fn(i64) -> Series) -> SeriesEntry {
    qd_entry(format!("{name}@{orb}"), orb, move |p| Ok(Value::Series(f(p))))
}

/// Every named object, sorted by name.
pub fn series_catalog() -> Vec<SeriesEntry> {
    let mut v = vec![
        q_entry("eta", |p| Ok(dedekind_eta(p))),
        q_entry("Delta", |p| Ok(eta_power(1, 24, p))),
        q_entry("E2", |p| eisenstein(2, p)),
        q_entry("E4", |p| eisenstein(4, p)),
        q_entry("E6", |p| eisenstein(6, p)),
        q_entry("j", j_classical),
        q_entry("theta1v", |p| Ok(theta1_vderiv(p))),
    ];
    for level in LevelId::ALL {
        for which in Which::ALL {
            let k = abc_power(level, which);
            let name = if k == 1 {
                format!("{}@{level}", which.letter())
            } else {
                format!("{}{k}@{level}", which.letter())
            };
            v.push(q_entry(name, move |p| abc_generator(level, which, p)));
        }
        v.push(q_entry(format!("alpha@{level}"), move |p| hauptmodul(level, p)));
    }
    v.extend([
        qd_series("phi", OrbifoldId::P333, phi_333),
        qd_series("psi", OrbifoldId::P333, psi_333),
        qd_series("dy", OrbifoldId::P244, dy_244),
        qd_series("dyz", OrbifoldId::P244, dyz_244),
        qd_series("cy", OrbifoldId::P236, cy_236),
        qd_series("cyz2", OrbifoldId::P236, cyz2_236),
        qd_series("cyz4", OrbifoldId::P236, cyz4_236),
        qd_series("cz", OrbifoldId::P236, cz_236),
        qd_series("phi", OrbifoldId::P2222, phi_2222),
        qd_series("psi", OrbifoldId::P2222, psi_2222),
    ]);
    for orb in OrbifoldId::ALL {
        v.push(qd_entry(format!("W@{orb}"), orb, move |p| Ok(Value::Poly(assemble_potential(orb, p)))));
        let sigma = if orb == OrbifoldId::P236 { "sigma3" } else { "sigma" };
        v.push(q_entry(format!("{sigma}@{orb}"), move |p| Ok(syz_map(orb, p)?.series)));
        v.push(q_entry(format!("target@{orb}"), move |p| Ok(inverse_mirror_target(orb, p)?.series)));
        if orb == OrbifoldId::P2222 {
            continue;
        }
        for (i, w) in ["wx", "wy", "wz"].into_iter().enumerate() {
            v.push(qd_entry(format!("{w}@{orb}"), orb, move |p| {
                let c = mf_coefficients(orb, p)?;
                Ok(Value::Poly(c.get(i).clone()))
            }));
        }
        v.push(qd_entry(format!("delta@{orb}"), orb, move |p| Ok(Value::Matrix(delta_matrix(orb, p)?))));
    }
    for i in 1..=6 {
        v.push(q_entry(format!("s236{i}"), move |p| {
            let x = series_236_extras(p.ceil().to_integer());
            let s = [x.s2361, x.s2362, x.s2363, x.s2364, x.s2365, x.s2366].into_iter().nth(i - 1).unwrap();
            Ok(s)
        }));
    }
    let kp2 = |p: Exponent| kp2_suite(p.ceil().to_integer().max(8));
    v.push(q_entry("qt@kp2", move |p| Ok(kp2(p)?.qt_of_qtau.truncate(p))));
    v.push(q_entry("qtau@kp2", move |p| Ok(kp2(p)?.qtau_of_qt.truncate(p))));
    v.push(q_entry("open@kp2", move |p| Ok(kp2(p)?.one_plus_delta.truncate(p))));
    v.sort_by(|a, b| a.name.cmp(&b.name));
    v
}

/// Converts a native value to the requested variable.
fn convert(value: Value, native: Native, var: Var) -> Value {
    let orb = match (native, var) {
        (Native::Qd(orb), Var::Q) => orb,
        _ => return value,
    };
    let f = |s: &Series| qd_to_q(s, orb);
    match value {
        Value::Series(s) => Value::Series(f(&s)),
        Value::Poly(p) => Value::Poly(p.map_coefficients(f)),
        Value::Matrix(m) => Value::Matrix(m.map_entries(|p| p.map_coefficients(f))),
    }
}

fn truncate_value(value: Value, order: Exponent) -> Value {
    let t = |s: &Series| s.truncate_inclusive(order);
    match value {
        Value::Series(s) => Value::Series(t(&s)),
        Value::Poly(p) => Value::Poly(p.map_coefficients(t)),
        Value::Matrix(m) => Value::Matrix(m.map_entries(|p| p.map_coefficients(t))),
    }
}

fn min_precision(value: &Value) -> Option<Exponent> {
    match value {
        Value::Series(s) => Some(s.precision()),
        Value::Poly(p) => p.precision(),
        Value::Matrix(m) => m.precision(),
    }
}

pub fn find_series(name: &str) -> Result<SeriesEntry> {
    series_catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// `name` with every term of exponent `<= order` in the variable `var`.
pub fn expand(name: &str, order: Exponent, var: Var) -> Result<Value> {
    let entry = find_series(name)?;
    let native_order = match (entry.native, var) {
        (Native::Q, Var::Qd) => return Err(Error::NoDiscVariable(name.to_string())),
        (Native::Qd(orb), Var::Q) => order * orb.cover(),
        _ => order,
    };
    if native_order > exp_int(MAX_NATIVE_ORDER) {
        return Err(Error::OrderTooLarge { requested: native_order, limit: MAX_NATIVE_ORDER });
    }
    let value = (entry.build)(native_order.floor() + 1)?;
    let value = convert(value, entry.native, var);
    if let Some(p) = min_precision(&value) {
        if p <= order {
            return Err(Error::BeyondPrecision { exponent: order, precision: p });
        }
    }
    Ok(truncate_value(value, order))
}

/// Monomial name to coefficient, for serialization.
pub fn poly_terms(p: &Poly) -> BTreeMap<String, &Series> {
    p.monomials()
        .map(|(m, c)| (crate::potentials::monomial_name(m, p.nvars()), c))
        .collect()
}
