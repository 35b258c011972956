//! JSON and table output for expanded values and reports.

use std::collections::BTreeMap;
use std::fmt::Write;

use modq::mfactor::{ExtMatrix, BASIS_LABELS};
use modq::potentials::Poly;
use modq::registry::{poly_terms, Value};
use modq::report::{IdentityReport, Status};
use modq::{Exponent, Series, SeriesDoc};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Serialize)]
struct EntryDoc {
    target: &'static str,
    source: &'static str,
    monomials: BTreeMap<String, SeriesDoc>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Body {
    Series(SeriesDoc),
    Poly { monomials: BTreeMap<String, SeriesDoc> },
    Matrix { basis: Vec<&'static str>, entries: Vec<EntryDoc> },
}

#[derive(Serialize)]
struct ExpandDoc<'a> {
    name: &'a str,
    variable: &'a str,
    order: String,
    #[serde(flatten)]
    body: Body,
}

fn poly_docs(p: &Poly) -> BTreeMap<String, SeriesDoc> {
    poly_terms(p).into_iter().map(|(m, s)| (m, SeriesDoc::from(s))).collect()
}

/// Nonzero entries of a matrix as (target, source, entry).
fn nonzero(m: &ExtMatrix) -> impl Iterator<Item = (usize, usize, &Poly)> {
    (0..8).flat_map(move |t| (0..8).map(move |s| (t, s, m.entry(t, s)))).filter(|e| !e.2.is_empty())
}

pub fn expand_json(name: &str, variable: &str, order: Exponent, value: &Value) -> String {
    let body = match value {
        Value::Series(s) => Body::Series(SeriesDoc::from(s)),
        Value::Poly(p) => Body::Poly { monomials: poly_docs(p) },
        Value::Matrix(m) => Body::Matrix {
            basis: BASIS_LABELS.to_vec(),
            entries: nonzero(m)
                .map(|(t, s, p)| EntryDoc { target: BASIS_LABELS[t], source: BASIS_LABELS[s], monomials: poly_docs(p) })
                .collect(),
        },
    };
    let doc = ExpandDoc { name, variable, order: order.to_string(), body };
    let mut out = serde_json::to_string(&doc).expect("document serializes");
    out.push('\n');
    out
}

fn series_rows(out: &mut String, s: &Series, indent: &str) {
    let rows: Vec<(String, String)> = s.terms().map(|(e, c)| (e.to_string(), c.to_string())).collect();
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    for (e, c) in rows {
        writeln!(out, "{indent}{e:>w$}  {c}").unwrap();
    }
    writeln!(out, "{indent}O({})", s.precision()).unwrap();
}

fn poly_rows(out: &mut String, p: &Poly, indent: &str) {
    for (m, s) in poly_terms(p) {
        writeln!(out, "{indent}[{m}]").unwrap();
        series_rows(out, s, &format!("{indent}  "));
    }
}

pub fn expand_table(name: &str, variable: &str, order: Exponent, value: &Value) -> String {
    let mut out = String::new();
    writeln!(out, "{name} in {variable}, exponents <= {order}").unwrap();
    match value {
        Value::Series(s) => series_rows(&mut out, s, "  "),
        Value::Poly(p) => poly_rows(&mut out, p, "  "),
        Value::Matrix(m) => {
            for (t, s, p) in nonzero(m) {
                writeln!(out, "  {} <- {}", BASIS_LABELS[t], BASIS_LABELS[s]).unwrap();
                poly_rows(&mut out, p, "    ");
            }
        }
    }
    out
}

pub fn report_table(reports: &[IdentityReport], timings: bool) -> String {
    let w = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            Status::Ok => "ok",
            Status::Mismatch => "MISMATCH",
            Status::Insufficient => "insufficient",
        };
        write!(out, "{:<12} {:<w$}  to {}", status, r.name, r.verified_to).unwrap();
        if let Some(m) = &r.first_mismatch {
            write!(out, "  first at {}: {} vs {}", m.exponent, m.lhs, m.rhs).unwrap();
            if let Some(at) = &m.at {
                write!(out, " ({at})").unwrap();
            }
        }
        if let Some(n) = &r.note {
            write!(out, "  [{n}]").unwrap();
        }
        if let (true, Some(t)) = (timings, r.runtime) {
            write!(out, "  {} ms", t.as_millis()).unwrap();
        }
        out.push('\n');
    }
    out
}
