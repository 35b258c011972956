//! Outcome of one identity check, with a deterministic JSON form.

use std::time::Duration;

use serde::Serialize;

use crate::potentials::PolyComparison;
use crate::qseries::{Comparison, Exponent, Mismatch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
    /// No disagreement, but the operands were not known to the requested order.
    Insufficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchInfo {
    pub exponent: String,
    pub lhs: String,
    pub rhs: String,
    /// Monomial, matrix entry or sub-check where the mismatch sits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
}

impl MismatchInfo {
    fn new(m: &Mismatch, at: Option<String>) -> MismatchInfo {
        MismatchInfo {
            exponent: m.exponent.to_string(),
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
            at,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub verified_to: Exponent,
    pub status: Status,
    pub first_mismatch: Option<MismatchInfo>,
    pub note: Option<String>,
    pub runtime: Option<Duration>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    name: &'a str,
    verified_to: String,
    status: Status,
    first_mismatch: &'a Option<MismatchInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: &'a Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<u128>,
}

impl IdentityReport {
    fn build(name: &str, verified_to: Exponent, sufficient: bool, mm: Option<MismatchInfo>) -> Self {
        let status = match (&mm, sufficient) {
            (Some(_), _) => Status::Mismatch,
            (None, true) => Status::Ok,
            (None, false) => Status::Insufficient,
        };
        IdentityReport {
            name: name.to_string(),
            verified_to,
            status,
            first_mismatch: mm,
            note: None,
            runtime: None,
        }
    }

    pub fn from_comparison(name: &str, c: &Comparison) -> IdentityReport {
        let mm = c.first_mismatch.as_ref().map(|m| MismatchInfo::new(m, None));
        IdentityReport::build(name, c.verified_to, c.sufficient, mm)
    }

    pub fn from_poly(name: &str, c: &PolyComparison) -> IdentityReport {
        let mm = c
            .first_mismatch
            .as_ref()
            .map(|(at, m)| MismatchInfo::new(m, Some(at.clone())));
        IdentityReport::build(name, c.verified_to, c.sufficient, mm)
    }

    /// A check with no series comparison behind it, e.g. an exact list match.
    pub fn exact(name: &str, verified_to: Exponent, mismatch: Option<MismatchInfo>) -> IdentityReport {
        IdentityReport::build(name, verified_to, true, mismatch)
    }

    /// Folds named sub-checks into one report. The first mismatching part
    /// wins; otherwise the report is insufficient if any part is.
    pub fn combine(name: &str, parts: Vec<(String, IdentityReport)>) -> IdentityReport {
        let verified_to = parts
            .iter()
            .map(|p| p.1.verified_to)
            .min()
            .unwrap_or_else(|| Exponent::from_integer(0));
        let sufficient = parts.iter().all(|p| p.1.status != Status::Insufficient);
        let mm = parts.iter().find_map(|(label, r)| {
            r.first_mismatch.clone().map(|mut m| {
                m.at = Some(match m.at {
                    Some(inner) => format!("{label}: {inner}"),
                    None => label.clone(),
                });
                m
            })
        });
        IdentityReport::build(name, verified_to, sufficient, mm)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> IdentityReport {
        self.note = Some(note.into());
        self
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// One JSON object on one line. Runtime is included only when asked for,
    /// so default output is byte-identical between runs.
    pub fn to_json(&self, timings: bool) -> String {
        let doc = ReportDoc {
            name: &self.name,
            verified_to: self.verified_to.to_string(),
            status: self.status,
            first_mismatch: &self.first_mismatch,
            note: &self.note,
            runtime_ms: if timings { self.runtime.map(|d| d.as_millis()) } else { None },
        };
        serde_json::to_string(&doc).expect("report serializes")
    }
}
