//! Named series and the identity catalog, with a deterministic parallel runner.

mod checks;
mod series;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qseries::Exponent;
use crate::report::IdentityReport;

pub use checks::{check_catalog, Check};
pub use series::{
    expand, find_series, poly_terms, series_catalog, Native, SeriesEntry, Value, Var,
    MAX_NATIVE_ORDER,
};

/// Checks whose names match the glob `filter`, in name order.
pub fn select_checks(filter: &str) -> Result<Vec<Check>> {
    let pat = glob::Pattern::new(filter).map_err(|e| Error::Parse(format!("bad pattern {filter:?}: {e}")))?;
    let v: Vec<Check> = check_catalog().into_iter().filter(|c| pat.matches(&c.name)).collect();
    if v.is_empty() {
        return Err(Error::UnknownName(filter.to_string()));
    }
    Ok(v)
}

/// Runs every check matching `filter` on `jobs` threads. `order`, when
/// given, replaces each check's default and is read in the check's own
/// variable. Reports come back sorted by name whatever `jobs` is.
pub fn run_registry(filter: &str, order: Option<Exponent>, jobs: usize) -> Result<Vec<IdentityReport>> {
    let checks = select_checks(filter)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let mut reports: Vec<IdentityReport> =
        pool.install(|| checks.par_iter().map(|c| c.run(order)).collect());
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

#[cfg(test)]
mod tests;
