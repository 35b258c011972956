//! Stable JSON form of a series.

use serde::{Deserialize, Serialize};

use super::Series;
use crate::error::{Error, Result};
use crate::rational::parse_q;

/// `{"unit": M, "precision": P, "terms": [[k, "n/d"], ...]}` with exponents `k/M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub unit: i64,
    pub precision: i64,
    pub terms: Vec<(i64, String)>,
}

impl From<&Series> for SeriesDoc {
    fn from(s: &Series) -> Self {
        SeriesDoc {
            unit: s.unit,
            precision: s.precision,
            terms: s.terms.iter().map(|(k, c)| (*k, c.to_string())).collect(),
        }
    }
}

impl TryFrom<SeriesDoc> for Series {
    type Error = Error;

    fn try_from(doc: SeriesDoc) -> Result<Series> {
        let terms = doc
            .terms
            .into_iter()
            .map(|(k, c)| parse_q(&c).map(|c| (k, c)))
            .collect::<Result<Vec<_>>>()?;
        Series::from_terms(doc.unit, terms, doc.precision)
    }
}

impl Series {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeriesDoc::from(self)).expect("series serializes")
    }

    pub fn from_json(text: &str) -> Result<Series> {
        let doc: SeriesDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Series::try_from(doc)
    }
}
