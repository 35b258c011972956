use crate::qseries::Exponent;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate exponent {0} in term list")]
    DuplicateExponent(Exponent),
    #[error("exponent {exponent} is at or beyond the precision O(q^{precision})")]
    BeyondPrecision { exponent: Exponent, precision: Exponent },
    #[error("exponent {exponent} is not representable with unit 1/{unit}")]
    Unrepresentable { exponent: Exponent, unit: i64 },
    #[error("unit must be a positive integer, got {0}")]
    InvalidUnit(i64),
    #[error("series is identically zero to its precision O(q^{0})")]
    ZeroSeries(Exponent),
    #[error("leading coefficient {coefficient} has no rational {degree}-th root")]
    NotRationalRoot { coefficient: String, degree: i64 },
    #[error("inner series must have positive order for composition, got {0}")]
    NonPositiveOrder(Exponent),
    #[error("reversion needs a series of order exactly 1 with integral exponents, got order {0}")]
    NotReversible(Exponent),
    #[error("hypergeometric lower parameter {0} is a non-positive integer")]
    InvalidHypergeometric(String),
    #[error("unsupported Eisenstein weight {0}")]
    UnsupportedWeight(u32),
    #[error("{which} for level {level} is only stored at power {stored}; power {requested} is not available")]
    StoredPower { level: &'static str, which: char, stored: i64, requested: i64 },
    #[error("no candidate argument scaling matches leading exponent {0}")]
    NoScaling(Exponent),
    #[error("order {got} is below the minimum {needed}")]
    OrderTooSmall { needed: i64, got: i64 },
    #[error("order {requested} exceeds the supported limit {limit}")]
    OrderTooLarge { requested: Exponent, limit: i64 },
    #[error("{0:?} is a series in q and has no q_d form")]
    NoDiscVariable(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("malformed series document: {0}")]
    Parse(String),
}
