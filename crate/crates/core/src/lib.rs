//! Exact truncated q-series and the modular identities behind open
//! Gromov-Witten potentials of elliptic orbifold projective lines.

pub mod classical;
pub mod error;
pub mod mfactor;
pub mod potentials;
pub mod qseries;
pub mod rational;
pub mod registry;
pub mod report;
pub mod syz;

pub use error::{Error, Result};
pub use qseries::{exp, exp_int, Comparison, Exponent, Mismatch, Series, SeriesDoc};
pub use rational::Q;
