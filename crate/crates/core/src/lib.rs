//! Exact operator algebra for q-deformed supersymmetric quantum mechanics.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod ground_state;
pub mod laurent;
pub mod operator;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod special;
pub mod spectra;
pub mod susy;

pub use error::{Error, Result};
pub use laurent::QLaurent;
pub use report::{Check, Report, Status};
pub use ring::{Field, Rational, Ring};
pub use scalar::ExactScalar;
pub use series::Series;
