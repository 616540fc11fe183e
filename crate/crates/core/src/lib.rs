#![allow(clippy::needless_range_loop)]

pub mod dencheck;
pub mod error;
pub mod exmatrix;
pub mod golden;
pub mod laurent;
pub mod repcat;
pub mod seeds;

pub use error::{Error, Result};
pub use exmatrix::{ExchangeMatrix, QuiverClass};
pub use laurent::{DenomVector, LaurentPoly, Monomial};
pub use seeds::{Budget, ClusterVariableRecord, Enumeration, ExchangeEdge, ExchangePairRecord, Seed};
