//! Finite-category engine for family-arrow, Sigma-object and
//! dependent-arrow structures, with exhaustive law checking.

pub mod cat;
pub mod counting;
pub mod error;
pub mod fam;
pub mod instances;
pub mod report;
pub mod ring;
pub mod sigma;
pub mod dep;
pub mod depsigma;

pub use error::{Error, Result};
pub use report::{LawEntry, LawId, LawReport, Status};
