//! Iterated wreath products `K_{n_1} wr ... wr K_{n_d}` of complete schemes and
//! the structure of their Terwilliger algebras.
//!
//! The pipeline is [`build`] → [`TerwilligerAlgebra::new`](crate::terwilliger::TerwilligerAlgebra::new)
//! → [`g_basis`] → [`f_idempotents`] → the verifiers, bundled by [`structure_report`].

mod blocks;
mod bose;
mod central;
mod check;
mod subconstituents;
mod params;
mod primary;
mod recognize;
mod report;

pub use blocks::{block_form, BlockForm};
pub use bose::verify_bose;
pub use central::{f_idempotents, verify_f, CentralIdempotentSet};
pub use check::{Check, CheckName};
pub use subconstituents::verify_subconstituents;
pub use params::{build, WreathParams};
pub use primary::{g_basis, verify_primary_ideal, PrimaryBasis};
pub use recognize::{recognize, Recognition};
pub use report::{
    structure_report, structure_report_with, Dimensions, ReportOptions, StageTimings, StructureReport,
    TRIPLE_REGULARITY_LIMIT,
};

use crate::scheme::SchemeError;
use crate::terwilliger::TerwilligerError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WreathError {
    #[error("a wreath product needs at least one factor")]
    NoFactors,
    #[error("factor {index} is {value}; every factor must be at least 2")]
    FactorTooSmall { index: usize, value: usize },
    #[error("cannot parse factor {0:?}")]
    BadFactor(String),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Terwilliger(#[from] TerwilligerError),
}
