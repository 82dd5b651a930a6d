//! Exact computations in Bose-Mesner and Terwilliger algebras of symmetric
//! association schemes, with a full structural treatment of iterated wreath
//! products `K_{n_1} wr K_{n_2} wr ... wr K_{n_d}` of complete schemes.
//!
//! All arithmetic is over the rationals, so every identity is checked exactly.
//!
//! ```
//! use wreath_algebra::wreath::{structure_report, WreathParams};
//!
//! let params: WreathParams = "3,3".parse()?;
//! let report = structure_report(&params, 0)?;
//! assert_eq!(report.dims.t, 12);
//! assert_eq!(report.dims.center, 4);
//! assert!(report.all_passed());
//! # Ok::<(), wreath_algebra::wreath::WreathError>(())
//! ```

pub mod linalg;
pub mod scheme;
pub mod terwilliger;
pub mod wreath;

pub use linalg::{ExactMatrix, Rational};
pub use scheme::AssociationScheme;
pub use terwilliger::TerwilligerAlgebra;
pub use wreath::{StructureReport, WreathParams};
