//! Runs the Rust snippets of the guide under `book/src` and the README as doc-tests, so the
//! book cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/schemes.md")]
pub mod schemes {}
#[doc = include_str!("../../../book/src/wreath-products.md")]
pub mod wreath_products {}
#[doc = include_str!("../../../book/src/terwilliger.md")]
pub mod terwilliger {}
#[doc = include_str!("../../../book/src/primary-ideal.md")]
pub mod primary_ideal {}
#[doc = include_str!("../../../book/src/central-idempotents.md")]
pub mod central_idempotents {}
#[doc = include_str!("../../../book/src/recognition.md")]
pub mod recognition {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
