//! The guide in `book/src`, one module per chapter, so that `cargo test --doc`
//! runs every snippet. Build the HTML with `mdbook build book`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/presentations.md")]
pub mod presentations {}
#[doc = include_str!("../../../book/src/commutator-sets.md")]
pub mod commutator_sets {}
#[doc = include_str!("../../../book/src/bilinear-models.md")]
pub mod bilinear_models {}
#[doc = include_str!("../../../book/src/catalog.md")]
pub mod catalog {}
#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}
#[doc = include_str!("../../../book/src/reports-and-cli.md")]
pub mod reports_and_cli {}
