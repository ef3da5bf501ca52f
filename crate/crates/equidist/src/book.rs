//! The mdBook chapters under `book/src` double as doc-tests: each chapter
//! is attached to an empty module here, so `cargo test --doc` compiles and
//! runs every fenced code block. This keeps the guide and the crate in
//! sync by construction.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/equidistant.md")]
pub mod equidistant {}

#[doc = include_str!("../../../book/src/spectra.md")]
pub mod spectra_chapter {}

#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds_chapter {}

#[doc = include_str!("../../../book/src/optimization.md")]
pub mod optimization {}

#[doc = include_str!("../../../book/src/hardness.md")]
pub mod hardness {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
