//! The guide's chapters, included as documentation so that their Rust
//! snippets run as doc-tests.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}

#[doc = include_str!("../../../book/src/run-length.md")]
pub mod run_length {}

#[doc = include_str!("../../../book/src/smooth-words.md")]
pub mod smooth_words {}

#[doc = include_str!("../../../book/src/lyndon.md")]
pub mod lyndon {}

#[doc = include_str!("../../../book/src/characterization.md")]
pub mod characterization {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
