//! The book's chapters, one module each, so `cargo test --doc` runs their
//! code blocks.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/conventions.md")]
pub mod conventions {}
#[doc = include_str!("../../../book/src/arithmetic.md")]
pub mod arithmetic {}
#[doc = include_str!("../../../book/src/reptheory.md")]
pub mod reptheory {}
#[doc = include_str!("../../../book/src/linf.md")]
pub mod linf {}
#[doc = include_str!("../../../book/src/e510.md")]
pub mod e510 {}
#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
