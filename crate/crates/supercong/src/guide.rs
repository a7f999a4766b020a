//! The book, compiled. Each chapter of `book/src` is included as the
//! documentation of an empty module here, so every code block in the book
//! runs as a doc-test and the prose can never drift from the crate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/sequences.md")]
pub mod sequences {}

#[doc = include_str!("../../../book/src/modular-arithmetic.md")]
pub mod modular_arithmetic {}

#[doc = include_str!("../../../book/src/q-analogues.md")]
pub mod q_analogues {}

#[doc = include_str!("../../../book/src/check-catalog.md")]
pub mod check_catalog {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
