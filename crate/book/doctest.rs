//! Runs the guide's code snippets as doc-tests; see the chapters under
//! `src/` for the actual content. One module per chapter so a failure points
//! at the chapter it came from.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
