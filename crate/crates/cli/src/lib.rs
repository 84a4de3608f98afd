//! Front end for `planar-mcg`: a small program language and its runner.

pub mod dsl;
pub mod run;

pub use dsl::{parse, print, ParseError, Program};
pub use run::{render, run, Flags, Format, RunError};
