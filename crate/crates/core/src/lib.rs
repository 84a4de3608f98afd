//! Exact computation in mapping class groups of disks with holes.

pub mod archive;
pub mod error;
pub mod factorization;
pub mod filling;
pub mod mcg;
pub mod pa_cert;
pub mod search;
pub mod word;

pub use error::{Error, Result};
pub use mcg::{BraidGen, BraidLetter, BraidWord, Curve, MappingClass};
pub use word::{conjugacy_equal, CyclicWord, Letter, Word};
