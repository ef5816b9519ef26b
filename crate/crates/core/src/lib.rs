//! Exact symmetric-function algebra for the characteristic map of
//! `GL(2n,q)/Sp(2n,q)`.

pub mod cache;
pub mod charmap;
pub mod error;
pub mod macdonald;
pub mod partitions;
pub mod positivity;
pub mod ratfunc;
pub mod spherical;
pub mod symfunc;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use ratfunc::RatQT;
pub use symfunc::{Binding, FamilyLabel, SymFunc};
