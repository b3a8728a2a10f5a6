//! Enumeration, counting, and constructive bijections for sparse
//! Schreier-type sets, restricted integer partitions, and integer
//! compositions.
//!
//! The crate is organized around five modules:
//!
//! - [`setcore`]: the set/multiset types and membership predicates
//! - [`families`]: exhaustive enumerators and counters for the indexed
//!   set families
//! - [`partcomp`]: partition and composition counters with three
//!   independent methods (enumeration, recurrences, series products)
//! - [`bijections`]: the constructive maps between set families and
//!   partition families, with inverses and materialized witnesses
//! - [`verify`]: identity checkers that sweep parameter ranges and compare
//!   independent computation paths, plus golden-table comparisons
//!
//! All counting uses checked 64-bit arithmetic; overflow is an error, never
//! a wraparound.

pub mod bijections;
pub mod error;
pub mod families;
pub mod partcomp;
pub mod setcore;
pub mod verify;

pub use error::{Error, Result};
