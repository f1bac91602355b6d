//! Exact spin fake degrees and graded multiplicities for the spin Weyl group
//! algebras of types B and D and their Hecke–Clifford counterparts.
//!
//! The closed forms live in [`fake_degrees`]; [`oracle`] recomputes the same
//! numbers from explicit representations, and [`verify`] bundles the
//! comparisons into reports.

pub mod characters;
pub mod error;
pub mod fake_degrees;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
