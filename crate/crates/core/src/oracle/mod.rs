//! Brute-force recomputation of the closed forms from explicit algebras and
//! representations.

pub mod basic_spin;
pub mod clifford;
pub mod graded_rep;
pub mod multiplicity;
pub mod presentations;
pub mod signed_perm;
pub mod supertensor;
