//! Exact-arithmetic verification of the special fibers of the moduli stacks of
//! elliptic curves with a cyclic subgroup of order 2 or 3.
//!
//! The library computes, over prime fields `F_p` (p >= 5) and their extensions:
//!
//! - torsion subgroups via division polynomials, cross-checked against the
//!   group law ([`curve`]);
//! - level structures of order 2 and 3, their automorphism stabilizers, and
//!   the character through which a stabilizer acts on the invariant
//!   differential ([`level`]);
//! - the weight-graded polynomial identities behind the discriminant
//!   factorization and the trivializations of the fourth and sixth tensor
//!   powers of the Hodge bundle ([`symbolic`]);
//! - exhaustive scans over all curve models of a finite field, classifying
//!   every (curve, structure) pair by stabilizer order and certifying the
//!   isomorphism class of the exceptional locus ([`scan`]).
//!
//! The `gamma0` binary exposes all of this behind a CLI; see the crate README.

pub mod checks;
pub mod curve;
pub mod error;
pub mod field;
pub mod level;
pub mod report;
pub mod scan;
pub mod symbolic;

pub use crate::error::Error;
pub use crate::field::{Field, FieldElement, UniPoly};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
