//! Exact lattice volumes, mixed volumes and relative mixed volumes of lattice
//! polyhedra whose recession cone is the positive orthant, together with
//! checkers for the classification of tuples of small relative mixed volume.
//!
//! The arithmetic substrate in [`exact`] is generic over an exact ordered
//! field ([`Scalar`]); the geometry built on top of it works over [`Rat`].

pub mod classify;
pub mod document;
pub mod error;
pub mod exact;
pub mod interlace;
pub mod orthant;
pub mod polytope;
pub mod relmv;

pub use error::{Error, Result};
pub use exact::{IntVector, Scalar};

/// Arbitrary-precision rational, the scalar of every geometric computation.
pub type Rat = num_rational::BigRational;
/// Machine rational; adequate for small hulls and feasibility checks.
pub type Rat64 = num_rational::Rational64;
pub type Hull = exact::HullResult<Rat>;
