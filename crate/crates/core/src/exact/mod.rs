//! Exact arithmetic substrate: rational scalars, lattice vectors, linear
//! algebra, convex hulls and linear feasibility.

pub mod hull;
pub mod lattice;
pub mod linalg;
pub mod lp;
mod scalar;
mod vector;

pub use hull::{convex_hull, convex_hull_int, Facet, HullResult};
pub use lattice::{kernel_lattice_basis, simplex_volume, KernelChart};
pub use lp::{feasible, feasible_nonnegative, Constraint, Relation};
pub use scalar::Scalar;
pub use vector::{primitive, primitive_from_scalars, IntVector};
