//! Exact max-plus scalar and matrix arithmetic, 2-minors, and the tropical
//! distance.
//!
//! Everything here is generic in the matrix order; the rest of the crate
//! specialises to order 4. All values are immutable after construction and
//! every operation is a pure function.

mod matrix;
mod point;
mod scalar;

pub use matrix::{MatrixError, TropMatrix};
pub use point::{trop_distance, DimensionMismatch, Point};
pub use scalar::{rat, ratio, Rational, TropScalar};
