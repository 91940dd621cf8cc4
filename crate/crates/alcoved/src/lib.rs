//! Alcoved polyhedra in `R^3` through exact max-plus matrix algebra.
//!
//! An alcoved polyhedron has facet planes `x_i = c` and `x_i - x_j = c`
//! only. Collecting the constant terms of those planes into an order-4
//! normal idempotent matrix `A` turns geometry into matrix arithmetic: this
//! crate builds the polyhedron `P(A)` exactly, decomposes it into bounding
//! box and perturbation, measures its tropical edge lengths, and computes
//! its quasi-Euclidean class, one of the eight orbits of difference-tuple
//! sign patterns under the symmetry group fixing the polar diagonal.
//!
//! All arithmetic is exact rational; there is no floating point anywhere on
//! the classification path.
//!
//! Entry points:
//! - [`ni::check_ni`] validates a matrix and [`classify::analyze`] runs the
//!   whole pipeline;
//! - [`polytope::AlcovedPolytope::of`] builds the labeled polyhedron;
//! - [`classify::compute_orbits`] enumerates the eight sign-tuple orbits;
//! - [`samples`] holds the canonical reference matrices.
//!
//! ```
//! use alcoved::{classify::analyze, samples};
//!
//! let cube = samples::centered_cube();
//! let report = analyze(&cube).unwrap();
//! assert_eq!(report.shape.f, (8, 12, 6));
//! assert!(report.classification.is_none(), "a box is not maximal");
//!
//! let dodecahedron = samples::class_representative(6);
//! let report = analyze(dodecahedron.as_ni()).unwrap();
//! let class = report.classification.unwrap();
//! assert_eq!(class.qe.to_string(), "QE6");
//! assert_eq!(class.north.to_string(), "(5.5.5) right");
//! ```

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod ni;
pub mod polytope;
pub mod samples;
pub mod trop;

pub use classify::{analyze, Analysis, CaskType, Chirality, ClassifyError, QeClass, SignTuple};
pub use ni::{
    check_ni, BoxMatrix, CantTuple, DifferenceTuple, GroupElement, NiError, NiMatrix,
    PerturbationMatrix, Sign, ViMatrix,
};
pub use polytope::{
    AlcovedPolytope, HalfspaceSystem, Label, Pole, PolytopeError, ShapeDescriptors,
};
pub use trop::{rat, ratio, Point, Rational, TropMatrix, TropScalar};
