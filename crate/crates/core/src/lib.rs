//! Exact `(Z2)^n`-graded linear algebra over Clifford algebras: graded trace,
//! quasideterminants, graded determinant, graded Berezinian and the
//! Dieudonné determinant of quaternionic matrices.
//!
//! All arithmetic is over the rationals, so every identity is checked exactly.

pub mod berezinian;
pub mod clifford;
pub mod dieudonne;
pub mod error;
pub mod gdet;
pub mod graded_matrix;
pub mod group;
pub mod json;
pub mod matrix;
pub mod nilpotent;
pub mod properties;
pub mod quasidet;
pub mod random;
pub mod scalar;
pub mod trace;

pub use berezinian::{gber, is_invertible0, liouville_check};
pub use clifford::{quaternion, quaternion_units, Algebra, AlgebraDescriptor, CliffordElement};
pub use dieudonne::{ddet, predeterminant, Ddet};
pub use error::{Error, Result};
pub use gdet::{gdet0, gdet_graded, multilinear_coefficients, Mode, Route};
pub use graded_matrix::{GradedMatrix, RankVector};
pub use group::{GroupElement, StandardOrder};
pub use matrix::Matrix;
pub use nilpotent::NilpotentPoly;
pub use properties::{Property, SuiteConfig, Trial};
pub use quasidet::{quasidet, udl_decompose, Udl};
pub use scalar::Scalar;
pub use trace::gtr;
