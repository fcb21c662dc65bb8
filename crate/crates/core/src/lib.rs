//! Certified decisions of whether a homogeneous ideal with a supplied smooth
//! point is generated by codimension-many forms.
//!
//! The core algebra is generic over [`Field`]; [`Rational`] and [`Fp`] are
//! the two shipped scalar types, with matching aliases below.

pub mod cli;
pub mod decision;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use poly::{Homogeneity, Polynomial, ProjectivePoint};
pub use ring::{Monomial, Ring};
pub use scalar::{Field, FieldDescriptor, Fp, Rational};

pub type QPolynomial = Polynomial<Rational>;
pub type FpPolynomial = Polynomial<Fp>;
pub type QPoint = ProjectivePoint<Rational>;
pub type FpPoint = ProjectivePoint<Fp>;
pub type QMatrix = linalg::ExactMatrix<Rational>;
