//! Complete-intersection decisions from a smooth point.
//!
//! A generating system with more members than the codimension always has
//! linearly dependent differentials at a smooth point. [`subst_step`] turns
//! such a dependence into either a redundant generator or a form with
//! vanishing differential; [`reduce_to_ci`] repeats this until the system
//! has codimension-many members or a singular, non-trivially contained
//! member shows that none of that size exists. Each round strictly lowers
//! the [`DegreeSequence`] of the system, which bounds the loop.
//!
//! The input ideal is taken to be the full homogeneous ideal of its
//! variety; saturation and radicality are not checked. Over `F_p` the
//! Jacobian rank condition is taken as the definition of smoothness.

mod certificate;
mod criterion;
mod degree_seq;
mod reduce;
mod subst;
mod system;

pub use certificate::{verify_certificate, Certificate, Outcome};
pub use criterion::{
    check_condition_iv, codimension, smoothness_check, trivially_contains, Smoothness,
    TrivialContainment,
};
pub use degree_seq::{seq_succ, DegreeSequence};
pub use reduce::{reduce_to_ci, reduce_to_ci_with_history, Reduction};
pub use subst::{subst_step, RewriteOutcome};
pub use system::{degree_sequence, GeneratorSystem};
