use crate::error::{Error, Result};
use crate::groebner::{
    ideal_equal, ideal_member, normal_form, reduced_groebner, truncated_generators, MonomialOrder,
};
use crate::poly::{Polynomial, ProjectivePoint};
use crate::scalar::{Field, FieldDescriptor};

use super::criterion::{jacobian_rank, smoothness_check, trivially_contains};
use super::{seq_succ, DegreeSequence, GeneratorSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<K: Field> {
    /// Codimension-many forms generating the input ideal.
    CompleteIntersection { generators: Vec<Polynomial<K>> },
    /// An ideal member singular at the point that is not a combination of
    /// lower-degree members. `truncated` generates the lower-degree part of
    /// the ideal and `remainder` is the witness's nonzero normal form
    /// modulo it.
    NotCompleteIntersection {
        witness: Polynomial<K>,
        truncated: Vec<Polynomial<K>>,
        remainder: Polynomial<K>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<K: Field> {
    pub input_hash: String,
    pub field: FieldDescriptor,
    pub var_names: Vec<String>,
    pub codimension: usize,
    pub point: ProjectivePoint<K>,
    /// Degree sequences of the successive generating systems.
    pub trace: Vec<DegreeSequence>,
    pub outcome: Outcome<K>,
}

impl<K: Field> Certificate<K> {
    pub fn is_complete_intersection(&self) -> bool {
        matches!(self.outcome, Outcome::CompleteIntersection { .. })
    }
}

/// Re-checks a certificate against the input from scratch. A certificate
/// for a different input is an error; any failed check yields `Ok(false)`.
pub fn verify_certificate<K: Field>(
    cert: &Certificate<K>,
    system: &GeneratorSystem<K>,
    x: &ProjectivePoint<K>,
) -> Result<bool> {
    if cert.input_hash != system.input_hash() {
        return Err(Error::HashMismatch);
    }
    if cert.field != system.ring().field() || cert.var_names != system.ring().var_names() {
        return Ok(false);
    }
    if !cert.point.same_point(x) {
        return Ok(false);
    }
    let smooth = match smoothness_check(system, x) {
        Ok(s) => s,
        Err(Error::PointNotOnVariety { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    if !smooth.smooth || smooth.codim != cert.codimension {
        return Ok(false);
    }
    if cert.trace.first() != Some(&system.degree_sequence())
        || cert.trace.windows(2).any(|w| !seq_succ(&w[0], &w[1]))
    {
        return Ok(false);
    }
    let ring = system.ring();
    match &cert.outcome {
        Outcome::CompleteIntersection { generators } => {
            if generators.len() != cert.codimension
                || generators
                    .iter()
                    .any(|g| g.ring() != ring || g.degree().is_err())
            {
                return Ok(false);
            }
            let final_system = GeneratorSystem::new(ring, generators.clone())?;
            if final_system.len() != generators.len()
                || cert.trace.last() != Some(&final_system.degree_sequence())
            {
                return Ok(false);
            }
            if jacobian_rank(generators, x)? != cert.codimension {
                return Ok(false);
            }
            ideal_equal(ring, generators, system.gens())
        }
        Outcome::NotCompleteIntersection {
            witness,
            truncated,
            remainder,
        } => {
            if witness.ring() != ring {
                return Ok(false);
            }
            let Ok(m) = witness.degree() else {
                return Ok(false);
            };
            if !ideal_member(witness, system.gens())?.is_member {
                return Ok(false);
            }
            if !witness.evaluate(x)?.is_zero()
                || witness.differential_at(x)?.iter().any(|c| !c.is_zero())
            {
                return Ok(false);
            }
            if trivially_contains(system, witness)?.contained {
                return Ok(false);
            }
            if truncated_generators(ring, system.gens(), m)? != *truncated {
                return Ok(false);
            }
            let basis = reduced_groebner(ring, truncated, MonomialOrder::GrevLex)?;
            let nf = normal_form(witness, basis.elements(), MonomialOrder::GrevLex)?.remainder;
            Ok(!nf.is_zero() && nf == *remainder)
        }
    }
}
