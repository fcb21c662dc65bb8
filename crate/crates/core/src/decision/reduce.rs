//! The reduction loop: while the system has more generators than the
//! codimension, rewrite it with [`subst_step`]; trivially contained
//! replacements are expanded into their lower-degree pieces, anything else
//! is a certificate that the ideal is not a complete intersection.

use crate::error::{Error, Result};
use crate::groebner::ideal_equal;
use crate::poly::ProjectivePoint;
use crate::scalar::Field;

use super::certificate::{Certificate, Outcome};
use super::criterion::{smoothness_check, trivially_contains};
use super::subst::{subst_step, RewriteOutcome};
use super::{seq_succ, GeneratorSystem};

/// A certificate together with every generating system visited, starting
/// with the input.
#[derive(Debug, Clone)]
pub struct Reduction<K: Field> {
    pub certificate: Certificate<K>,
    pub systems: Vec<GeneratorSystem<K>>,
}

pub fn reduce_to_ci<K: Field>(
    system: &GeneratorSystem<K>,
    x: &ProjectivePoint<K>,
) -> Result<Certificate<K>> {
    reduce_to_ci_with_history(system, x).map(|r| r.certificate)
}

pub fn reduce_to_ci_with_history<K: Field>(
    system: &GeneratorSystem<K>,
    x: &ProjectivePoint<K>,
) -> Result<Reduction<K>> {
    let smoothness = smoothness_check(system, x)?;
    if !smoothness.smooth {
        return Err(Error::NotSmooth {
            rank: smoothness.jacobian_rank,
            codim: smoothness.codim,
        });
    }
    let codim = smoothness.codim;
    let mut current = system.clone();
    let mut trace = vec![current.degree_sequence()];
    let mut systems = vec![current.clone()];

    let finish = |outcome, trace, systems| {
        Ok(Reduction {
            certificate: Certificate {
                input_hash: system.input_hash(),
                field: system.ring().field(),
                var_names: system.ring().var_names().to_vec(),
                codimension: codim,
                point: x.clone(),
                trace,
                outcome,
            },
            systems,
        })
    };

    while current.len() > codim {
        let next = match subst_step(&current, x)? {
            RewriteOutcome::Independent => {
                panic!(
                    "{} independent differentials exceed codimension {codim}",
                    current.len()
                )
            }
            RewriteOutcome::Removed { index, .. } => current.without(index)?,
            RewriteOutcome::Replaced {
                index, new_poly, ..
            } => {
                let swapped = current.splice(index, vec![new_poly.clone()])?;
                let containment = trivially_contains(&swapped, &new_poly)?;
                if !containment.contained {
                    let outcome = Outcome::NotCompleteIntersection {
                        witness: new_poly,
                        truncated: containment.truncated,
                        remainder: containment.remainder,
                    };
                    return finish(outcome, trace, systems);
                }
                let at = swapped
                    .gens()
                    .iter()
                    .position(|g| *g == new_poly)
                    .expect("swapped in");
                swapped.splice(at, containment.psi)?
            }
        };
        let delta = next.degree_sequence();
        let previous = trace.last().expect("nonempty trace");
        assert!(
            seq_succ(previous, &delta),
            "degree sequence failed to decrease: {previous} -> {delta}"
        );
        debug_assert!(ideal_equal(system.ring(), system.gens(), next.gens())?);
        trace.push(delta);
        systems.push(next.clone());
        current = next;
    }
    assert_eq!(
        current.len(),
        codim,
        "fewer generators than the codimension"
    );
    let outcome = Outcome::CompleteIntersection {
        generators: current.gens().to_vec(),
    };
    finish(outcome, trace, systems)
}
