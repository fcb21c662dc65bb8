//! Per-point checks: the Jacobian smoothness test, trivial containment, and
//! the tangent-space containment test.

use crate::error::{Error, Result};
use crate::groebner::projective_dimension;
use crate::groebner::{
    ideal_member, normal_form, reduced_groebner, truncated_generators, MonomialOrder,
};
use crate::linalg::ExactMatrix;
use crate::poly::{Polynomial, ProjectivePoint};
use crate::scalar::Field;

use super::GeneratorSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Smoothness {
    pub codim: usize,
    pub jacobian_rank: usize,
    pub smooth: bool,
}

pub(crate) fn check_on_variety<K: Field>(
    system: &GeneratorSystem<K>,
    x: &ProjectivePoint<K>,
) -> Result<()> {
    x.check_dim(system.ring())?;
    for (index, g) in system.gens().iter().enumerate() {
        if !g.evaluate(x)?.is_zero() {
            return Err(Error::PointNotOnVariety { index });
        }
    }
    Ok(())
}

pub(crate) fn jacobian_rank<K: Field>(
    polys: &[Polynomial<K>],
    x: &ProjectivePoint<K>,
) -> Result<usize> {
    let rows = polys
        .iter()
        .map(|p| p.differential_at(x))
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(ExactMatrix::from_rows(rows)?.rank())
}

/// Codimension `a = N - dim X` of the system's vanishing locus.
pub fn codimension<K: Field>(system: &GeneratorSystem<K>) -> Result<usize> {
    let n = system.ring().num_vars() as i64 - 1;
    let dim = projective_dimension(system.ring(), system.gens())?;
    Ok((n - dim) as usize)
}

/// `x` is smooth when the differentials of the generators at `x` span a
/// space of dimension equal to the codimension. Generators suffice because
/// `d_x(G F) = G(x) d_x F` whenever `F(x) = 0`.
pub fn smoothness_check<K: Field>(
    system: &GeneratorSystem<K>,
    x: &ProjectivePoint<K>,
) -> Result<Smoothness> {
    check_on_variety(system, x)?;
    let codim = codimension(system)?;
    let jacobian_rank = jacobian_rank(system.gens(), x)?;
    Ok(Smoothness {
        codim,
        jacobian_rank,
        smooth: jacobian_rank == codim,
    })
}

/// Evidence for or against `f` being a combination of strictly
/// lower-degree ideal elements.
#[derive(Debug, Clone)]
pub struct TrivialContainment<K: Field> {
    pub contained: bool,
    /// Reduced-basis elements of the ideal of degree below `deg f`.
    pub truncated: Vec<Polynomial<K>>,
    /// When contained: the truncated generators actually used ...
    pub psi: Vec<Polynomial<K>>,
    /// ... and their cofactors, `f = sum cofactors[i] * psi[i]`.
    pub cofactors: Vec<Polynomial<K>>,
    /// When not contained: the nonzero normal form of `f` modulo the
    /// truncated ideal.
    pub remainder: Polynomial<K>,
}

pub fn trivially_contains<K: Field>(
    system: &GeneratorSystem<K>,
    f: &Polynomial<K>,
) -> Result<TrivialContainment<K>> {
    let ring = system.ring();
    if f.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let m = f.degree()?;
    if !ideal_member(f, system.gens())?.is_member {
        return Err(Error::NotAMember);
    }
    let truncated = truncated_generators(ring, system.gens(), m)?;
    let membership = ideal_member(f, &truncated)?;
    match membership.record {
        Some(record) => {
            let (psi, cofactors) = truncated
                .iter()
                .zip(record.quotients)
                .filter(|(_, q)| !q.is_zero())
                .map(|(p, q)| (p.clone(), q))
                .unzip();
            Ok(TrivialContainment {
                contained: true,
                truncated,
                psi,
                cofactors,
                remainder: Polynomial::zero(ring),
            })
        }
        None => {
            let basis = reduced_groebner(ring, &truncated, MonomialOrder::GrevLex)?;
            let remainder = normal_form(f, basis.elements(), MonomialOrder::GrevLex)?.remainder;
            Ok(TrivialContainment {
                contained: false,
                truncated,
                psi: Vec::new(),
                cofactors: Vec::new(),
                remainder,
            })
        }
    }
}

fn check_member_at<K: Field>(
    system: &GeneratorSystem<K>,
    p: &Polynomial<K>,
    x: &ProjectivePoint<K>,
) -> Result<u32> {
    let d = p.degree()?;
    if !ideal_member(p, system.gens())?.is_member {
        return Err(Error::NotAMember);
    }
    debug_assert!(p.evaluate(x)?.is_zero());
    Ok(d)
}

/// Whether the tangent hyperplane of `Z(f)` at `x` contains the
/// intersection of the tangent hyperplanes of the `Z(B_i)`, i.e. whether
/// `d_x f` lies in the span of the `d_x B_i`. With an empty family the
/// intersection is all of projective space and the test becomes `d_x f = 0`.
pub fn check_condition_iv<K: Field>(
    f: &Polynomial<K>,
    family: &[Polynomial<K>],
    x: &ProjectivePoint<K>,
    system: &GeneratorSystem<K>,
) -> Result<bool> {
    check_on_variety(system, x)?;
    let m = check_member_at(system, f, x)?;
    for b in family {
        let d = check_member_at(system, b, x)?;
        if d >= m {
            return Err(Error::DegreeConstraint(format!(
                "family member of degree {d} is not below {m}"
            )));
        }
    }
    let base = jacobian_rank(family, x)?;
    let mut extended = family.to_vec();
    extended.push(f.clone());
    Ok(jacobian_rank(&extended, x)? == base)
}
