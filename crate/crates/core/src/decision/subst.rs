//! The substitution step: from a linear relation among the differentials
//! of the generators at a common zero, either drop a redundant generator or
//! exchange one for a form of the same degree whose differential vanishes.

use crate::error::Result;
use crate::groebner::QuotientRecord;
use crate::linalg::{linear_relation_polys, ExactMatrix};
use crate::poly::{Polynomial, ProjectivePoint};
use crate::ring::Monomial;
use crate::scalar::Field;

use super::criterion::check_on_variety;
use super::GeneratorSystem;

#[derive(Debug, Clone)]
pub enum RewriteOutcome<K: Field> {
    /// `gens[index]` lies in the ideal of the others. The record's quotients
    /// are aligned with the whole system (zero at `index`) and its remainder
    /// is zero.
    Removed {
        index: usize,
        representation: QuotientRecord<K>,
    },
    /// `gens[index]` may be exchanged for `new_poly` without changing the
    /// ideal; `new_poly = sum cofactors[i] * gens[i]`, `cofactors[i](x) =
    /// relation[i]`, and `d_x new_poly = 0`.
    Replaced {
        index: usize,
        new_poly: Polynomial<K>,
        relation: Vec<K>,
        cofactors: Vec<Polynomial<K>>,
    },
    /// The differentials are linearly independent.
    Independent,
}

pub fn subst_step<K: Field>(
    system: &GeneratorSystem<K>,
    x: &ProjectivePoint<K>,
) -> Result<RewriteOutcome<K>> {
    check_on_variety(system, x)?;
    let ring = system.ring();
    let field = ring.field();
    let gens = system.gens();
    let degrees = system.degrees();
    let r = gens.len();

    let columns = gens
        .iter()
        .map(|g| g.differential_at(x))
        .collect::<Result<Vec<_>>>()?;
    let kernel = ExactMatrix::from_columns(&columns, ring.num_vars())?.kernel_basis();
    let Some(v) = kernel.into_iter().next() else {
        return Ok(RewriteOutcome::Independent);
    };

    // first support coefficient scaled to 1
    let support: Vec<usize> = (0..r).filter(|&i| !v[i].is_zero()).collect();
    let lead = v[support[0]].inverse().expect("support entry is nonzero");
    let relation: Vec<K> = v
        .iter()
        .map(|c| (c.clone() * lead.clone()).in_field(&field))
        .collect();

    let top_degree = support
        .iter()
        .map(|&i| degrees[i])
        .max()
        .expect("nonempty support");
    let top: Vec<usize> = support
        .iter()
        .copied()
        .filter(|&i| degrees[i] == top_degree)
        .collect();

    let block: Vec<Polynomial<K>> = top.iter().map(|&i| gens[i].clone()).collect();
    if let Some(c) = linear_relation_polys(&block)? {
        // solve for the last top-block generator with a nonzero coefficient
        let pos = c
            .iter()
            .rposition(|ci| !ci.is_zero())
            .expect("nonzero relation");
        let index = top[pos];
        let inv = c[pos].inverse().expect("nonzero");
        let mut quotients: Vec<Polynomial<K>> = (0..r).map(|_| Polynomial::zero(ring)).collect();
        for (k, &i) in top.iter().enumerate() {
            if i != index {
                quotients[i] = Polynomial::constant(ring, -(c[k].clone() * inv.clone()));
            }
        }
        return Ok(RewriteOutcome::Removed {
            index,
            representation: QuotientRecord {
                quotients,
                remainder: Polynomial::zero(ring),
            },
        });
    }

    // cofactors lambda_i * (T_k / x_k)^(m - deg F_i), so each evaluates to lambda_i at x
    let k = x.pivot();
    let xk_inv = x.coords()[k]
        .inverse()
        .expect("pivot coordinate is nonzero");
    let mut cofactors: Vec<Polynomial<K>> = (0..r).map(|_| Polynomial::zero(ring)).collect();
    for &i in &support {
        let d = top_degree - degrees[i];
        let coeff = relation[i].clone() * num_traits::pow(xk_inv.clone(), d as usize);
        cofactors[i] = Polynomial::term(ring, Monomial::var(ring.num_vars(), k, d), coeff);
    }
    let mut new_poly = Polynomial::zero(ring);
    for &i in &support {
        new_poly = &new_poly + &(&cofactors[i] * &gens[i]);
    }

    let index = *top.last().expect("nonempty top block");
    if new_poly.is_zero() {
        // gens[index] has the constant cofactor relation[index] != 0
        let inv = relation[index].inverse().expect("nonzero");
        let quotients = (0..r)
            .map(|i| {
                if i == index {
                    Polynomial::zero(ring)
                } else {
                    cofactors[i].scale(&-inv.clone())
                }
            })
            .collect();
        return Ok(RewriteOutcome::Removed {
            index,
            representation: QuotientRecord {
                quotients,
                remainder: Polynomial::zero(ring),
            },
        });
    }

    let dx = new_poly.differential_at(x)?;
    assert!(
        dx.iter().all(|c| c.is_zero()),
        "substituted form has a nonzero differential at the point"
    );
    debug_assert_eq!(new_poly.degree().ok(), Some(top_degree));
    Ok(RewriteOutcome::Replaced {
        index,
        new_poly,
        relation,
        cofactors,
    })
}
