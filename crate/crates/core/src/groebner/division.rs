use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Monomial;
use crate::scalar::Field;

use super::MonomialOrder;

/// `dividend = sum quotients[i] * divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRecord<K: Field> {
    pub quotients: Vec<Polynomial<K>>,
    pub remainder: Polynomial<K>,
}

impl<K: Field> QuotientRecord<K> {
    /// `sum quotients[i] * divisors[i] + remainder`.
    pub fn reconstruct(&self, divisors: &[Polynomial<K>]) -> Polynomial<K> {
        assert_eq!(divisors.len(), self.quotients.len());
        let mut acc = self.remainder.clone();
        for (q, d) in self.quotients.iter().zip(divisors) {
            if !q.is_zero() {
                acc = &acc + &(q * d);
            }
        }
        acc
    }

    pub fn is_valid_for(&self, dividend: &Polynomial<K>, divisors: &[Polynomial<K>]) -> bool {
        self.quotients.len() == divisors.len() && &self.reconstruct(divisors) == dividend
    }
}

pub(crate) struct Divisor<'a, K> {
    pub poly: &'a Polynomial<K>,
    pub lead: Monomial,
    pub lead_inv: K,
}

impl<'a, K: Field> Divisor<'a, K> {
    pub fn new(poly: &'a Polynomial<K>, order: MonomialOrder) -> Result<Self> {
        let (m, c) = poly.leading_term(order).ok_or(Error::ZeroPolynomial)?;
        Ok(Divisor {
            poly,
            lead: m.clone(),
            lead_inv: c.inverse().expect("nonzero"),
        })
    }
}

/// Multivariate division. The current leading monomial is reduced by the
/// first divisor whose leading monomial divides it; otherwise it moves to the
/// remainder.
pub(crate) fn divide<K: Field>(
    dividend: &Polynomial<K>,
    divisors: &[Divisor<'_, K>],
    order: MonomialOrder,
    want_quotients: bool,
) -> (Vec<Polynomial<K>>, Polynomial<K>) {
    let ring = dividend.ring();
    let mut quotients: Vec<Polynomial<K>> = if want_quotients {
        divisors.iter().map(|_| Polynomial::zero(ring)).collect()
    } else {
        Vec::new()
    };
    let mut p = dividend.clone();
    let mut remainder = Polynomial::zero(ring);
    while let Some((m, c)) = p.leading_term(order) {
        let (m, c) = (m.clone(), c.clone());
        let hit = divisors
            .iter()
            .enumerate()
            .find_map(|(i, d)| d.lead.quotient_of(&m).map(|t| (i, t)));
        match hit {
            Some((i, t)) => {
                let coeff = c * divisors[i].lead_inv.clone();
                p.add_scaled(&-coeff.clone(), &t, divisors[i].poly);
                debug_assert!(p.coefficient(&m).is_zero());
                if want_quotients {
                    quotients[i].add_term(t, coeff);
                }
            }
            None => {
                p.remove_term(&m);
                remainder.add_term(m, c);
            }
        }
    }
    (quotients, remainder)
}

pub fn normal_form<K: Field>(
    dividend: &Polynomial<K>,
    basis: &[Polynomial<K>],
    order: MonomialOrder,
) -> Result<QuotientRecord<K>> {
    for b in basis {
        dividend.check_same_ring(b)?;
    }
    let divisors = basis
        .iter()
        .map(|b| Divisor::new(b, order))
        .collect::<Result<Vec<_>>>()?;
    let (quotients, remainder) = divide(dividend, &divisors, order, true);
    Ok(QuotientRecord {
        quotients,
        remainder,
    })
}
