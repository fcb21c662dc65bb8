use std::cmp::Ordering;

use crate::poly::Polynomial;
use crate::ring::Monomial;
use crate::scalar::Field;

/// Monomial order with variable precedence `T_0 > T_1 > ... > T_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

impl<K: Field> Polynomial<K> {
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &K)> {
        match order {
            MonomialOrder::GrevLex => self.leading_term_grevlex(),
            MonomialOrder::Lex => self.terms().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial<K> {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }
}
