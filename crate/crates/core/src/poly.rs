//! Sparse multivariate polynomials over an exact field.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{GrevLex, Monomial, Ring};
use crate::scalar::Field;

/// Outcome of [`Polynomial::homogeneous_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, which has no degree.
    Zero,
    Degree(u32),
    NotHomogeneous,
}

#[derive(Clone)]
pub struct Polynomial<K> {
    ring: Arc<Ring>,
    terms: BTreeMap<GrevLex, K>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        debug_assert!(K::supports(&ring.field()));
        Polynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn term(ring: &Arc<Ring>, monomial: Monomial, coeff: K) -> Self {
        assert_eq!(monomial.num_vars(), ring.num_vars());
        let mut p = Polynomial::zero(ring);
        p.add_term(monomial, coeff);
        p
    }

    pub fn constant(ring: &Arc<Ring>, coeff: K) -> Self {
        Polynomial::term(ring, Monomial::one(ring.num_vars()), coeff)
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Polynomial::term(ring, Monomial::var(ring.num_vars(), index, 1), K::one())
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, K)>,
    {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.num_vars(), ring.num_vars());
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (&m.0, c))
    }

    pub fn coefficient(&self, monomial: &Monomial) -> K {
        self.terms
            .get(&GrevLex(monomial.clone()))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    /// The grevlex-largest term.
    pub fn leading_term_grevlex(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back().map(|(m, c)| (&m.0, c))
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        let coeff = coeff.in_field(&self.ring.field());
        match self.terms.entry(GrevLex(monomial)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, monomial: &Monomial) -> Option<K> {
        self.terms.remove(&GrevLex(monomial.clone()))
    }

    /// `self += coeff * monomial * other`.
    pub fn add_scaled(&mut self, coeff: &K, monomial: &Monomial, other: &Polynomial<K>) {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        if coeff.is_zero() {
            return;
        }
        for (m, c) in other.terms() {
            self.add_term(m.mul(monomial), coeff.clone() * c.clone());
        }
    }

    pub fn scale(&self, coeff: &K) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * coeff.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn mul_term(&self, coeff: &K, monomial: &Monomial) -> Self {
        let mut p = Polynomial::zero(&self.ring);
        p.add_scaled(coeff, monomial, self);
        p
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::constant(&self.ring, K::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Largest total degree of any term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0.degree()).max()
    }

    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| m.0.degree());
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::NotHomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.homogeneous_degree(), Homogeneity::NotHomogeneous)
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Result<u32> {
        match self.homogeneous_degree() {
            Homogeneity::Degree(d) => Ok(d),
            Homogeneity::Zero => Err(Error::ZeroPolynomial),
            Homogeneity::NotHomogeneous => Err(Error::NotHomogeneous),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let field = self.ring.field();
        let mut p = Polynomial::zero(&self.ring);
        for (m, c) in self.terms() {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            p.add_term(
                Monomial::new(exps),
                c.clone() * K::from_i64(e as i64, &field),
            );
        }
        p
    }

    /// Exact value at the supplied homogeneous coordinates.
    pub fn evaluate(&self, point: &ProjectivePoint<K>) -> Result<K> {
        self.evaluate_coords(point.coords())
    }

    pub fn evaluate_coords(&self, coords: &[K]) -> Result<K> {
        if coords.len() != self.ring.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.num_vars(),
                actual: coords.len(),
            });
        }
        let mut acc = K::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (x, e) in coords.iter().zip(m.exponents()) {
                if *e > 0 {
                    t = t * num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// `d_x F`: every partial derivative evaluated at the coordinates of `x`,
    /// used exactly as supplied.
    pub fn differential_at(&self, point: &ProjectivePoint<K>) -> Result<Vec<K>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if point.dim() != self.ring.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.num_vars(),
                actual: point.dim(),
            });
        }
        (0..self.ring.num_vars())
            .map(|i| self.partial_derivative(i).evaluate(point))
            .collect()
    }

    pub(crate) fn check_same_ring(&self, other: &Polynomial<K>) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> {}

impl<K: Field> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut p = self.clone();
        for (m, c) in rhs.terms() {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl<K: Field> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut p = self.clone();
        for (m, c) in rhs.terms() {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }
}

impl<K: Field> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut p = Polynomial::zero(&self.ring);
        for (m, c) in self.terms() {
            p.add_scaled(c, m, rhs);
        }
        p
    }
}

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        self.scale(&-K::one())
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    /// Canonical text: terms in descending grevlex order, e.g. `T0*T2 - T1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ring.var_names();
        for (i, (m, c)) in self.terms().enumerate() {
            let (negative, magnitude) = match c.printed_negation() {
                Some(abs) => (true, abs),
                None => (false, c.clone()),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                m.fmt_with(names, f)?;
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// A point `(x_0 : ... : x_N)` of projective space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePoint<K> {
    coords: Vec<K>,
    pivot: usize,
}

impl<K: Field> ProjectivePoint<K> {
    pub fn new(coords: Vec<K>) -> Result<Self> {
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPoint)?;
        Ok(ProjectivePoint { coords, pivot })
    }

    pub fn from_i64(coords: &[i64], ring: &Ring) -> Result<Self> {
        ProjectivePoint::new(coords.iter().map(|c| ring.scalar(*c)).collect())
    }

    pub fn coords(&self) -> &[K] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Smallest index with a nonzero coordinate.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn scaled(&self, lambda: &K) -> Result<Self> {
        ProjectivePoint::new(
            self.coords
                .iter()
                .map(|c| c.clone() * lambda.clone())
                .collect(),
        )
    }

    /// Same point of projective space (coordinates proportional).
    pub fn same_point(&self, other: &ProjectivePoint<K>) -> bool {
        if self.dim() != other.dim() || self.pivot != other.pivot {
            return false;
        }
        let a = &self.coords[self.pivot];
        let b = &other.coords[other.pivot];
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(x, y)| x.clone() * b.clone() == y.clone() * a.clone())
    }

    pub fn check_dim(&self, ring: &Ring) -> Result<()> {
        if self.dim() == ring.num_vars() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: ring.num_vars(),
                actual: self.dim(),
            })
        }
    }
}

impl<K: Field> fmt::Display for ProjectivePoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::{FieldDescriptor, Fp, Rational};
    use num_traits::Zero;

    fn ring4() -> Arc<Ring> {
        Ring::with_standard_names(FieldDescriptor::Rational, 4).unwrap()
    }

    fn p(text: &str, ring: &Arc<Ring>) -> Polynomial<Rational> {
        parse_polynomial(text, ring).unwrap()
    }

    fn pt(c: &[i64], ring: &Ring) -> ProjectivePoint<Rational> {
        ProjectivePoint::from_i64(c, ring).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter()
            .map(|n| Rational::from_integer((*n).into()))
            .collect()
    }

    #[test]
    fn evaluation_examples() {
        let r = ring4();
        let f = p("T0*T2 - T1^2", &r);
        assert!(f.evaluate(&pt(&[1, 1, 1, 1], &r)).unwrap().is_zero());
        assert_eq!(f.evaluate(&pt(&[1, 1, 0, 0], &r)).unwrap(), ints(&[-1])[0]);
        let z = Polynomial::<Rational>::zero(&r);
        assert!(z.evaluate(&pt(&[3, 1, 4, 1], &r)).unwrap().is_zero());
        let bad = ProjectivePoint::from_i64(&[1, 1, 1], &r).unwrap();
        assert!(matches!(
            f.evaluate(&bad),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn differential_examples() {
        let r = ring4();
        let x = pt(&[1, 1, 1, 1], &r);
        assert_eq!(
            p("T0*T2 - T1^2", &r).differential_at(&x).unwrap(),
            ints(&[1, -2, 1, 0])
        );
        assert_eq!(
            p("T0*T3 - T1*T2", &r).differential_at(&x).unwrap(),
            ints(&[1, -1, -1, 1])
        );
        let f = p("T0*T2 - T1^2 + 3*T2*T3", &r);
        let y = pt(&[1, 2, -1, 5], &r);
        let two = Rational::from_integer(2.into());
        let dy = f.differential_at(&y).unwrap();
        let d2y = f.differential_at(&y.scaled(&two).unwrap()).unwrap();
        for (a, b) in dy.iter().zip(&d2y) {
            assert_eq!(a.clone() * two.clone(), b.clone());
        }
        assert_eq!(
            p("T0 + T1^2", &r).differential_at(&x),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring4();
        assert_eq!(
            p("T0*T2 - T1^2", &r).homogeneous_degree(),
            Homogeneity::Degree(2)
        );
        assert_eq!(
            p("T0 + T1^2", &r).homogeneous_degree(),
            Homogeneity::NotHomogeneous
        );
        assert_eq!(p("T0 - T0", &r).homogeneous_degree(), Homogeneity::Zero);
    }

    #[test]
    fn printing_is_grevlex_descending() {
        let r = ring4();
        assert_eq!(p("T0*T2 - T1^2", &r).to_string(), "-T1^2 + T0*T2");
        assert_eq!(
            p("2*(T1+T2)^2", &r).to_string(),
            "2*T1^2 + 4*T1*T2 + 2*T2^2"
        );
        assert_eq!(p("1/2*T0 - 3", &r).to_string(), "1/2*T0 - 3");
        assert_eq!(p("0", &r).to_string(), "0");
    }

    #[test]
    fn prime_field_polynomials() {
        let r = Ring::with_standard_names(FieldDescriptor::Prime(7), 3).unwrap();
        let f: Polynomial<Fp> = parse_polynomial("T0^2 - T1*T2", &r).unwrap();
        assert_eq!(f.to_string(), "T0^2 + 6*T1*T2");
        let x = ProjectivePoint::<Fp>::from_i64(&[3, 1, 2], &r).unwrap();
        assert!(f.evaluate(&x).unwrap().is_zero());
        let d = f.differential_at(&x).unwrap();
        assert_eq!(
            d.iter().map(|c| c.residue()).collect::<Vec<_>>(),
            vec![6, 5, 6]
        );
    }

    #[test]
    fn same_point_is_projective() {
        let r = ring4();
        assert!(pt(&[1, 2, 0, 3], &r).same_point(&pt(&[2, 4, 0, 6], &r)));
        assert!(!pt(&[1, 2, 0, 3], &r).same_point(&pt(&[1, 2, 0, 4], &r)));
        assert_eq!(pt(&[0, 0, 5, 1], &r).pivot(), 2);
        assert!(matches!(
            ProjectivePoint::<Rational>::from_i64(&[0, 0, 0, 0], &r),
            Err(Error::ZeroPoint)
        ));
    }
}
