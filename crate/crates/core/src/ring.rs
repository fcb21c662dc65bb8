use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldDescriptor};

/// The graded ring `k[T_0, ..., T_N]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: FieldDescriptor,
    var_names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(field: FieldDescriptor, var_names: &[S]) -> Result<Arc<Ring>> {
        let var_names: Vec<String> = var_names.iter().map(|s| s.as_ref().to_string()).collect();
        if var_names.len() < 2 {
            return Err(Error::InvalidRing(
                "at least two variables are required".into(),
            ));
        }
        for (i, name) in var_names.iter().enumerate() {
            let mut chars = name.chars();
            let valid = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!(
                    "invalid variable name `{name}`"
                )));
            }
            if var_names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Ring { field, var_names }))
    }

    /// `T0, ..., T{n-1}`.
    pub fn with_standard_names(field: FieldDescriptor, num_vars: usize) -> Result<Arc<Ring>> {
        let names: Vec<String> = (0..num_vars).map(|i| format!("T{i}")).collect();
        Ring::new(field, &names)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    pub fn scalar<K: Field>(&self, n: i64) -> K {
        K::from_i64(n, &self.field)
    }
}

/// Exponent vector of a monomial `T_0^{e_0} ... T_N^{e_N}`.
///
/// The derived `Ord` is NOT a monomial order; use [`Monomial::cmp_grevlex`]
/// or a [`crate::groebner::MonomialOrder`]. Polynomials key their terms by
/// the graded reverse lexicographic order through [`GrevLex`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables occurring with positive exponent, as a bit mask.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Graded reverse lexicographic comparison with `T_0 > T_1 > ... > T_N`.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    /// Lexicographic comparison with `T_0 > T_1 > ... > T_N`.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub(crate) fn fmt_with(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, e) in names.iter().zip(&self.0) {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Orders map keys by grevlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrevLex(pub Monomial);

impl Ord for GrevLex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_grevlex(&other.0)
    }
}

impl PartialOrd for GrevLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
