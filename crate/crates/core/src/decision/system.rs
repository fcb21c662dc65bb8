use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::Field;

use super::DegreeSequence;

/// A nonempty list of distinct nonzero forms, read as generators of the
/// ideal of a projective variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSystem<K: Field> {
    ring: Arc<Ring>,
    gens: Vec<Polynomial<K>>,
    degrees: Vec<u32>,
}

impl<K: Field> GeneratorSystem<K> {
    /// Drops zero polynomials and exact duplicates (keeping the first
    /// occurrence); rejects non-homogeneous or constant generators.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial<K>>) -> Result<Self> {
        let mut kept: Vec<Polynomial<K>> = Vec::with_capacity(gens.len());
        let mut degrees = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() || kept.contains(&g) {
                continue;
            }
            let d = g.degree()?;
            if d == 0 {
                return Err(Error::ImproperIdeal);
            }
            degrees.push(d);
            kept.push(g);
        }
        if kept.is_empty() {
            return Err(Error::EmptySystem);
        }
        Ok(GeneratorSystem {
            ring: Arc::clone(ring),
            gens: kept,
            degrees,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees.iter().copied())
    }

    /// SHA-256 over the field, the variable names and the canonical text of
    /// each generator, in order.
    pub fn input_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("field: {}\n", self.ring.field()));
        h.update(format!("vars: {}\n", self.ring.var_names().join(" ")));
        for g in &self.gens {
            h.update(format!("{g}\n"));
        }
        format!("sha256:{}", hex::encode(h.finalize()))
    }

    pub(crate) fn without(&self, index: usize) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.remove(index);
        GeneratorSystem::new(&self.ring, gens)
    }

    pub(crate) fn splice(&self, index: usize, replacement: Vec<Polynomial<K>>) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.splice(index..=index, replacement);
        GeneratorSystem::new(&self.ring, gens)
    }
}

/// `degree_sequence(G)_i` is the number of generators of degree `i`.
pub fn degree_sequence<K: Field>(system: &GeneratorSystem<K>) -> DegreeSequence {
    system.degree_sequence()
}
