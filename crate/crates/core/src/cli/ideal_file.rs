//! The line-oriented `.ideal` input format:
//!
//! ```text
//! # twisted cubic
//! field: q
//! vars: T0 T1 T2 T3
//! point: 1 1 1 1
//! gens:
//! T0*T2 - T1^2
//! T1*T3 - T2^2
//! T0*T3 - T1*T2
//! ```
//!
//! `field` is `q` or `fp <p>`; `point` is optional. Sections appear in this
//! order; `#` starts a comment.

use std::sync::Arc;

use crate::decision::GeneratorSystem;
use crate::error::{Error, Result};
use crate::parse::parse_polynomial;
use crate::poly::ProjectivePoint;
use crate::ring::Ring;
use crate::scalar::{Field, FieldDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub field: FieldDescriptor,
    pub vars: Vec<String>,
    pub point: Option<Vec<String>>,
    /// `(line number, expression)`.
    pub gens: Vec<(usize, String)>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::IdealFile {
        line,
        message: message.into(),
    }
}

/// Splits coordinates on commas and/or whitespace.
pub fn split_coordinates(text: &str) -> Vec<String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<IdealFile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let mut section = |key: &str| -> Result<(usize, String)> {
            match lines.next() {
                Some((n, l)) => match l.split_once(':') {
                    Some((k, v)) if k.trim() == key => Ok((n, v.trim().to_string())),
                    _ => Err(err(n, format!("expected `{key}:`"))),
                },
                None => Err(err(0, format!("missing `{key}:` section"))),
            }
        };

        let (n, field) = section("field")?;
        let field = FieldDescriptor::parse(&field).map_err(|e| err(n, e.to_string()))?;
        let (n, vars) = section("vars")?;
        let vars: Vec<String> = vars.split_whitespace().map(str::to_string).collect();
        if vars.is_empty() {
            return Err(err(n, "no variables declared"));
        }

        let mut point = None;
        let mut gens = Vec::new();
        let mut in_gens = false;
        for (n, l) in lines {
            if in_gens {
                gens.push((n, l.to_string()));
                continue;
            }
            match l.split_once(':') {
                Some((k, v)) if k.trim() == "point" && point.is_none() => {
                    let coords = split_coordinates(v);
                    if coords.len() != vars.len() {
                        return Err(err(
                            n,
                            format!(
                                "point has {} coordinates, expected {}",
                                coords.len(),
                                vars.len()
                            ),
                        ));
                    }
                    point = Some(coords);
                }
                Some((k, v)) if k.trim() == "gens" => {
                    in_gens = true;
                    if !v.trim().is_empty() {
                        gens.push((n, v.trim().to_string()));
                    }
                }
                _ => return Err(err(n, "expected `point:` or `gens:`")),
            }
        }
        if gens.is_empty() {
            return Err(err(0, "at least one generator is required"));
        }
        Ok(IdealFile {
            field,
            vars,
            point,
            gens,
        })
    }

    pub fn ring(&self, field: FieldDescriptor) -> Result<Arc<Ring>> {
        Ring::new(field, &self.vars)
    }

    pub fn system<K: Field>(&self, ring: &Arc<Ring>) -> Result<GeneratorSystem<K>> {
        let gens = self
            .gens
            .iter()
            .map(|(n, g)| parse_polynomial(g, ring).map_err(|e| err(*n, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSystem::new(ring, gens)
    }
}

pub fn parse_point<K: Field>(coords: &[String], ring: &Ring) -> Result<ProjectivePoint<K>> {
    if coords.len() != ring.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: ring.num_vars(),
            actual: coords.len(),
        });
    }
    let coords = coords
        .iter()
        .map(|c| K::parse_exact(c, &ring.field()))
        .collect::<Result<Vec<_>>>()?;
    ProjectivePoint::new(coords)
}
