//! JSON certificate documents. Scalars are written as `num/den` over Q and
//! as residues over `F_p`; polynomials in their canonical printed form.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::decision::{Certificate, DegreeSequence, Outcome};
use crate::error::{Error, Result};
use crate::parse::parse_polynomial;
use crate::poly::{Polynomial, ProjectivePoint};
use crate::ring::Ring;
use crate::scalar::{Field, FieldDescriptor};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub format_version: u32,
    pub input_hash: String,
    pub field: String,
    pub vars: Vec<String>,
    pub codimension: usize,
    pub point: Vec<String>,
    pub trace: Vec<Vec<usize>>,
    #[serde(flatten)]
    pub outcome: OutcomeDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum OutcomeDocument {
    Ci {
        final_generators: Vec<String>,
    },
    NonCi {
        witness: String,
        witness_degree: u32,
        truncated_generators: Vec<String>,
        witness_remainder: String,
    },
}

fn texts<K: Field>(polys: &[Polynomial<K>]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

impl CertificateDocument {
    pub fn from_certificate<K: Field>(cert: &Certificate<K>) -> Self {
        let outcome = match &cert.outcome {
            Outcome::CompleteIntersection { generators } => OutcomeDocument::Ci {
                final_generators: texts(generators),
            },
            Outcome::NotCompleteIntersection {
                witness,
                truncated,
                remainder,
            } => OutcomeDocument::NonCi {
                witness: witness.to_string(),
                witness_degree: witness.total_degree().unwrap_or(0),
                truncated_generators: texts(truncated),
                witness_remainder: remainder.to_string(),
            },
        };
        CertificateDocument {
            format_version: FORMAT_VERSION,
            input_hash: cert.input_hash.clone(),
            field: cert.field.to_string(),
            vars: cert.var_names.clone(),
            codimension: cert.codimension,
            point: cert
                .point
                .coords()
                .iter()
                .map(|c| c.clone().in_field(&cert.field).to_exact_string())
                .collect(),
            trace: cert.trace.iter().map(|d| d.counts().to_vec()).collect(),
            outcome,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertificateDocument =
            serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Certificate(format!(
                "unsupported format_version {}",
                doc.format_version
            )));
        }
        Ok(doc)
    }

    pub fn field_descriptor(&self) -> Result<FieldDescriptor> {
        FieldDescriptor::parse(&self.field).map_err(|e| Error::Certificate(e.to_string()))
    }

    /// Rebuilds the certificate in `ring`, which must match the document's
    /// field and variables.
    pub fn to_certificate<K: Field>(&self, ring: &Arc<Ring>) -> Result<Certificate<K>> {
        let field = self.field_descriptor()?;
        if field != ring.field() || self.vars != ring.var_names() {
            return Err(Error::Certificate(
                "field or variables do not match the input".into(),
            ));
        }
        let poly = |t: &String| -> Result<Polynomial<K>> {
            parse_polynomial(t, ring).map_err(|e| Error::Certificate(format!("`{t}`: {e}")))
        };
        let polys = |ts: &[String]| ts.iter().map(poly).collect::<Result<Vec<_>>>();
        let coords = self
            .point
            .iter()
            .map(|c| K::parse_exact(c, &field))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Certificate(e.to_string()))?;
        let point = ProjectivePoint::new(coords).map_err(|e| Error::Certificate(e.to_string()))?;
        let outcome = match &self.outcome {
            OutcomeDocument::Ci { final_generators } => Outcome::CompleteIntersection {
                generators: polys(final_generators)?,
            },
            OutcomeDocument::NonCi {
                witness,
                witness_degree,
                truncated_generators,
                witness_remainder,
            } => {
                let witness = poly(witness)?;
                if witness.total_degree() != Some(*witness_degree) {
                    return Err(Error::Certificate(
                        "witness_degree does not match witness".into(),
                    ));
                }
                Outcome::NotCompleteIntersection {
                    witness,
                    truncated: polys(truncated_generators)?,
                    remainder: poly(witness_remainder)?,
                }
            }
        };
        Ok(Certificate {
            input_hash: self.input_hash.clone(),
            field,
            var_names: self.vars.clone(),
            codimension: self.codimension,
            point,
            trace: self
                .trace
                .iter()
                .cloned()
                .map(DegreeSequence::from_counts)
                .collect(),
            outcome,
        })
    }
}

pub fn certificate_to_json<K: Field>(cert: &Certificate<K>) -> String {
    CertificateDocument::from_certificate(cert).to_json()
}

pub fn certificate_from_json<K: Field>(text: &str, ring: &Arc<Ring>) -> Result<Certificate<K>> {
    CertificateDocument::from_json(text)?.to_certificate(ring)
}
