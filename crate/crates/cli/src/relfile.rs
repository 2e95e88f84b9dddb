//! Relation files, either line-oriented text
//!
//! ```text
//! # comment
//! x(0)x(1)x(1) = -x(1)x(1)x(0) ; antipode_duality
//! x(0)x(1) = x(0)x(1)
//! ```
//!
//! or the JSON document written by `relations --out json`.

use polylog_core::literal::parse_poly;
use polylog_core::relations::{Provenance, Relation};
use polylog_core::Error;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// One relation as it appears in JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub lhs: String,
    pub rhs: String,
    pub provenance: String,
    #[serde(default)]
    pub lhs_value: Option<String>,
    #[serde(default)]
    pub rhs_value: Option<String>,
    #[serde(default)]
    pub residual: Option<f64>,
    #[serde(default)]
    pub passed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationDocument {
    pub sigma: Vec<String>,
    pub a: String,
    pub b: String,
    pub relations: Vec<RelationRecord>,
}

/// Relations read from a file, plus the configuration a JSON document names.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationFile {
    pub sigma: Option<(Vec<String>, String, String)>,
    pub relations: Vec<Relation>,
}

fn relation(lhs: &str, rhs: &str, provenance: Option<&str>) -> Result<Relation, Error> {
    let provenance = match provenance {
        Some(p) => p.parse()?,
        None => Provenance::ShuffleRelation,
    };
    Ok(Relation {
        lhs: parse_poly(lhs)?,
        rhs: parse_poly(rhs)?,
        provenance,
        sigma: None,
        regularized: false,
    })
}

fn located(line: usize, offset: usize, e: Error) -> CliError {
    match e {
        Error::Parse { column, message } => {
            CliError::Input(format!("line {line}, column {}: {message}", column + offset))
        }
        other => CliError::Input(format!("line {line}: {other}")),
    }
}

pub fn parse_relation_file(text: &str) -> Result<RelationFile, CliError> {
    if text.trim_start().starts_with('{') {
        let doc: RelationDocument =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("relation file: {e}")))?;
        let relations = doc
            .relations
            .iter()
            .enumerate()
            .map(|(i, r)| {
                relation(&r.lhs, &r.rhs, Some(&r.provenance))
                    .map_err(|e| CliError::Input(format!("relation {}: {e}", i + 1)))
            })
            .collect::<Result<_, _>>()?;
        return Ok(RelationFile {
            sigma: Some((doc.sigma, doc.a, doc.b)),
            relations,
        });
    }

    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let (eq, prov) = match body.split_once(';') {
            Some((eq, p)) => (eq, Some(p.trim())),
            None => (body, None),
        };
        let Some((lhs, rhs)) = eq.split_once('=') else {
            return Err(CliError::Input(format!("line {line}: expected 'lhs = rhs'")));
        };
        let lhs_poly = parse_poly(lhs).map_err(|e| located(line, 0, e))?;
        let rhs_offset = lhs.chars().count() + 1;
        let rhs_poly = parse_poly(rhs).map_err(|e| located(line, rhs_offset, e))?;
        let provenance = match prov {
            Some(p) => p.parse().map_err(|e| located(line, 0, e))?,
            None => Provenance::ShuffleRelation,
        };
        relations.push(Relation {
            lhs: lhs_poly,
            rhs: rhs_poly,
            provenance,
            sigma: None,
            regularized: false,
        });
    }
    Ok(RelationFile { sigma: None, relations })
}
