//! File loading. Parse failures (unreadable files, bad JSON, field values
//! that do not denote an algebra or direction) are input errors; numeric
//! payloads are loaded raw and validated by the commands, so a
//! well-formed file with bad mathematics is a domain error instead.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use forceproof::{AlgebraSignature, ArgumentData, MassData, RelationMode};

use crate::CliError;

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))
}

pub fn load_argument_data(path: &Path) -> Result<ArgumentData, CliError> {
    load_json(path)
}

pub fn load_mass_data(path: &Path) -> Result<MassData, CliError> {
    load_json(path)
}

#[derive(Deserialize)]
pub struct MeasureFile {
    pub algebra: AlgebraSignature,
    pub atom_probs: Vec<f64>,
}

#[derive(Deserialize)]
pub struct MatrixFile {
    pub rows: Vec<Vec<f64>>,
    /// Optional signature; defaults to atoms a1..am.
    #[serde(default)]
    pub domain: Option<AlgebraSignature>,
    /// Optional signature; defaults to atoms b1..bn.
    #[serde(default)]
    pub codomain: Option<AlgebraSignature>,
}

#[derive(Deserialize)]
pub struct RelationFile {
    #[serde(default)]
    pub domain: Option<AlgebraSignature>,
    #[serde(default)]
    pub codomain: Option<AlgebraSignature>,
    /// Atom index pairs (0-based): A CR B iff some pair lands in (A, B).
    #[serde(default)]
    pub atom_pairs: Option<Vec<(usize, usize)>>,
    /// Element bitmask pairs for an explicit relation table.
    #[serde(default)]
    pub pairs: Option<Vec<(usize, usize)>>,
    /// Per-file validation mode; the --relation-mode flag is the fallback.
    #[serde(default)]
    pub mode: Option<RelationMode>,
}

/// Signature from an optional field, else `prefix1..prefixN`.
pub fn signature_or_numbered(
    given: Option<AlgebraSignature>,
    prefix: &str,
    count: usize,
) -> Result<AlgebraSignature, CliError> {
    match given {
        Some(sig) => Ok(sig),
        None => AlgebraSignature::numbered(prefix, count)
            .map_err(|e| CliError::Domain(e.to_string())),
    }
}
