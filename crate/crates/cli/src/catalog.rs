//! Group catalog files.
//!
//! ```json
//! {"groups": [{"name": "C12", "kind": "cyclic", "params": {"n": 12}}]}
//! ```

use std::collections::HashSet;
use std::path::Path;

use edim_core::GroupSpec;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate group name {0:?}")]
    DuplicateName(String),
    #[error("invalid spec for {name:?}: {message}")]
    InvalidSpec { name: String, message: String },
}

impl CatalogError {
    pub fn tag(&self) -> &'static str {
        match self {
            CatalogError::Io { .. } => "Io",
            CatalogError::ParseError { .. } => "ParseError",
            CatalogError::DuplicateName(_) => "DuplicateName",
            CatalogError::InvalidSpec { .. } => "InvalidSpec",
        }
    }
}

#[derive(Deserialize)]
struct RawCatalog {
    groups: Vec<RawEntry>,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    kind: String,
    #[serde(default)]
    params: serde_json::Value,
}

pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_catalog(&text)
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let raw: RawCatalog = serde_json::from_str(text).map_err(|e| CatalogError::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut seen = HashSet::new();
    let mut entries = Vec::with_capacity(raw.groups.len());
    for entry in raw.groups {
        if !seen.insert(entry.name.clone()) {
            return Err(CatalogError::DuplicateName(entry.name));
        }
        let invalid = |message: String| CatalogError::InvalidSpec {
            name: entry.name.clone(),
            message,
        };
        let tagged = serde_json::json!({"kind": entry.kind, "params": entry.params});
        let spec: GroupSpec = serde_json::from_value(tagged).map_err(|e| invalid(e.to_string()))?;
        spec.validate().map_err(|e| invalid(e.to_string()))?;
        entries.push(CatalogEntry {
            name: entry.name,
            spec,
        });
    }
    Ok(entries)
}
