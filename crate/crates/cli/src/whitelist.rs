//! Known-discrepancy whitelist.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

const BUILTIN: &str = include_str!("../config/discrepancies.toml");

#[derive(Debug, Error)]
pub enum WhitelistError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parsing whitelist: {0}")]
    Parse(#[from] toml::de::Error),
}

#[derive(Debug, Deserialize)]
struct Entry {
    id: String,
    note: String,
}

#[derive(Debug, Deserialize)]
struct File {
    #[serde(default)]
    discrepancy: Vec<Entry>,
}

/// Claim id to note.
#[derive(Debug, Clone, Default)]
pub struct Whitelist(BTreeMap<String, String>);

impl Whitelist {
    pub fn parse(text: &str) -> Result<Self, WhitelistError> {
        let file: File = toml::from_str(text)?;
        Ok(Self(file.discrepancy.into_iter().map(|e| (e.id, e.note)).collect()))
    }

    /// The whitelist shipped with the binary.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled whitelist parses")
    }

    pub fn load(path: &Path) -> Result<Self, WhitelistError> {
        let text = std::fs::read_to_string(path).map_err(|source| WhitelistError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains_key(id)
    }

    pub fn note(&self, id: &str) -> Option<&str> {
        self.0.get(id).map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_lists_only_the_collision_error() {
        let w = Whitelist::builtin();
        assert!(w.contains("COLL-ERR"));
        assert!(!w.contains("QQT-I3"));
        assert!(w.note("COLL-ERR").unwrap().contains("1/36"));
    }

    #[test]
    fn empty_file_is_empty_whitelist() {
        assert!(!Whitelist::parse("").unwrap().contains("COLL-ERR"));
    }
}
