use crate::complex::{format_complex, parse_complex};
use modxi::identities::{Budgets, IdentityId};
use modxi::C64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A complex value written as "a+bi" in config files.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZValue(pub C64);

impl Serialize for ZValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_complex(self.0))
    }
}

impl<'de> Deserialize<'de> for ZValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(ZValue(C64::new(v, 0.0))),
            Raw::Text(t) => parse_complex(&t).map(ZValue).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub id: IdentityId,
    /// Empty means the identity's default α.
    #[serde(default)]
    pub alpha: Vec<f64>,
    /// Empty means the identity's default z.
    #[serde(default)]
    pub z: Vec<ZValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    #[serde(default)]
    pub budgets: Budgets,
    #[serde(default)]
    pub entries: Vec<Entry>,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed config {path}: {source}")]
    Parse { path: PathBuf, source: toml::de::Error },
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.into(), source })?;
        Self::from_toml(&text).map_err(|source| ConfigError::Parse { path: path.into(), source })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
format = "csv"
jobs = 2

[budgets]
max_panels = 4000
max_intervals = 400

[[entries]]
id = "JACOBI"
alpha = [1.0, 1.5]

[[entries]]
id = "GUINAND"
alpha = [1.25]
z = ["0.3", 0.5, "0.2-0.1i"]
tol = 1e-10
"#;

    #[test]
    fn parses_and_round_trips() {
        let c = SuiteConfig::from_toml(SAMPLE).unwrap();
        assert_eq!(c.format, Format::Csv);
        assert_eq!(c.entries.len(), 2);
        assert_eq!(c.entries[1].z[2].0, C64::new(0.2, -0.1));
        let again = SuiteConfig::from_toml(&c.to_toml()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn rejects_unknown_ids_and_keys() {
        assert!(SuiteConfig::from_toml("[[entries]]\nid = \"NOPE\"\n").is_err());
        assert!(SuiteConfig::from_toml("colour = 3\n").is_err());
        assert!(SuiteConfig::from_toml("[[entries]]\nid = \"JACOBI\"\nz = [\"1+\"]\n").is_err());
    }

    #[test]
    fn empty_is_valid() {
        let c = SuiteConfig::from_toml("").unwrap();
        assert!(c.entries.is_empty());
    }
}
