//! Case-file schema.

use std::fmt;
use std::path::{Path, PathBuf};

use kstab_core::exact::{fmt_rational, parse_rational};
use kstab_core::Rational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Volume,
    Beta,
    FlagSurface,
    FlagPoint,
    Formula,
    Git,
    Toric,
    Invariant,
    Barycenter,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        f.write_str(&s)
    }
}

/// A computed or expected outcome. On the wire: JSON booleans, integers, or
/// strings; strings that parse as `p/q` are rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Bool(bool),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(q) => f.write_str(&fmt_rational(q)),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Bool(b) => s.serialize_bool(*b),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Bool(b) => Ok(Value::Bool(b)),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|i| Value::Rational(kstab_core::qi(i)))
                .ok_or_else(|| {
                    D::Error::custom("numbers must be integers; write fractions as \"p/q\"")
                }),
            serde_json::Value::String(s) => Ok(parse_rational(&s)
                .map(Value::Rational)
                .unwrap_or(Value::Text(s))),
            other => Err(D::Error::custom(format!("unsupported value {other}"))),
        }
    }
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Rational(q)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cited {
    pub value: Value,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    pub schema_version: u32,
    pub label: String,
    pub kind: Kind,
    pub inputs: serde_json::Value,
    /// Ground truth the computation must reproduce exactly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Cited>,
    /// The value as printed in the source, when it differs from `expected`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<Cited>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A parsed case plus where it came from, for error locations and
/// resolving relative fixture paths.
#[derive(Debug, Clone)]
pub struct LoadedCase {
    pub case: CaseFile,
    pub location: String,
    pub base_dir: Option<PathBuf>,
}

impl CaseFile {
    pub fn parse(text: &str, location: &str) -> Result<Self, CliError> {
        let case: CaseFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
            location: format!("{location}:{}:{}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        case.validate(location)?;
        Ok(case)
    }

    fn validate(&self, location: &str) -> Result<(), CliError> {
        let schema = |message: String| CliError::Schema {
            location: location.to_string(),
            message,
        };
        if self.schema_version != SCHEMA_VERSION {
            return Err(schema(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        if self.label.trim().is_empty() {
            return Err(schema("empty label".into()));
        }
        for (what, c) in [("expected", &self.expected), ("printed", &self.printed)] {
            if c.as_ref().is_some_and(|c| c.citation.trim().is_empty()) {
                return Err(schema(format!("{what} value needs a citation")));
            }
        }
        if self.printed.is_some() && self.expected.is_none() {
            return Err(schema("a printed value needs an expected value".into()));
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<LoadedCase, CliError> {
        let location = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError::FixtureMissing {
            location: location.clone(),
            name: e.to_string(),
        })?;
        let case = Self::parse(&text, &location)?;
        Ok(LoadedCase {
            case,
            location,
            base_dir: path.parent().map(Path::to_path_buf),
        })
    }
}
