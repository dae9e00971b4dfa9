//! Command reports and their two stable renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::complex::KnotComplex;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    /// The input as given on the command line.
    pub source: String,
    pub name: String,
    /// SHA-256 of the canonical text form of the complex.
    pub sha256: String,
}

impl InputDigest {
    pub fn new(source: &str, complex: &KnotComplex) -> Self {
        InputDigest {
            source: source.to_string(),
            name: complex.name().to_string(),
            sha256: sha256_hex(complex.to_text().as_bytes()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub framing: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs: Vec<InputDigest>,
    pub parameters: Parameters,
    pub results: Value,
    pub certificate: Vec<String>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: String, inputs: Vec<InputDigest>, parameters: Parameters, results: Value) -> Self {
        Report {
            command,
            version: crate::VERSION.to_string(),
            inputs,
            parameters,
            results,
            certificate: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// One `key: value` line per leaf, keys joined with dots.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("reports always serialize");
        let mut out = String::new();
        flatten("", &value, &mut out);
        out
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        Value::Object(_) => writeln!(out, "{prefix}: {{}}").unwrap(),
        Value::Array(_) => writeln!(out, "{prefix}: []").unwrap(),
        Value::Null => writeln!(out, "{prefix}: none").unwrap(),
        Value::String(s) => writeln!(out, "{prefix}: {s}").unwrap(),
        other => writeln!(out, "{prefix}: {other}").unwrap(),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
