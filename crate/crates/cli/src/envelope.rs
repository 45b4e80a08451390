use serde::{Deserialize, Serialize};
use serde_json::Value;

use degenscope_core::Fraction;

pub const SCHEMA_VERSION: &str = "1";

/// Digits after the point in advisory decimal fields.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub warnings: Vec<String>,
}

impl Envelope {
    pub fn new(command: &str, input: Value, result: Value, warnings: Vec<String>) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input,
            result,
            warnings,
        }
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelopes are plain JSON")
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("envelopes are plain JSON")
    }
}

pub fn decimal(f: &Fraction) -> String {
    f.to_decimal_string(DECIMAL_DIGITS)
}

/// Inserts `key` as `"p/q"` and `key_decimal` next to it.
pub fn put_fraction(obj: &mut serde_json::Map<String, Value>, key: &str, f: &Fraction) {
    obj.insert(key.to_string(), Value::String(f.to_string()));
    obj.insert(format!("{key}_decimal"), Value::String(decimal(f)));
}
