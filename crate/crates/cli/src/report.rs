use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

/// Machine-readable command output. Everything except `volatile` is a pure
/// function of the inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volatile: Option<Volatile>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Volatile {
    pub elapsed_ms: u64,
}

impl JsonReport {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        JsonReport {
            schema_version: SCHEMA_VERSION.to_owned(),
            command: command.to_owned(),
            inputs,
            result,
            volatile: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    /// The report with the volatile part dropped; what golden files hold.
    pub fn to_stable_json(&self) -> String {
        JsonReport {
            volatile: None,
            ..self.clone()
        }
        .to_json()
    }

    /// `key: value` per result field, values in compact JSON.
    pub fn to_human(&self) -> String {
        let mut s = format!("{}\n", self.command);
        match &self.result {
            Value::Object(map) => {
                for (k, v) in map {
                    s.push_str(&format!("  {k}: {v}\n"));
                }
            }
            other => s.push_str(&format!("  {other}\n")),
        }
        if let Some(v) = self.volatile {
            s.push_str(&format!("  elapsed_ms: {}\n", v.elapsed_ms));
        }
        s
    }
}
