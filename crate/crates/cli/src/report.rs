//! The single report document every subcommand emits.
//!
//! Reports are deterministic: object keys are emitted in sorted order
//! (serde_json's default map is a `BTreeMap`), inputs carry content digests,
//! and wall-clock time only appears when explicitly requested, so repeated
//! runs on the same inputs produce byte-identical output.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// One input the command consumed, with a digest of its exact content.
/// Like [`ReportDocument`], fields are declared alphabetically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    /// Hex SHA-256 of the bytes.
    pub sha256: String,
    /// Where the bytes came from: a file path or a `flag:value` literal.
    pub source: String,
}

/// The envelope printed by every subcommand, in both output formats.
///
/// Fields are declared in alphabetical order on purpose: the struct then
/// serializes exactly like a generic sorted-key JSON object, so parsing a
/// report and pretty-printing it again reproduces the original bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    /// The invocation, as typed (program name omitted).
    pub command: String,
    /// The process exit status the report was emitted with.
    pub exit_status: i32,
    /// Digests of everything that was read.
    pub inputs: Vec<InputDigest>,
    /// Command-specific results.
    pub results: Value,
    /// Unix seconds, present only when `--timestamp` was passed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    /// Non-fatal notes; errors also land here before the process exits.
    pub warnings: Vec<String>,
}

impl ReportDocument {
    /// Pretty JSON with a trailing newline. Key order is sorted and stable.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    #[cfg(test)]
    pub fn from_json(s: &str) -> serde_json::Result<ReportDocument> {
        serde_json::from_str(s)
    }

    /// Plain-text rendering. Walks the same JSON value tree the JSON format
    /// serializes, so every number and string agrees between formats.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if self.inputs.is_empty() {
            out.push_str("inputs: (none)\n");
        } else {
            out.push_str("inputs:\n");
            for input in &self.inputs {
                out.push_str(&format!("  - {} sha256={}\n", input.source, input.sha256));
            }
        }
        out.push_str("results:\n");
        render_value(&self.results, 1, &mut out);
        if self.warnings.is_empty() {
            out.push_str("warnings: (none)\n");
        } else {
            out.push_str("warnings:\n");
            for w in &self.warnings {
                out.push_str(&format!("  - {w}\n"));
            }
        }
        if let Some(t) = self.timestamp {
            out.push_str(&format!("timestamp: {t}\n"));
        }
        out.push_str(&format!("exit status: {}\n", self.exit_status));
        out
    }
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "null".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => unreachable!("scalar_text called on a composite value"),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn render_value(v: &Value, depth: usize, out: &mut String) {
    match v {
        Value::Object(map) if map.is_empty() => {
            indent(out, depth);
            out.push_str("(empty)\n");
        }
        Value::Object(map) => {
            for (k, val) in map {
                indent(out, depth);
                if is_scalar(val) {
                    out.push_str(&format!("{k}: {}\n", scalar_text(val)));
                } else {
                    out.push_str(&format!("{k}:\n"));
                    render_value(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) if items.is_empty() => {
            indent(out, depth);
            out.push_str("(empty)\n");
        }
        Value::Array(items) => {
            for val in items {
                indent(out, depth);
                if is_scalar(val) {
                    out.push_str(&format!("- {}\n", scalar_text(val)));
                } else {
                    out.push_str("-\n");
                    render_value(val, depth + 1, out);
                }
            }
        }
        scalar => {
            indent(out, depth);
            out.push_str(&scalar_text(scalar));
            out.push('\n');
        }
    }
}

/// Digest of raw bytes under a source label.
pub fn digest_bytes(source: &str, bytes: &[u8]) -> InputDigest {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    InputDigest {
        sha256: hex::encode(hasher.finalize()),
        source: source.to_string(),
    }
}

/// Digest of an inline argument treated as an input (e.g. `--seed-link 2`).
pub fn digest_str(source: &str, content: &str) -> InputDigest {
    digest_bytes(source, content.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> ReportDocument {
        ReportDocument {
            command: "sig trefoil.json".to_string(),
            inputs: vec![digest_str("trefoil.json", "{}")],
            results: json!({
                "zeta": {"value": "-4/3", "kind": "exact"},
                "list": [1, {"a": true}],
                "empty": [],
                "nothing": null,
            }),
            warnings: vec![],
            exit_status: 0,
            timestamp: None,
        }
    }

    #[test]
    fn json_round_trip_is_identity() {
        let doc = sample();
        let text = doc.to_json();
        let back = ReportDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn json_keys_are_sorted() {
        let text = sample().to_json();
        let zeta = text.find("\"zeta\"").unwrap();
        let list = text.find("\"list\"").unwrap();
        let empty = text.find("\"empty\"").unwrap();
        assert!(empty < list && list < zeta);
        let kind = text.find("\"kind\"").unwrap();
        let value = text.find("\"value\"").unwrap();
        assert!(kind < value);
    }

    #[test]
    fn timestamp_absent_by_default() {
        let text = sample().to_json();
        assert!(!text.contains("timestamp"));
        let mut doc = sample();
        doc.timestamp = Some(1_700_000_000);
        assert!(doc.to_json().contains("\"timestamp\": 1700000000"));
    }

    #[test]
    fn text_rendering_walks_the_same_tree() {
        let text = sample().render_text();
        assert!(text.starts_with("command: sig trefoil.json\n"));
        assert!(text.contains("  - trefoil.json sha256="));
        assert!(text.contains("  zeta:\n    kind: exact\n    value: -4/3\n"));
        assert!(text.contains("  list:\n    - 1\n    -\n      a: true\n"));
        assert!(text.contains("  empty:\n    (empty)\n"));
        assert!(text.contains("  nothing: null\n"));
        assert!(text.contains("warnings: (none)\n"));
        assert!(text.ends_with("exit status: 0\n"));
    }

    #[test]
    fn digests_match_known_sha256() {
        // SHA-256 of the empty string.
        assert_eq!(
            digest_str("x", "").sha256,
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
        assert_eq!(
            digest_bytes("x", b"abc").sha256,
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
