//! Report rendering. The `result` body is contract-stable and byte-identical
//! across runs; wall-clock data lives only in the `meta` header (JSON) or in
//! leading `#` comment lines (TSV).

use std::fs;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Value};

use crate::{Format, UsageError};

pub fn render_document(command: &str, result: &Value, format: Format) -> String {
    let unix_time = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    match format {
        Format::Json => {
            let doc = json!({
                "meta": {
                    "command": command,
                    "version": env!("CARGO_PKG_VERSION"),
                    "unix_time": unix_time,
                },
                "result": result,
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("documents serialize");
            text.push('\n');
            text
        }
        Format::Tsv => {
            let mut out = String::new();
            out.push_str(&format!("# command\t{command}\n"));
            out.push_str(&format!("# version\t{}\n", env!("CARGO_PKG_VERSION")));
            out.push_str(&format!("# unix_time\t{unix_time}\n"));
            let mut rows = Vec::new();
            flatten("", result, &mut rows);
            for (path, value) in rows {
                out.push_str(&format!("{path}\t{value}\n"));
            }
            out
        }
    }
}

/// Flattens a JSON value into `path<TAB>scalar` rows; object keys come out
/// in sorted order, so the body is deterministic.
fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&path, v, rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        Value::Null => rows.push((prefix.to_string(), "null".into())),
        Value::Bool(b) => rows.push((prefix.to_string(), b.to_string())),
        Value::Number(n) => rows.push((prefix.to_string(), n.to_string())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
    }
}

pub fn write_out(output: &Option<PathBuf>, text: &str) -> Result<(), UsageError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
