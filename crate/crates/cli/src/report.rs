//! Command reports: one JSON object per run, or a plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    /// `Certified` or `NotCertified`.
    pub status: String,
    pub level: Option<usize>,
    pub max_level: usize,
    /// Generators of `C_0, C_1, ...`.
    pub chain: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub vars: Vec<String>,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub generators: Vec<String>,
    pub dims: BTreeMap<String, usize>,
    pub certificate: Option<CertificateReport>,
    /// Wall-clock time, only filled in when requested so that reports are
    /// reproducible byte for byte by default.
    pub millis: Option<u64>,
}

impl Report {
    pub fn new(command: &str, field: String, vars: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            field,
            vars,
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            generators: Vec::new(),
            dims: BTreeMap::new(),
            certificate: None,
            millis: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} over {} [{}]",
            self.command,
            self.field,
            self.vars.join(" ")
        );
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k}: {}", inline(v));
        }
        if let Some(c) = &self.certificate {
            match c.level {
                Some(l) => {
                    let _ = writeln!(out, "Certified at level {l}");
                }
                None => {
                    let _ = writeln!(out, "Not certified up to level {}", c.max_level);
                }
            }
            let _ = writeln!(out, "chain:");
            for (i, gens) in c.chain.iter().enumerate() {
                let _ = writeln!(out, "  C_{i} = ({})", gens.join(", "));
            }
        }
        for (k, v) in &self.outputs {
            write_value(&mut out, k, v, 0);
        }
        if !self.generators.is_empty() {
            let _ = writeln!(out, "generators:");
            for g in &self.generators {
                let _ = writeln!(out, "  {g}");
            }
        }
        if !self.dims.is_empty() {
            let dims: Vec<String> = self
                .dims
                .iter()
                .map(|(k, v)| format!("{k} = {v}"))
                .collect();
            let _ = writeln!(out, "dims: {}", dims.join(", "));
        }
        if let Some(ms) = self.millis {
            let _ = writeln!(out, "time: {ms} ms");
        }
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{k}: {}", inline(v)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, item) in items.iter().enumerate() {
                write_value(out, &format!("[{i}]"), item, depth + 1);
            }
        }
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in map {
                write_value(out, k, v, depth + 1);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {}", inline(other));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("certify", "Q".into(), vec!["x".into(), "y".into()]);
        r.inputs.insert(
            "ideal".into(),
            json!({"name": "a", "generators": ["x^2", "y^2"]}),
        );
        r.generators = vec!["x^2".into(), "y^2".into()];
        r.dims.insert("dimA".into(), 4);
        r.certificate = Some(CertificateReport {
            status: "Certified".into(),
            level: Some(2),
            max_level: 8,
            chain: vec![vec!["x".into(), "y".into()]],
        });
        let text = r.to_json();
        assert_eq!(Report::from_json(&text).unwrap(), r);
        assert!(r.to_text().contains("Certified at level 2"));
        assert!(text.contains("\"millis\": null"));
    }
}
