use std::fmt::Write as _;
use std::time::Duration;

use cubemorse_core::Verdict;
use serde_json::{Map, Value};

use crate::convert::verdict;

/// One sub-check: its verdict, a one-line summary and JSON detail.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub line: String,
    pub detail: Value,
}

/// Output of one command. Keys are emitted in insertion order so the JSON
/// is byte-identical across runs; timing is only added on request.
#[derive(Clone, Debug)]
pub struct Report {
    command: String,
    instance: Value,
    sections: Vec<(String, Value)>,
    checks: Vec<Check>,
    notes: Vec<String>,
    certificate: Option<Value>,
    certificate_line: Option<String>,
}

impl Report {
    pub fn new(command: &str, instance: Value) -> Self {
        Report {
            command: command.to_string(),
            instance,
            sections: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            certificate: None,
            certificate_line: None,
        }
    }

    pub fn section(&mut self, key: &str, value: Value) {
        self.sections.push((key.to_string(), value));
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: Verdict, line: impl Into<String>, detail: Value) {
        self.checks.push(Check { name: name.into(), verdict, line: line.into(), detail });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn certify(&mut self, line: String, value: Value) {
        self.certificate_line = Some(line);
        self.certificate = Some(value);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    /// Pass iff every check passes.
    pub fn overall(&self) -> Verdict {
        Verdict::all(self.checks.iter().map(|c| c.verdict))
    }

    pub fn to_json(&self, timing: Option<Duration>) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), self.command.clone().into());
        m.insert("instance".into(), self.instance.clone());
        for (k, v) in &self.sections {
            m.insert(k.clone(), v.clone());
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut o = Map::new();
                o.insert("name".into(), c.name.clone().into());
                o.insert("verdict".into(), verdict(c.verdict));
                o.insert("summary".into(), c.line.clone().into());
                if let Value::Object(d) = &c.detail {
                    for (k, v) in d {
                        o.insert(k.clone(), v.clone());
                    }
                } else if !c.detail.is_null() {
                    o.insert("detail".into(), c.detail.clone());
                }
                Value::Object(o)
            })
            .collect();
        m.insert("checks".into(), Value::Array(checks));
        if !self.notes.is_empty() {
            m.insert("notes".into(), self.notes.clone().into());
        }
        m.insert("overall".into(), verdict(self.overall()));
        if let Some(c) = &self.certificate {
            m.insert("certificate".into(), c.clone());
        }
        if let Some(t) = timing {
            m.insert("timing".into(), serde_json::json!({ "wall_ms": t.as_millis() as u64 }));
        }
        Value::Object(m)
    }

    pub fn summary(&self, timing: Option<Duration>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "instance: {}", compact(&self.instance));
        for (k, v) in &self.sections {
            if v.is_array() && v.as_array().map_or(0, Vec::len) > 8 {
                let _ = writeln!(s, "{k}: {} entries", v.as_array().map_or(0, Vec::len));
            } else {
                let _ = writeln!(s, "{k}: {}", compact(v));
            }
        }
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}: {}", c.verdict, c.name, c.line);
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if let Some(line) = &self.certificate_line {
            let _ = writeln!(s, "certificate: {line}");
        }
        let _ = writeln!(s, "overall: {}", self.overall());
        if let Some(t) = timing {
            let _ = writeln!(s, "time: {} ms", t.as_millis());
        }
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
