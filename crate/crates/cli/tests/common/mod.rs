#![allow(dead_code)]

use std::path::{Path, PathBuf};

use cubemorse::Outcome;
use serde_json::Value;

pub fn run(args: &[&str]) -> Outcome {
    cubemorse::run(std::iter::once("cubemorse").chain(args.iter().copied()))
}

pub fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", o.stdout))
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

/// Writes the rank-`n` construction with modulus `p` to `dir/name`.
pub fn spec(dir: &Path, name: &str, n: u32, p: u32) -> PathBuf {
    let path = dir.join(name);
    let o = run(&["graph", "gen", "--n", &n.to_string(), "--p", &p.to_string(), "-o", path_str(&path)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    path
}

/// Template block-pair keys for rank `n`, in order.
pub fn template_keys(n: u32) -> Vec<String> {
    let mut keys = Vec::new();
    for i in 1..=n {
        for a in ["-", "+"] {
            for j in 1..=n {
                for b in ["-", "+"] {
                    keys.push(format!("A{i}{a}|B{j}{b}"));
                }
            }
        }
    }
    keys
}

/// The spec with every residue set equal to {0}.
pub fn constant_spec(dir: &Path, n: u32, p: u32) -> PathBuf {
    let sigma: serde_json::Map<String, Value> =
        template_keys(n).into_iter().map(|k| (k, Value::from(vec![0]))).collect();
    let path = dir.join(format!("constant_n{n}p{p}.json"));
    let body = serde_json::json!({ "rank": n, "modulus": p, "sigma": sigma });
    std::fs::write(&path, serde_json::to_string_pretty(&body).unwrap()).unwrap();
    path
}

/// Whether any check carries a witness of the given kind, searched recursively.
pub fn has_witness(v: &Value, kind: &str) -> bool {
    match v {
        Value::Object(m) => {
            if let Some(Value::Object(w)) = m.get("witness") {
                if w.get("kind").and_then(Value::as_str) == Some(kind) {
                    return true;
                }
            }
            m.values().any(|x| has_witness(x, kind))
        }
        Value::Array(a) => a.iter().any(|x| has_witness(x, kind)),
        _ => false,
    }
}

/// The report with its command echo removed.
pub fn without_command(stdout: &str) -> Value {
    let mut v: Value = serde_json::from_str(stdout).unwrap();
    v.as_object_mut().unwrap().remove("command");
    v
}
