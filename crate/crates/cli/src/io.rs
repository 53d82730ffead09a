//! File formats.
//!
//! Modular spec: `{"rank": n, "modulus": p, "order": [...], "sigma": {"A1-|B1-": [0, 1], ...}}`,
//! where `order` is optional and defaults to the template order.
//! Explicit graph: `{"rank": n, "blocks": {"A1+": ["A1+:0", ...]}, "edges": [["A1+:0", "B1-:3"], ...]}`.
//! Voltage table: `{"n": n, "p": p, "voltage": {"x1|x2": 2, ...}}` with one
//! entry per pair of base vertices `x1..xn, y1..yn`.
//! Complex: `{"simplices": [["a", "b"], ...]}` listing maximal simplices.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use cubemorse_core::bigraph::{template_edge_order, BlockId, BlockPair, ModularSpec, MorseGraph};
use cubemorse_core::cover::VoltageCover;
use cubemorse_core::morse::ThetaEdge;
use cubemorse_core::simplicial::SimplicialComplex;
use cubemorse_core::Budget;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::convert::number;
use crate::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn parse_json<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::json(path, e))
}

pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    rank: u32,
    modulus: Option<u128>,
    order: Option<Vec<String>>,
    sigma: Option<BTreeMap<String, Vec<u128>>>,
    blocks: Option<BTreeMap<String, Vec<String>>>,
    edges: Option<Vec<(String, String)>>,
}

/// Contents of a spec or graph file.
#[derive(Debug)]
pub enum InstanceFile {
    Spec(ModularSpec),
    Graph(MorseGraph),
}

impl InstanceFile {
    pub fn rank(&self) -> u32 {
        match self {
            InstanceFile::Spec(s) => s.rank(),
            InstanceFile::Graph(g) => g.rank(),
        }
    }

    pub fn describe(&self) -> Value {
        match self {
            InstanceFile::Spec(s) => {
                let residues: u128 = s.order().iter().map(|p| s.residues(*p).len() as u128).sum();
                let mut m = Map::new();
                m.insert("kind".into(), "modular spec".into());
                m.insert("rank".into(), s.rank().into());
                m.insert("modulus".into(), number(s.modulus()));
                m.insert("vertices".into(), number(s.vertex_count()));
                m.insert("edges".into(), number(residues * s.modulus()));
                Value::Object(m)
            }
            InstanceFile::Graph(g) => serde_json::json!({
                "kind": "explicit graph",
                "rank": g.rank(),
                "vertices": g.vertex_count(),
                "edges": g.edges().len(),
            }),
        }
    }
}

fn block(name: &str) -> Result<BlockId, CliError> {
    name.parse().map_err(|_| CliError::Input(format!("{name:?} is not a block name like A1+ or B2-")))
}

fn block_pair(name: &str) -> Result<BlockPair, CliError> {
    name.parse().map_err(|_| CliError::Input(format!("{name:?} is not a block pair like A1-|B2+")))
}

pub fn read_instance(path: &Path) -> Result<InstanceFile, CliError> {
    let raw: RawInstance = parse_json(path, &read_text(path)?)?;
    let at = |e: String| CliError::Input(format!("{}: {e}", path.display()));
    match raw {
        RawInstance { modulus: Some(p), sigma: Some(sigma), blocks: None, edges: None, rank, order } => {
            let order = match order {
                Some(names) => names.iter().map(|s| block_pair(s)).collect::<Result<Vec<_>, _>>()?,
                None => template_edge_order(rank),
            };
            let mut map = BTreeMap::new();
            for (k, v) in sigma {
                map.insert(block_pair(&k)?, v);
            }
            ModularSpec::new(rank, p, order, map).map(InstanceFile::Spec).map_err(|e| at(e.to_string()))
        }
        RawInstance { blocks: Some(blocks), edges: Some(edges), modulus: None, sigma: None, order: None, rank } => {
            let blocks = blocks.into_iter().map(|(k, v)| Ok((block(&k)?, v))).collect::<Result<Vec<_>, CliError>>()?;
            MorseGraph::from_named(rank, blocks, edges).map(InstanceFile::Graph).map_err(|e| at(e.to_string()))
        }
        _ => Err(at("expected either modulus and sigma (modular spec) or blocks and edges (explicit graph)".into())),
    }
}

/// Spec file text with keys in a fixed order.
pub fn spec_json(spec: &ModularSpec) -> Value {
    let mut sigma = Map::new();
    for pair in spec.order() {
        let residues: Vec<Value> = spec.residues(*pair).iter().map(|r| number(*r)).collect();
        sigma.insert(pair.to_string(), Value::Array(residues));
    }
    let mut m = Map::new();
    m.insert("rank".into(), spec.rank().into());
    m.insert("modulus".into(), number(spec.modulus()));
    m.insert("order".into(), spec.order().iter().map(|p| Value::from(p.to_string())).collect());
    m.insert("sigma".into(), Value::Object(sigma));
    Value::Object(m)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVoltage {
    n: u32,
    p: u64,
    voltage: BTreeMap<String, u64>,
}

pub fn read_voltage(path: &Path) -> Result<VoltageCover, CliError> {
    let raw: RawVoltage = parse_json(path, &read_text(path)?)?;
    let at = |e: String| CliError::Input(format!("{}: {e}", path.display()));
    if raw.n < 2 {
        return Err(at(format!("theta rank must be at least 2, got {}", raw.n)));
    }
    let m = 2 * raw.n as usize;
    let names: BTreeMap<String, usize> = (0..m).map(|i| (ThetaEdge::from_position(i, raw.n).to_string(), i)).collect();
    let mut table = vec![vec![None; m]; m];
    for (key, v) in &raw.voltage {
        let (a, b) = key.split_once('|').ok_or_else(|| at(format!("voltage key {key:?} is not of the form x1|y2")))?;
        let (Some(&i), Some(&j)) = (names.get(a), names.get(b)) else {
            return Err(at(format!("voltage key {key:?} names an unknown base vertex")));
        };
        table[i][j] = Some(*v);
    }
    let mut full = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            full[i][j] = table[i][j].ok_or_else(|| {
                let n = |k| ThetaEdge::from_position(k, raw.n).to_string();
                at(format!("no voltage for {}|{}", n(i), n(j)))
            })?;
        }
    }
    VoltageCover::from_table(raw.n, raw.p, full).map_err(|e| at(e.to_string()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    simplices: Vec<Vec<String>>,
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex<String>, CliError> {
    let raw: RawComplex = parse_json(path, &read_text(path)?)?;
    let mut labels: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut simplices = Vec::new();
    for s in raw.simplices {
        let mut ids = Vec::new();
        for name in s {
            let i = *index.entry(name.clone()).or_insert_with(|| {
                labels.push(name);
                labels.len() - 1
            });
            ids.push(i);
        }
        simplices.push(ids);
    }
    SimplicialComplex::new(labels, simplices).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
pub struct ChamberEntry {
    pub signs: Vec<i8>,
}

#[derive(Deserialize)]
pub struct ChamberFile {
    pub family: Option<String>,
    pub rank: Option<u32>,
    pub chambers: Vec<ChamberEntry>,
}

pub fn read_chambers(path: &Path) -> Result<ChamberFile, CliError> {
    parse_json(path, &read_text(path)?)
}

/// Budget from the defaults, then `CUBEMORSE_BUDGET`, then flags.
///
/// The variable holds a cell count, or `cells=N,vertices=M` with either
/// key optional.
pub fn resolve_budget(env: Option<&str>, cells: Option<u64>, vertices: Option<u64>) -> Result<Budget, CliError> {
    let mut b = Budget::default();
    if let Some(text) = env.map(str::trim).filter(|t| !t.is_empty()) {
        let bad = || CliError::Input(format!("CUBEMORSE_BUDGET={text:?}: expected N or cells=N,vertices=M"));
        if let Ok(c) = text.parse::<u64>() {
            b.cells = c;
        } else {
            for part in text.split(',') {
                let (k, v) = part.split_once('=').ok_or_else(bad)?;
                let v: u64 = v.trim().parse().map_err(|_| bad())?;
                match k.trim() {
                    "cells" => b.cells = v,
                    "vertices" => b.vertices = v,
                    _ => return Err(bad()),
                }
            }
        }
    }
    if let Some(c) = cells {
        b.cells = c;
    }
    if let Some(v) = vertices {
        b.vertices = v;
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_sources() {
        let d = Budget::default();
        assert_eq!(resolve_budget(None, None, None).unwrap(), d);
        assert_eq!(resolve_budget(Some("100"), None, None).unwrap().cells, 100);
        let b = resolve_budget(Some("cells=5, vertices=7"), None, None).unwrap();
        assert_eq!((b.cells, b.vertices), (5, 7));
        assert_eq!(resolve_budget(Some("100"), Some(3), None).unwrap().cells, 3);
        assert!(resolve_budget(Some("lots"), None, None).is_err());
    }

    #[test]
    fn large_moduli_round_trip() {
        let spec = cubemorse_core::bigraph::build_modular_spec(3, None).unwrap();
        let text = to_pretty(&spec_json(&spec));
        let dir = std::env::temp_dir().join(format!("cubemorse-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("n3.json");
        write_text(&path, &text).unwrap();
        match read_instance(&path).unwrap() {
            InstanceFile::Spec(back) => assert_eq!(back, spec),
            other => panic!("{other:?}"),
        }
        fs::remove_dir_all(&dir).unwrap();
    }
}
