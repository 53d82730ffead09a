use std::path::Path;

use cubemorse_core::bigraph::{verify_sizeable, Backend, SizeableInput};
use cubemorse_core::cover::{build_voltage_cover, verify_cover_properties, VoltageCover};
use cubemorse_core::cubeworld::{
    build_theta_cube, build_x_gamma, euler_formula_xgamma, euler_formula_y, euler_y_cover_decomposition,
    CubeError, ProductCubeComplex,
};
use cubemorse_core::morse::{
    chamber_characters, check_chamber, check_dead_links_full, engine_disagreements, enumerate_chambers,
    sign_label, ChamberError, Character, CheckOptions, Engine, Family, Instance, MorseError, SymbolicModel,
    VerificationReport,
};
use cubemorse_core::{Budget, Verdict};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::complex::instance_counts;
use super::graph::realize;
use super::missing;
use crate::cli::{BnsrCmd, EngineArg, FamilyArg};
use crate::convert::{self, number};
use crate::io::{self, InstanceFile};
use crate::{CliError, Context, Output, Report};

fn family_of(family: FamilyArg, n: u32) -> Result<Family, CliError> {
    let f = match family {
        FamilyArg::Xgamma => Family::XGamma { n },
        FamilyArg::Theta => Family::Theta { n },
    };
    f.validate().map_err(|e| CliError::Input(format!("rank {n}: {e}")))?;
    Ok(f)
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::XGamma { .. } => "xgamma",
        Family::Theta { .. } => "theta",
    }
}

fn chamber_error(e: ChamberError) -> CliError {
    match e {
        ChamberError::RankTooLarge(_) => CliError::Unavailable(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn morse_error(e: MorseError) -> CliError {
    match e {
        MorseError::Cube(CubeError::BudgetExceeded { .. }) => CliError::Budget(e.to_string()),
        MorseError::Chamber(c) => chamber_error(c),
        MorseError::MissingCertificate | MorseError::EngineUnavailable(_) | MorseError::Unsupported(_) => {
            CliError::Unavailable(e.to_string())
        }
        other => CliError::Input(other.to_string()),
    }
}

pub fn chambers(family: FamilyArg, n: u32, output: Option<&Path>, ctx: &Context) -> Result<Output, CliError> {
    let fam = family_of(family, n)?;
    let list = enumerate_chambers(fam).map_err(chamber_error)?;
    let functionals: Vec<String> = fam.functionals().iter().map(|f| fam.functional_name(f)).collect();
    let entries: Vec<Value> = list
        .iter()
        .map(|c| json!({ "label": c.sign_string(), "signs": c.signs, "representative": c.representative.to_string() }))
        .collect();
    if let Some(path) = output {
        let file = json!({
            "family": family_name(fam),
            "rank": n,
            "functionals": functionals,
            "chambers": entries,
        });
        io::write_text(path, &io::to_pretty(&file))?;
    }
    let mut r = Report::new(&ctx.command, json!({ "kind": "character sphere", "family": family_name(fam), "rank": n }));
    r.section("functionals", functionals.into());
    r.section("count", list.len().into());
    r.section("chambers", entries.into());
    if let Some(path) = output {
        r.section("output", path.display().to_string().into());
    }
    Ok(Output::Report(Box::new(r)))
}

fn select_characters(
    family: Family,
    lambda: Option<&str>,
    all: bool,
    file: Option<&Path>,
) -> Result<Vec<(String, Character)>, CliError> {
    if let Some(text) = lambda {
        let l = Character::parse(family, text).map_err(|e| CliError::Input(format!("--lambda {text:?}: {e}")))?;
        return Ok(vec![(sign_label(&l), l)]);
    }
    if all {
        return chamber_characters(family).map_err(morse_error);
    }
    let path = file.expect("clap requires one way of choosing characters");
    let wanted = io::read_chambers(path)?;
    let bad = |what: String| CliError::Input(format!("{}: {what}", path.display()));
    if wanted.family.as_deref().is_some_and(|f| f != family_name(family)) || wanted.rank.is_some_and(|n| n != family.rank())
    {
        return Err(bad(format!("chambers belong to another family or rank than {} rank {}", family_name(family), family.rank())));
    }
    let known = enumerate_chambers(family).map_err(chamber_error)?;
    wanted
        .chambers
        .iter()
        .map(|w| {
            known
                .iter()
                .find(|c| c.signs == w.signs)
                .map(|c| (c.sign_string(), c.representative.clone()))
                .ok_or_else(|| bad(format!("sign vector {:?} is not a chamber", w.signs)))
        })
        .collect()
}

fn requested(engine: EngineArg) -> Vec<Engine> {
    match engine {
        EngineArg::Explicit => vec![Engine::Explicit],
        EngineArg::Symbolic => vec![Engine::Symbolic],
        EngineArg::Both => vec![Engine::Explicit, Engine::Symbolic],
    }
}

/// Engines that can run, noting skipped ones under `both`.
fn usable_engines(
    r: &mut Report,
    instance: &Instance<'_>,
    engine: EngineArg,
    reason: impl Fn(Engine) -> String,
) -> Result<Vec<Engine>, CliError> {
    let mut out = Vec::new();
    for e in requested(engine) {
        if instance.supports(e) {
            out.push(e);
        } else if engine == EngineArg::Both {
            r.note(format!("{e} engine skipped: {}", reason(e)));
        } else {
            return Err(CliError::Unavailable(format!("{e} engine unavailable: {}", reason(e))));
        }
    }
    if out.is_empty() {
        return Err(CliError::Unavailable("no engine can run on this instance".into()));
    }
    Ok(out)
}

fn run_engines(
    r: &mut Report,
    instance: &Instance<'_>,
    engines: &[Engine],
    chars: &[(String, Character)],
    opts: &CheckOptions,
) -> Result<(), CliError> {
    let mut reports = Vec::new();
    for &e in engines {
        let chambers = chars
            .par_iter()
            .map(|(s, l)| check_chamber(instance, e, s.clone(), l, opts))
            .collect::<Result<Vec<_>, _>>()
            .map_err(morse_error)?;
        let rep = VerificationReport::new(instance.family(), opts.m, e, chambers);
        for c in &rep.chambers {
            r.check(format!("chamber {} ({e})", c.signs), c.verdict, convert::chamber_line(c), convert::chamber(c));
        }
        reports.push(rep);
    }
    if let [a, b] = &reports[..] {
        let d = engine_disagreements(a, b);
        let list: Vec<Value> = d
            .iter()
            .map(|x| {
                json!({
                    "signs": x.signs,
                    "vertex_type": x.vertex_type,
                    "explicit": convert::verdict(x.explicit),
                    "symbolic": convert::verdict(x.symbolic),
                })
            })
            .collect();
        let line = match d.first() {
            None => "explicit and symbolic verdicts agree on every vertex type".to_string(),
            Some(x) => format!("{} disagreements, first at {} in chamber {}", d.len(), x.vertex_type, x.signs),
        };
        r.check("engine agreement", Verdict::from_bool(d.is_empty()), line, json!({ "disagreements": list }));
    }
    Ok(())
}

fn fullness(
    r: &mut Report,
    x: &ProductCubeComplex,
    chars: &[(String, Character)],
    exhaustive: bool,
    budget: &Budget,
) -> Result<(), CliError> {
    let results = chars
        .par_iter()
        .map(|(s, l)| check_dead_links_full(x, l, exhaustive, budget).map(|(v, w)| (s, v, w)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(morse_error)?;
    let verdict = Verdict::all(results.iter().map(|t| t.1));
    let violation = results.iter().find_map(|(s, _, w)| w.as_ref().map(|w| (s, w)));
    let (line, detail) = match violation {
        None => (
            format!("flat link simplices form a full subcomplex for all {} characters", results.len()),
            json!({ "characters": results.len(), "violation": null }),
        ),
        Some((s, w)) => {
            let simplex: Vec<String> = w.simplex.iter().map(|l| x.link_vertex_name(l)).collect();
            let vertex = x.vertex_name(w.vertex);
            (
                format!("chamber {s}: at {vertex} the dead simplex {{{}}} is not flat", simplex.join(", ")),
                json!({ "characters": results.len(), "violation": { "signs": s, "vertex": vertex, "simplex": simplex } }),
            )
        }
    };
    r.check("dead links full", verdict, line, detail);
    Ok(())
}

/// Statement issued when every chamber passes.
fn certify(r: &mut Report, family: Family, chambers: usize, m: i8, chi: BigInt, formula: Option<BigInt>) {
    let (level, conclusion) = match m {
        0 => ("m = 0 (Σ¹)", "ker φ is finitely generated (type F_1)"),
        _ => ("m = 1 (Σ²)", "ker φ is finitely presented (type F_2)"),
    };
    let group = match family {
        Family::XGamma { .. } => "G = π₁(X_Γ), φ = (φ₁, …, φ_n): G → ℤⁿ",
        Family::Theta { .. } => "G = π₁(Y), φ = (φ₂, …, φ_n): G → ℤⁿ⁻¹",
    };
    let negative = chi < BigInt::from(0);
    let mut euler = serde_json::Map::new();
    euler.insert("chi".into(), number(&chi));
    if let Some(f) = &formula {
        euler.insert("formula".into(), number(f));
        euler.insert("formula_matches".into(), (f == &chi).into());
    }
    euler.insert("negative".into(), negative.into());
    if negative {
        euler.insert(
            "consequence".into(),
            "χ(G) ≠ 0, so ker φ is not of type F_3: a kernel of type F_3 with infinite cyclic quotients would force Euler characteristic 0".into(),
        );
    }
    let value = json!({
        "group": group,
        "level": level,
        "chambers": chambers,
        "hypotheses": format!(
            "at every vertex type and for one character in each of the {chambers} sign chambers of S(G, ker φ), every ascending and descending living link of every dead simplex σ, σ = ∅ included, is (m − dim σ − 1)-connected"
        ),
        "criteria": [
            {
                "name": "Bieri–Neumann–Strebel–Renz criterion",
                "statement": "for G of type F_k, ker φ is of type F_k if and only if S(G, ker φ) ⊆ Σ^k(G)",
            },
            {
                "name": "Morse criterion for cube complexes",
                "statement": "if all ascending and descending living links of dead simplices σ are (m − dim σ − 1)-connected, then the character lies in Σ^(m+1)(G)",
            },
        ],
        "conclusion": conclusion,
        "euler_characteristic": Value::Object(euler),
    });
    let line = format!("{conclusion}; hypotheses at {level} in all {chambers} chambers; χ = {chi}");
    r.certify(line, value);
}

pub fn check(cmd: &BnsrCmd, ctx: &Context) -> Result<Output, CliError> {
    let BnsrCmd::Check { family, graph, n, p, voltage, lambda, all_chambers, chambers, engine, exhaustive, m } = cmd else {
        unreachable!("dispatch passes only check")
    };
    if !matches!(*m, 0 | 1) {
        return Err(CliError::Input(format!("--m {m}: only connectivity levels 0 and 1 are supported")));
    }
    let opts = CheckOptions { m: *m, exhaustive: *exhaustive, budget: ctx.budget };
    let lambda = lambda.as_deref();
    let r = match family {
        FamilyArg::Xgamma => {
            let path = graph.as_deref().ok_or_else(|| missing("--graph", "for the xgamma family"))?;
            let inst = io::read_instance(path)?;
            let rank = inst.rank();
            if n.is_some_and(|n| n != rank) {
                return Err(CliError::Input(format!("--n {} does not match the file's rank {rank}", n.unwrap_or(0))));
            }
            let fam = family_of(FamilyArg::Xgamma, rank)?;
            let chars = select_characters(fam, lambda, *all_chambers, chambers.as_deref())?;
            let mut r = Report::new(&ctx.command, inst.describe());
            let wants_explicit = *engine != EngineArg::Symbolic;
            let (size, g) = match &inst {
                InstanceFile::Spec(s) => {
                    let g = if wants_explicit { realize(s, ctx, *engine == EngineArg::Both)? } else { None };
                    (verify_sizeable(SizeableInput::Spec(s), Backend::Arithmetic).expect("spec input"), g)
                }
                InstanceFile::Graph(g) => (verify_sizeable(SizeableInput::Graph(g), Backend::Explicit).expect("graph input"), Some(g.clone())),
            };
            r.section("sizeability", convert::sizeability(&size));
            let model = match &inst {
                InstanceFile::Spec(s) => SymbolicModel::for_spec(s, &size),
                InstanceFile::Graph(g) => SymbolicModel::for_graph(g, &size),
            };
            let model_reason = model.as_ref().err().map(|e| e.to_string()).unwrap_or_default();
            let model = model.ok();
            let complex = g.as_ref().map(build_x_gamma);
            let instance = Instance::XGamma { n: rank, complex: complex.as_ref(), model: model.as_ref() };
            let budget = ctx.budget.vertices;
            let engines = usable_engines(&mut r, &instance, *engine, |e| match e {
                Engine::Explicit => format!("the graph exceeds the vertex budget of {budget}"),
                Engine::Symbolic => model_reason.clone(),
            })?;
            run_engines(&mut r, &instance, &engines, &chars, &opts)?;
            if let Some(x) = &complex {
                fullness(&mut r, x, &chars, *exhaustive, &ctx.budget)?;
            }
            if *all_chambers && r.overall().is_pass() {
                let chi = convert::chi(&instance_counts(&inst));
                let formula = match &inst {
                    InstanceFile::Spec(s) => Some(euler_formula_xgamma(s.rank(), s.modulus())),
                    InstanceFile::Graph(_) => None,
                };
                certify(&mut r, fam, chars.len(), *m, chi, formula);
            }
            r
        }
        FamilyArg::Theta => {
            let cover: VoltageCover = match voltage {
                Some(path) => {
                    let c = io::read_voltage(path)?;
                    if n.is_some_and(|n| n != c.n()) || p.is_some_and(|p| p != c.p()) {
                        return Err(CliError::Input("--n/--p disagree with the voltage table".into()));
                    }
                    c
                }
                None => {
                    let n = n.ok_or_else(|| missing("--n", "for the theta family"))?;
                    let p = p.ok_or_else(|| missing("--p", "for the theta family without --voltage"))?;
                    build_voltage_cover(n, p).map_err(|e| CliError::Input(e.to_string()))?
                }
            };
            let (n, p) = (cover.n(), cover.p());
            let fam = family_of(FamilyArg::Theta, n)?;
            let chars = select_characters(fam, lambda, *all_chambers, chambers.as_deref())?;
            let source = if voltage.is_some() { "table" } else { "product i·j" };
            let mut r = Report::new(
                &ctx.command,
                json!({ "kind": "theta cover", "rank": n, "modulus": p, "voltage": source, "cover_vertices": cover.vertex_count() }),
            );
            let props = verify_cover_properties(&cover);
            let line = match props.witnesses.first() {
                None => format!("locally bijective, connected, all {} base 4-cycles unwind", props.base_four_cycles),
                Some(w) => convert::cover_witness(w).to_string(),
            };
            r.check("cover properties", props.overall(), line, convert::cover_properties(&props));
            let instance = Instance::Theta { cover: &cover };
            let engines = usable_engines(&mut r, &instance, *engine, |_| String::new())?;
            run_engines(&mut r, &instance, &engines, &chars, &opts)?;
            let base = build_theta_cube(n).map_err(|e| morse_error(MorseError::Cube(e)))?;
            fullness(&mut r, &base, &chars, true, &ctx.budget)?;
            if *all_chambers && r.overall().is_pass() {
                let chi = euler_y_cover_decomposition(n, p as u128);
                let formula = euler_formula_y(n, p as u128);
                certify(&mut r, fam, chars.len(), *m, chi, Some(formula));
            }
            r
        }
    };
    Ok(Output::Report(Box::new(r)))
}
