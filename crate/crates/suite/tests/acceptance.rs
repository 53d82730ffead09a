//! Acceptance suite: one line per criterion, exit status 1 if any fails.

#[path = "../../cli/tests/common/mod.rs"]
mod common;

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{constant_spec, has_witness, json, path_str, run, spec};
use cubemorse_core::bigraph::{
    build_modular_spec, template_edge_order, verify_sizeable, Backend, BlockId, ModularSpec, MorseGraph,
    SizeabilityReport, SizeableInput,
};
use cubemorse_core::cover::{verify_cover_properties, VoltageCover};
use cubemorse_core::cubeworld::{
    build_x_gamma, cell_counts, euler_formula_xgamma, euler_formula_y, euler_y_cover_decomposition, xgamma_counts_exact,
    CountMode,
};
use cubemorse_core::simplicial::SimplicialComplex;
use cubemorse_core::{Budget, Verdict};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn primes(lo: u32, hi: u32) -> Vec<u32> {
    (lo.max(2)..=hi).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn random_spec(rng: &mut ChaCha8Rng, p: u128) -> ModularSpec {
    let order = template_edge_order(1);
    let mut sigma = BTreeMap::new();
    for pair in &order {
        let k = rng.gen_range(1..=3);
        sigma.insert(*pair, (0..k).map(|_| rng.gen_range(0..p)).collect());
    }
    ModularSpec::new(1, p, order, sigma).expect("valid random spec")
}

/// Every component verdict must match, and so must span witnesses.
fn backends_agree(a: &SizeabilityReport, b: &SizeabilityReport) -> Result<(), String> {
    let cmp = |what: &str, x: Verdict, y: Verdict| ensure(x == y, format!("{what}: explicit {x:?}, arithmetic {y:?}"));
    cmp("morse-suited", a.morse_suited, b.morse_suited)?;
    cmp("4-cycles", a.four_cycle_free, b.four_cycle_free)?;
    ensure(a.spans.len() == b.spans.len(), "span lists differ")?;
    for (x, y) in a.spans.iter().zip(&b.spans) {
        cmp(&format!("span {}", x.pair), x.verdict, y.verdict)?;
        ensure(x.witness == y.witness, format!("span {}: witnesses differ", x.pair))?;
    }
    Ok(())
}

const SPECS: usize = 120;

fn construction(dir: &Path) -> Outcome {
    let o = run(&["graph", "gen", "--n", "1"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).map_err(|e| e.to_string())?;
    ensure(o.code == 0 && v["modulus"] == 397, format!("graph gen --n 1 gave modulus {}", v["modulus"]))?;
    let path = dir.join("spec.json");
    run(&["graph", "gen", "--n", "1", "-o", path_str(&path)]);
    let o = run(&["graph", "verify", path_str(&path), "--backend", "both"]);
    ensure(o.code == 0, format!("verify --backend both exited {}", o.code))?;
    let mut slowest = Duration::ZERO;
    for n in [2u32, 3] {
        let path = dir.join(format!("spec{n}.json"));
        run(&["graph", "gen", "--n", &n.to_string(), "-o", path_str(&path)]);
        let (o, t) = timed(|| run(&["graph", "verify", path_str(&path), "--backend", "arithmetic"]));
        ensure(o.code == 0, format!("arithmetic verify at n = {n} exited {}", o.code))?;
        ensure(t < Duration::from_secs(1), format!("arithmetic verify at n = {n} took {t:?}"))?;
        slowest = slowest.max(t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ps = primes(5, 101);
    let (result, t) = timed(|| -> Result<(usize, usize), String> {
        let (mut failing, mut sizeable) = (0, 0);
        for i in 0..SPECS {
            let p = ps[rng.gen_range(0..ps.len())] as u128;
            let s = random_spec(&mut rng, p);
            let g = s.realize(&Budget::default()).map_err(|e| e.to_string())?;
            let a = verify_sizeable(SizeableInput::Graph(&g), Backend::Explicit).unwrap();
            let b = verify_sizeable(SizeableInput::Spec(&s), Backend::Arithmetic).unwrap();
            backends_agree(&a, &b).map_err(|e| format!("random spec {i} (p = {p}): {e}"))?;
            sizeable += a.overall().is_pass() as usize;
            failing += (a.overall() == Verdict::Fail) as usize;
        }
        Ok((failing, sizeable))
    });
    let (failing, sizeable) = result?;
    ensure(t < Duration::from_secs(30), format!("random specs took {t:?}"))?;
    Ok(format!(
        "p = 397 at n = 1, both backends pass; arithmetic n = 2, 3 in {slowest:?} at most; \
         {SPECS} random specs agree in {t:.1?} ({sizeable} sizeable, {failing} not)"
    ))
}

fn plain_graph(na: usize, nb: usize, edges: Vec<(usize, usize)>) -> MorseGraph {
    let mut blocks = BTreeMap::new();
    blocks.insert("A1+".parse::<BlockId>().unwrap(), (0..na).collect());
    blocks.insert("B1+".parse::<BlockId>().unwrap(), (0..nb).collect());
    let a = (0..na).map(|i| format!("a{i}")).collect();
    let b = (0..nb).map(|i| format!("b{i}")).collect();
    MorseGraph::from_parts(1, a, b, blocks, edges).unwrap()
}

fn euler_modes() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let budget = Budget::default();
    for i in 0..150 {
        let na = rng.gen_range(1..=4);
        let nb = rng.gen_range(1..=(8 - na).min(4));
        let mut edges = Vec::new();
        for a in 0..na {
            for b in 0..nb {
                if rng.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let x = build_x_gamma(&plain_graph(na, nb, edges));
        let e = cell_counts(&x, CountMode::Enumerate, &budget).map_err(|e| format!("{e:?}"))?;
        let c = cell_counts(&x, CountMode::ClosedForm, &budget).map_err(|e| format!("{e:?}"))?;
        ensure(e == c, format!("graph {i}: enumerated {e:?}, closed form {c:?}"))?;
    }
    Ok("enumeration equals closed form on 150 random bipartite graphs with at most 8 vertices".into())
}

fn euler_xgamma_polynomial() -> Outcome {
    let budget = Budget::default();
    let mut mismatches = Vec::new();
    let ps = primes(5, 101);
    for &p in &ps {
        let g = build_modular_spec(1, Some(p as u128))
            .and_then(|s| s.realize(&budget))
            .map_err(|e| format!("p = {p}: {e}"))?;
        let m = BigInt::from(g.edges().len());
        let a = BigInt::from(g.side_len(cubemorse_core::bigraph::Side::A));
        let b = BigInt::from(g.side_len(cubemorse_core::bigraph::Side::B));
        let [v, e, f, c] = xgamma_counts_exact(&a, &b, &m);
        let mut chi = v - e + f - c;
        if p <= 7 {
            let x = build_x_gamma(&g);
            let wide = Budget { cells: 50_000_000, ..budget };
            let n = cell_counts(&x, CountMode::Enumerate, &wide).map_err(|e| format!("p = {p}: {e:?}"))?;
            ensure(BigInt::from(n.chi()) == chi, format!("p = {p}: enumeration disagrees with closed form"))?;
            chi = BigInt::from(n.chi());
        }
        let formula = euler_formula_xgamma(1, p as u128);
        if chi != formula {
            mismatches.push((p, chi, formula));
        }
    }
    match mismatches.first() {
        None => Ok(format!("χ equals the polynomial for all {} primes p in 5..=101", ps.len())),
        Some((p, chi, formula)) => Err(format!(
            "χ differs from the polynomial for {} of {} primes; first at p = {p}: χ = {chi}, polynomial = {formula}",
            mismatches.len(),
            ps.len()
        )),
    }
}

fn euler_cover_decomposition() -> Outcome {
    for n in 2..=5 {
        for p in [5u128, 7, 11, 13] {
            let (d, f) = (euler_y_cover_decomposition(n, p), euler_formula_y(n, p));
            ensure(d == f, format!("(n, p) = ({n}, {p}): decomposition {d}, formula {f}"))?;
        }
    }
    ensure(euler_formula_y(2, 5) == BigInt::from(-400), "value at (2, 5) is not -400")?;
    Ok("decomposition equals the cover polynomial for n in 2..=5, p in {5, 7, 11, 13}; -400 at (2, 5)".into())
}

fn euler_negativity() -> Outcome {
    let zero = BigInt::from(0);
    let ps = primes(2, 1000);
    for &p in &ps {
        for n in 1..=30 {
            ensure(euler_formula_xgamma(n, p as u128) < zero, format!("X polynomial not negative at ({n}, {p})"))?;
            if n >= 2 {
                ensure(euler_formula_y(n, p as u128) < zero, format!("Y polynomial not negative at ({n}, {p})"))?;
            }
        }
    }
    Ok(format!("both polynomials negative for all {} primes below 1000 (n in 1..=30, n ≥ 2 for the cover)", ps.len()))
}

fn certificate(args: &[&str]) -> Result<Duration, String> {
    let (o, t) = timed(|| run(args));
    let v = json(&o);
    ensure(o.code == 0, format!("{} exited {}", args.join(" "), o.code))?;
    ensure(v["certificate"]["level"] == "m = 1 (Σ²)", format!("{}: no certificate at m = 1", args.join(" ")))?;
    ensure(t < Duration::from_secs(60), format!("{} took {t:?}", args.join(" ")))?;
    Ok(t)
}

fn bnsr_certificates(dir: &Path) -> Outcome {
    let mut parts = Vec::new();
    for p in [5, 19] {
        let g = spec(dir, &format!("n1p{p}.json"), 1, p);
        let args = ["bnsr", "check", "--family", "xgamma", "--graph", path_str(&g), "--all-chambers", "--engine", "both"];
        let o = run(&args);
        let names: Vec<String> =
            json(&o)["checks"].as_array().into_iter().flatten().map(|c| c["name"].as_str().unwrap_or("").to_string()).collect();
        for engine in ["explicit", "symbolic"] {
            ensure(names.iter().any(|n| n.ends_with(&format!("({engine})"))), format!("p = {p}: {engine} engine did not run"))?;
        }
        let t = certificate(&args)?;
        // p = 5 has a 4-cycle; p = 19 is the sizeable instance.
        let sizeable = run(&["graph", "verify", path_str(&g)]).code == 0;
        ensure(p != 19 || sizeable, "p = 19 is not sizeable")?;
        let what = if sizeable { "sizeable" } else { "spans certified, has a 4-cycle" };
        parts.push(format!("xgamma p = {p} ({what}) in {t:.1?}"));
    }
    for (n, p) in [("2", "5"), ("3", "7")] {
        let t = certificate(&["bnsr", "check", "--family", "theta", "--n", n, "--p", p, "--all-chambers"])?;
        parts.push(format!("theta ({n}, {p}) in {t:.1?}"));
    }
    Ok(format!("certificates at m = 1 in every chamber: {}", parts.join(", ")))
}

fn negative_controls(dir: &Path) -> Outcome {
    let path = constant_spec(dir, 2, 5);
    let o = run(&["graph", "verify", path_str(&path)]);
    ensure(o.code == 1, format!("σ ≡ {{0}} verify exited {}", o.code))?;
    let o = run(&["bnsr", "check", "--family", "xgamma", "--graph", path_str(&path), "--all-chambers"]);
    ensure(o.code == 1, format!("σ ≡ {{0}} bnsr check exited {}", o.code))?;
    let v = json(&o);
    ensure(has_witness(&v, "components"), "σ ≡ {0} bnsr check has no disconnected-link witness")?;
    ensure(v.get("certificate").is_none(), "σ ≡ {0} received a certificate")?;

    let zero = VoltageCover::zero(2, 5).map_err(|e| format!("{e:?}"))?;
    ensure(verify_cover_properties(&zero).overall() == Verdict::Fail, "zero-voltage cover passed")?;

    let hollow = SimplicialComplex::new(vec!["a", "b", "c"], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    ensure(hollow.flag_violation() == Some(vec![0, 1, 2]), "hollow triangle reported flag")?;
    let file = dir.join("hollow.json");
    std::fs::write(&file, r#"{"simplices": [["a", "b"], ["b", "c"], ["a", "c"]]}"#).unwrap();
    let o = run(&["complex", "flag-check", "--link", path_str(&file)]);
    ensure(o.code == 1, format!("flag-check on the hollow triangle exited {}", o.code))?;
    Ok("σ ≡ {0} at (2, 5) fails verify and bnsr with a disconnected link; zero voltage fails; hollow triangle is not flag".into())
}

const SUITES: [&str; 7] = [
    "splits_are_scale_invariant",
    "theta_splits_are_scale_invariant",
    "chamber_completeness_sampled",
    "link_composition",
    "join_criterion_implies_acyclic",
    "deck_translation_preserves_preimages",
    "dead_links_full_on_small_graphs",
];

fn property_suites() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    // A separate target directory keeps the nested build off the outer lock.
    let target = root.join("target/acceptance");
    let cmd = |extra: &[&str]| {
        let mut c = Command::new(&cargo);
        c.current_dir(&root).env("CARGO_TARGET_DIR", &target).args(["test", "-p", "cubemorse-core", "--offline"]).args(extra);
        c
    };
    let build = cmd(&["--no-run"]).output().map_err(|e| format!("cannot start cargo: {e}"))?;
    ensure(build.status.success(), format!("building the core tests failed: {}", String::from_utf8_lossy(&build.stderr)))?;
    let (out, t) = timed(|| cmd(&[]).output());
    let out = out.map_err(|e| format!("cannot start cargo: {e}"))?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), format!("core test suite failed:\n{text}"))?;
    for name in SUITES {
        ensure(text.lines().any(|l| l.contains(name) && l.ends_with("ok")), format!("{name} did not report ok"))?;
    }
    let passed: usize = text
        .lines()
        .filter_map(|l| l.strip_prefix("test result: ok. "))
        .filter_map(|l| l.split(' ').next()?.parse::<usize>().ok())
        .sum();
    ensure(t < Duration::from_secs(300), format!("core suite took {t:?}"))?;
    Ok(format!("{passed} core tests green in {:.0?}, including {}", t, SUITES.join(", ")))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let d = dir.path();
    let criteria: Vec<Criterion> = vec![
        ("1   construction soundness", Box::new(|| construction(d))),
        ("2a  cell counts, enumeration vs closed form", Box::new(euler_modes)),
        ("2b  χ(X_Γ) vs the closed-form polynomial", Box::new(euler_xgamma_polynomial)),
        ("2c  cover Euler characteristic", Box::new(euler_cover_decomposition)),
        ("2d  negativity of both polynomials", Box::new(euler_negativity)),
        ("3   BNSR hypothesis certificates", Box::new(|| bnsr_certificates(d))),
        ("4   negative controls", Box::new(|| negative_controls(d))),
        ("5   property suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
