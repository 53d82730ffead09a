use std::path::Path;

use cubemorse_core::bigraph::{
    build_modular_spec, verify_sizeable, Backend, ModularSpec, SizeabilityReport, SizeableInput, SpecError,
};
use cubemorse_core::Verdict;
use serde_json::json;

use crate::cli::BackendArg;
use crate::convert;
use crate::io::{self, InstanceFile};
use crate::{CliError, Context, Output, Report};

pub fn gen(n: u32, p: Option<u128>, output: Option<&Path>, ctx: &Context) -> Result<Output, CliError> {
    let spec = build_modular_spec(n, p).map_err(|e| CliError::Input(e.to_string()))?;
    let text = io::to_pretty(&io::spec_json(&spec));
    let Some(path) = output else {
        return Ok(Output::Raw(text));
    };
    io::write_text(path, &text)?;
    let mut r = Report::new(&ctx.command, InstanceFile::Spec(spec).describe());
    r.section("output", path.display().to_string().into());
    Ok(Output::Report(Box::new(r)))
}

/// Realizes a spec for the explicit side. Over budget, `optional` turns the
/// error into `None`.
pub fn realize(
    spec: &ModularSpec,
    ctx: &Context,
    optional: bool,
) -> Result<Option<cubemorse_core::bigraph::MorseGraph>, CliError> {
    match spec.realize(&ctx.budget) {
        Ok(g) => Ok(Some(g)),
        Err(e @ SpecError::BudgetExceeded { .. }) => {
            if optional {
                Ok(None)
            } else {
                Err(CliError::Budget(e.to_string()))
            }
        }
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

fn run_backend(input: SizeableInput<'_>, backend: Backend) -> SizeabilityReport {
    verify_sizeable(input, backend).expect("backend matches its input")
}

pub fn verify(file: &Path, backend: BackendArg, ctx: &Context) -> Result<Report, CliError> {
    let inst = io::read_instance(file)?;
    let mut r = Report::new(&ctx.command, inst.describe());
    let both = backend == BackendArg::Both;
    let mut reports = Vec::new();
    if matches!(backend, BackendArg::Explicit | BackendArg::Both) {
        match &inst {
            InstanceFile::Graph(g) => reports.push(run_backend(SizeableInput::Graph(g), Backend::Explicit)),
            InstanceFile::Spec(spec) => match realize(spec, ctx, both)? {
                Some(g) => reports.push(run_backend(SizeableInput::Graph(&g), Backend::Explicit)),
                None => r.note(format!(
                    "explicit backend skipped: {} vertices exceed the vertex budget of {}",
                    spec.vertex_count(),
                    ctx.budget.vertices
                )),
            },
        }
    }
    if matches!(backend, BackendArg::Arithmetic | BackendArg::Both) {
        match &inst {
            InstanceFile::Spec(spec) => reports.push(run_backend(SizeableInput::Spec(spec), Backend::Arithmetic)),
            InstanceFile::Graph(_) if both => r.note("arithmetic backend skipped: it needs a modular spec"),
            InstanceFile::Graph(_) => {
                return Err(CliError::Input("the arithmetic backend needs a modular spec, not an explicit graph".into()))
            }
        }
    }
    for rep in &reports {
        r.check(format!("sizeable ({})", rep.backend.as_str()), rep.overall(), convert::sizeability_line(rep), convert::sizeability(rep));
    }
    if let [a, b] = &reports[..] {
        // An inconclusive component is a missing answer, not a disagreement.
        let clash = |x: Verdict, y: Verdict| x != y && x != Verdict::Inconclusive && y != Verdict::Inconclusive;
        let mut clashes = Vec::new();
        if clash(a.morse_suited, b.morse_suited) {
            clashes.push("Morse-suitedness".to_string());
        }
        if clash(a.four_cycle_free, b.four_cycle_free) {
            clashes.push("4-cycles".to_string());
        }
        if a.spans.len() != b.spans.len() {
            clashes.push("span list".to_string());
        }
        for (x, y) in a.spans.iter().zip(&b.spans) {
            if x.pair != y.pair || clash(x.verdict, y.verdict) {
                clashes.push(format!("span {}", x.pair));
            }
        }
        let line = if clashes.is_empty() {
            "no component where both backends decided differs".to_string()
        } else {
            format!("backends disagree on {}", clashes.join(", "))
        };
        r.check(
            "backend agreement",
            Verdict::from_bool(clashes.is_empty()),
            line,
            json!({ "explicit": convert::verdict(a.overall()), "arithmetic": convert::verdict(b.overall()), "disagreements": clashes }),
        );
    }
    Ok(r)
}
