use std::path::Path;

use cubemorse_core::cubeworld::{
    build_theta_cube, build_x_gamma, cell_counts, check_flag_links, euler_formula_xgamma, euler_formula_y,
    euler_y_cover_decomposition, xgamma_counts_exact, CellCounts, CountMode, CubeError, ProductCubeComplex,
};
use cubemorse_core::bigraph::{MorseGraph, Side};
use cubemorse_core::Verdict;
use num_bigint::BigInt;
use serde_json::json;

use super::graph::realize;
use super::missing;
use crate::cli::{FamilyArg, ModeArg};
use crate::convert::{self, number};
use crate::io::{self, InstanceFile};
use crate::{CliError, Context, Report};

fn cube_error(e: CubeError) -> CliError {
    match e {
        CubeError::BudgetExceeded { .. } => CliError::Budget(format!("{e}; raise it with --budget or CUBEMORSE_BUDGET")),
        other => CliError::Input(other.to_string()),
    }
}

fn big(c: CellCounts) -> [BigInt; 4] {
    [c.v.into(), c.e.into(), c.f.into(), c.c.into()]
}

fn graph_counts(g: &MorseGraph) -> [BigInt; 4] {
    let a = BigInt::from(g.side_len(Side::A));
    let b = BigInt::from(g.side_len(Side::B));
    xgamma_counts_exact(&a, &b, &BigInt::from(g.edges().len()))
}

/// Closed-form counts of X_Γ for a spec or graph, without realizing a spec.
pub(super) fn instance_counts(inst: &InstanceFile) -> [BigInt; 4] {
    match inst {
        InstanceFile::Graph(g) => graph_counts(g),
        InstanceFile::Spec(s) => {
            let p = BigInt::from(s.modulus());
            let side = BigInt::from(2 * s.rank()) * &p;
            let residues: usize = s.order().iter().map(|q| s.residues(*q).len()).sum();
            xgamma_counts_exact(&side, &side, &(BigInt::from(residues) * &p))
        }
    }
}

fn theta_n(n: Option<u32>) -> Result<u32, CliError> {
    n.ok_or_else(|| missing("--n", "for the theta family"))
}

pub fn stats(
    family: FamilyArg,
    graph: Option<&Path>,
    n: Option<u32>,
    p: Option<u128>,
    mode: ModeArg,
    compare_formula: bool,
    ctx: &Context,
) -> Result<Report, CliError> {
    match family {
        FamilyArg::Xgamma => {
            let path = graph.ok_or_else(|| missing("--graph", "for the xgamma family"))?;
            let inst = io::read_instance(path)?;
            let mut r = Report::new(&ctx.command, inst.describe());
            let closed = instance_counts(&inst);
            let counts = match mode {
                ModeArg::Closed => closed,
                ModeArg::Enum => {
                    let g = match &inst {
                        InstanceFile::Graph(g) => g.clone(),
                        InstanceFile::Spec(s) => realize(s, ctx, false)?.expect("required realization"),
                    };
                    let x = build_x_gamma(&g);
                    let enumerated = big(cell_counts(&x, CountMode::Enumerate, &ctx.budget).map_err(cube_error)?);
                    let same = enumerated == closed;
                    r.check(
                        "enumeration matches closed form",
                        Verdict::from_bool(same),
                        format!("chi {} by enumeration, {} closed", convert::chi(&enumerated), convert::chi(&closed)),
                        json!({ "enumerated": convert::counts(&enumerated), "closed": convert::counts(&closed) }),
                    );
                    enumerated
                }
            };
            r.section("mode", mode_name(mode).into());
            r.section("counts", convert::counts(&counts));
            if compare_formula {
                let InstanceFile::Spec(s) = &inst else {
                    return Err(CliError::Input("--compare-formula needs a modular spec (rank and modulus)".into()));
                };
                let formula = euler_formula_xgamma(s.rank(), s.modulus());
                compare(&mut r, convert::chi(&counts), formula);
            }
            Ok(r)
        }
        FamilyArg::Theta => {
            let n = theta_n(n)?;
            let x = build_theta_cube(n).map_err(cube_error)?;
            let mut r = Report::new(&ctx.command, json!({ "kind": "theta cube", "rank": n }));
            let closed = big(cell_counts(&x, CountMode::ClosedForm, &ctx.budget).map_err(cube_error)?);
            let counts = match mode {
                ModeArg::Closed => closed,
                ModeArg::Enum => {
                    let enumerated = big(cell_counts(&x, CountMode::Enumerate, &ctx.budget).map_err(cube_error)?);
                    r.check(
                        "enumeration matches closed form",
                        Verdict::from_bool(enumerated == closed),
                        format!("chi {}", convert::chi(&enumerated)),
                        json!({ "enumerated": convert::counts(&enumerated), "closed": convert::counts(&closed) }),
                    );
                    enumerated
                }
            };
            r.section("mode", mode_name(mode).into());
            r.section("counts", convert::counts(&counts));
            if let Some(p) = p {
                let cover = euler_y_cover_decomposition(n, p);
                r.section("cover", json!({ "modulus": number(p), "chi": number(&cover) }));
                if compare_formula {
                    compare(&mut r, cover, euler_formula_y(n, p));
                }
            } else if compare_formula {
                return Err(missing("--p", "to compare the cover's Euler characteristic"));
            }
            Ok(r)
        }
    }
}

fn mode_name(m: ModeArg) -> &'static str {
    match m {
        ModeArg::Enum => "enumerate",
        ModeArg::Closed => "closed",
    }
}

fn compare(r: &mut Report, chi: BigInt, formula: BigInt) {
    let same = chi == formula;
    r.check(
        "euler characteristic matches formula",
        Verdict::from_bool(same),
        format!("chi {chi}, formula {formula}"),
        json!({ "chi": number(&chi), "formula": number(&formula) }),
    );
}

fn flag_result(r: &mut Report, x: &ProductCubeComplex, ctx: &Context) -> Result<(), CliError> {
    match check_flag_links(x, &ctx.budget).map_err(cube_error)? {
        None => r.check("flag links", Verdict::Pass, "every vertex link is flag", json!({ "counterexample": null })),
        Some(c) => {
            let clique: Vec<String> = c.clique.iter().map(|l| x.link_vertex_name(l)).collect();
            let vertex = x.vertex_name(c.vertex);
            r.check(
                "flag links",
                Verdict::Fail,
                format!("link of {vertex} misses the clique {{{}}}", clique.join(", ")),
                json!({ "counterexample": { "vertex": vertex, "clique": clique } }),
            );
        }
    }
    Ok(())
}

pub fn flag_check(
    family: Option<FamilyArg>,
    graph: Option<&Path>,
    n: Option<u32>,
    link: Option<&Path>,
    ctx: &Context,
) -> Result<Report, CliError> {
    if let Some(path) = link {
        let k = io::read_complex(path)?;
        let mut r = Report::new(&ctx.command, json!({ "kind": "complex", "vertices": k.vertex_count(), "f_vector": k.f_vector() }));
        match k.flag_violation() {
            None => r.check("flag", Verdict::Pass, "every clique spans a simplex", json!({ "counterexample": null })),
            Some(s) => {
                let clique: Vec<&String> = s.iter().map(|&i| k.label(i)).collect();
                r.check(
                    "flag",
                    Verdict::Fail,
                    format!("clique {{{}}} spans no simplex", clique.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")),
                    json!({ "counterexample": { "clique": clique } }),
                );
            }
        }
        return Ok(r);
    }
    match family.expect("clap requires --family or --link") {
        FamilyArg::Xgamma => {
            let path = graph.ok_or_else(|| missing("--graph", "for the xgamma family"))?;
            let inst = io::read_instance(path)?;
            let mut r = Report::new(&ctx.command, inst.describe());
            let g = match inst {
                InstanceFile::Graph(g) => g,
                InstanceFile::Spec(s) => realize(&s, ctx, false)?.expect("required realization"),
            };
            flag_result(&mut r, &build_x_gamma(&g), ctx)?;
            Ok(r)
        }
        FamilyArg::Theta => {
            let n = theta_n(n)?;
            let x = build_theta_cube(n).map_err(cube_error)?;
            let mut r = Report::new(&ctx.command, json!({ "kind": "theta cube", "rank": n }));
            flag_result(&mut r, &x, ctx)?;
            Ok(r)
        }
    }
}
