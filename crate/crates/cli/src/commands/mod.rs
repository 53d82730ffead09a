mod bnsr;
mod complex;
mod graph;

use crate::cli::{BnsrCmd, Command, ComplexCmd, GraphCmd};
use crate::{CliError, Context, Output};

pub fn dispatch(command: &Command, ctx: &Context) -> Result<Output, CliError> {
    match command {
        Command::Graph { cmd } => match cmd {
            GraphCmd::Gen { n, p, output } => graph::gen(*n, *p, output.as_deref(), ctx),
            GraphCmd::Verify { file, backend } => graph::verify(file, *backend, ctx).map(|r| Output::Report(Box::new(r))),
        },
        Command::Complex { cmd } => match cmd {
            ComplexCmd::Stats { family, graph, n, p, mode, compare_formula } => {
                complex::stats(*family, graph.as_deref(), *n, *p, *mode, *compare_formula, ctx).map(|r| Output::Report(Box::new(r)))
            }
            ComplexCmd::FlagCheck { family, graph, n, link } => {
                complex::flag_check(*family, graph.as_deref(), *n, link.as_deref(), ctx).map(|r| Output::Report(Box::new(r)))
            }
        },
        Command::Bnsr { cmd } => match cmd {
            BnsrCmd::Chambers { family, n, output } => bnsr::chambers(*family, *n, output.as_deref(), ctx),
            BnsrCmd::Check { .. } => bnsr::check(cmd, ctx),
        },
    }
}

fn missing(flag: &str, why: &str) -> CliError {
    CliError::Input(format!("{flag} is required {why}"))
}
