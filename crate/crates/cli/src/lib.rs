//! Command-line front end: file formats, JSON reports, and the `graph`,
//! `complex` and `bnsr` commands.
//!
//! Exit codes: 0 pass, 1 fail, 2 inconclusive (including exhausted
//! budgets), 3 input error.

mod cli;
mod commands;
mod convert;
mod error;
pub mod io;
mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use cubemorse_core::{Budget, Verdict};

pub use error::CliError;
pub use report::{Check, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// What a command produced: a report, or an artifact printed verbatim.
pub enum Output {
    Report(Box<Report>),
    Raw(String),
}

pub struct Context {
    pub command: String,
    pub budget: Budget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let parsed = match cli::Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_PASS, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text },
            };
        }
    };
    let failed = |e: CliError| Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") };
    let command = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    let env = std::env::var("CUBEMORSE_BUDGET").ok();
    let budget = match io::resolve_budget(env.as_deref(), parsed.global.budget, parsed.global.vertex_budget) {
        Ok(b) => b,
        Err(e) => return failed(e),
    };
    let ctx = Context { command, budget };
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(parsed.global.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => return failed(CliError::Input(format!("cannot start worker threads: {e}"))),
    };
    match pool.install(|| commands::dispatch(&parsed.command, &ctx)) {
        Ok(Output::Raw(text)) => Outcome { code: EXIT_PASS, stdout: text, stderr: String::new() },
        Ok(Output::Report(r)) => {
            let elapsed = parsed.global.timing.then(|| start.elapsed());
            let stdout = if parsed.global.summary { r.summary(elapsed) } else { io::to_pretty(&r.to_json(elapsed)) };
            Outcome { code: exit_code(r.overall()), stdout, stderr: String::new() }
        }
        Err(e) => failed(e),
    }
}
