use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cubemorse", version, about = "Checks for sizeable graphs, the cube complexes built from them, and the link conditions of their height maps")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// JSON report on stdout (the default).
    #[arg(long, global = true, conflicts_with = "summary")]
    pub json: bool,
    /// Human-readable report instead of JSON.
    #[arg(long, global = true)]
    pub summary: bool,
    /// Worker threads; reports do not depend on this.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Cell enumeration budget (overrides CUBEMORSE_BUDGET).
    #[arg(long, global = true, value_name = "CELLS")]
    pub budget: Option<u64>,
    /// Vertex budget for realizing graphs and walking complexes.
    #[arg(long, global = true, value_name = "N")]
    pub vertex_budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Modular specs and sizeability.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Cell counts and the flag condition.
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// Character chambers and link connectivity checks.
    Bnsr {
        #[command(subcommand)]
        cmd: BnsrCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum GraphCmd {
    /// Write the modular spec of the construction.
    Gen {
        #[arg(long)]
        n: u32,
        /// Use this prime instead of the construction's modulus.
        #[arg(long)]
        p: Option<u128>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check Morse-suitedness, 4-cycles and block-pair spans.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BackendArg::Both)]
        backend: BackendArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComplexCmd {
    /// Cell counts and Euler characteristic.
    Stats {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Spec or graph file (xgamma).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Theta rank.
        #[arg(long)]
        n: Option<u32>,
        /// Cover modulus (theta).
        #[arg(long)]
        p: Option<u128>,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
        /// Compare the Euler characteristic with the closed polynomial.
        #[arg(long)]
        compare_formula: bool,
    },
    /// Check that every vertex link is flag.
    #[command(group(ArgGroup::new("target").required(true).args(["family", "link"])))]
    FlagCheck {
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<u32>,
        /// A single complex given by its maximal simplices.
        #[arg(long)]
        link: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BnsrCmd {
    /// List the sign chambers of the character sphere.
    Chambers {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the link conditions for one character or for every chamber.
    #[command(group(ArgGroup::new("characters").required(true).args(["lambda", "all_chambers", "chambers"])))]
    Check {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Spec or graph file (xgamma).
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        p: Option<u64>,
        /// Voltage table replacing the standard cover (theta).
        #[arg(long)]
        voltage: Option<PathBuf>,
        /// Comma-separated rationals, e.g. "1,-2/3".
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        all_chambers: bool,
        /// Chamber file as written by `bnsr chambers`.
        #[arg(long)]
        chambers: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = EngineArg::Both)]
        engine: EngineArg,
        /// Check every vertex of an explicit complex.
        #[arg(long)]
        exhaustive: bool,
        /// Connectivity level; 0 and 1 are supported.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        m: i8,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Explicit,
    Arithmetic,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Xgamma,
    Theta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Enum,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Explicit,
    Symbolic,
    Both,
}
