use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::report::OutputFormat;

/// Exact intersection homology and cyclic homology workbench.
#[derive(Debug, Parser)]
#[command(name = "ichom", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simplicial betti numbers of a complex file.
    Betti {
        file: PathBuf,
    },
    /// Intersection betti numbers of a filtered complex file.
    Ih {
        file: PathBuf,
        /// Perversity values `p_0,p_1,...,p_n`.
        #[arg(long, conflicts_with_all = ["alpha", "beta"])]
        perversity: Option<String>,
        #[command(flatten)]
        control: ControlArgs,
    },
    /// Hochschild, cyclic or periodic cyclic homology of an algebra file.
    Cyclic {
        which: CyclicKind,
        file: PathBuf,
        /// Truncation degree K.
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
    },
    /// Perversity derived from pinching and control numbers.
    Perversity {
        /// Dimension n of the stratified space.
        #[arg(long)]
        dimension: usize,
        #[command(flatten)]
        control: ControlArgs,
    },
    /// Built-in cross-check suites.
    Verify {
        /// Suite name, or `all`.
        #[arg(default_value = "all")]
        suite: String,
        /// Truncation degree for the algebraic suites; each suite has its own default.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Cutoff convention(s) reported by the cone cross-checks.
        #[arg(long, value_enum, default_value_t = ConventionArg::Both)]
        cutoff_convention: ConventionArg,
    },
}

#[derive(Debug, Args, Default)]
pub struct ControlArgs {
    /// Pinching numbers `j:value,...` for the active codimensions.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Control numbers `j:value,...` for the active codimensions.
    #[arg(long)]
    pub beta: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CyclicKind {
    Hh,
    Hc,
    Hp,
    Sbi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    #[value(name = "m-1")]
    MinusOne,
    #[value(name = "m")]
    Exact,
    Both,
}
