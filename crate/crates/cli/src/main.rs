//! `sroman`: generate ladder-family graphs, compute signed Roman domination
//! numbers, build and verify labelings, and tabulate closed forms against
//! exact optima.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sroman_core::Family;

/// Exit status for input and parameter errors.
pub const EXIT_INPUT: u8 = 1;
/// Exit status when a labeling fails verification.
pub const EXIT_INVALID: u8 = 2;
/// Exit status when the table finds a disagreement.
pub const EXIT_DISCREPANCY: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sroman",
    version,
    about = "Exact signed Roman domination for ladder graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family graph in edge-list format.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the minimum weight and an optimal labeling.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Single-threaded search with the lexicographically smallest witness.
        #[arg(long)]
        deterministic: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the explicit labeling for a ladder-family instance.
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a labeling against a graph.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Labeling file, or a certificate produced by `solve` or `construct`.
        #[arg(long, short = 'l')]
        labeling: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the degree and size lower bounds.
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate closed form, construction and exact optimum over a range of n.
    Table {
        #[arg(value_name = "FAMILY")]
        family_pos: Option<Family>,
        #[arg(value_name = "FROM")]
        from_pos: Option<usize>,
        #[arg(value_name = "TO")]
        to_pos: Option<usize>,
        #[arg(long, conflicts_with = "family_pos")]
        family: Option<Family>,
        #[arg(long, conflicts_with = "from_pos")]
        from: Option<usize>,
        #[arg(long, conflicts_with = "to_pos")]
        to: Option<usize>,
        /// Exit with status 3 when any row disagrees.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Render a graph, optionally labeled, as Graphviz DOT.
    Dot {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, short = 'l')]
        labeling: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// A graph named by family and size, positionally or with flags, or read from
/// an edge-list file.
#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(value_name = "FAMILY")]
    pub family_pos: Option<Family>,
    #[arg(value_name = "N")]
    pub n_pos: Option<usize>,
    #[arg(long, conflicts_with = "family_pos")]
    pub family: Option<Family>,
    #[arg(long, conflicts_with = "n_pos")]
    pub n: Option<usize>,
    /// Edge-list file; `-` reads stdin.
    #[arg(long = "in", short = 'i', value_name = "PATH", conflicts_with_all = ["family", "family_pos"])]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the result here instead of stdout.
    #[arg(long, short = 'o', value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// One `key=value` line per field.
    #[arg(long)]
    pub porcelain: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Ladder DP for ladder and circular ladder families, branch-and-bound otherwise.
    Auto,
    Exhaustive,
    Bb,
    Dp,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
