mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sigchrom::coloring::DEFAULT_BUDGET;

use crate::output::emit;

#[derive(Parser, Debug)]
#[command(
    name = "sigchrom",
    version,
    about = "Chromatic polynomials of signed graphs"
)]
struct Cli {
    /// Print a JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Work budget for counting and deletion-contraction.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic polynomial of a graph file.
    Poly {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Number of proper colorings with radius k.
    Count {
        file: PathBuf,
        #[arg(short)]
        k: u32,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Smallest λ admitting a proper (zero-free when even) coloring.
    ChromaticNumber {
        /// Graph file; omit with --book.
        file: Option<PathBuf>,
        #[arg(long)]
        book: bool,
        #[command(flatten)]
        spec: BookArgs,
    },
    /// Polynomials of a signed book graph.
    Book {
        #[command(flatten)]
        spec: BookArgs,
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Compute by every method and compare.
        #[arg(long)]
        all: bool,
        /// Show the closed form factored where one exists.
        #[arg(long)]
        factored: bool,
        /// Print the graph in the signed-graph file format instead.
        #[arg(long)]
        emit: bool,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Switching-isomorphism classes of signatures on B(m,n).
    Classes {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = sigchrom::book::DEFAULT_CLASS_EDGE_LIMIT)]
        edge_limit: usize,
    },
    /// Cross-check closed forms, the engine and the counting oracle.
    Verify {
        /// Page lengths, e.g. `3-5` or `4`.
        #[arg(short, default_value = "3-5")]
        m: String,
        /// Page counts, e.g. `1-3`.
        #[arg(short, default_value = "1-3")]
        n: String,
        /// Skip the interpolation route.
        #[arg(long)]
        no_oracle: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct ModeArgs {
    /// Zero-free chromatic polynomial instead of the chromatic one.
    #[arg(long)]
    zero_free: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct EvalArgs {
    /// Evaluate the polynomial at x.
    #[arg(long, allow_hyphen_values = true)]
    eval: Option<i64>,
    /// Allow --eval at arguments without a counting meaning.
    #[arg(long)]
    eval_any: bool,
}

#[derive(Args, Debug, Clone)]
struct BookArgs {
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    n: Option<usize>,
    /// Signature level l, i.e. σ_l.
    #[arg(short, conflicts_with = "sig")]
    l: Option<usize>,
    /// Signature selector: a level or `uv`.
    #[arg(long)]
    sig: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Closed,
    Engine,
    OracleInterpolate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli);
    emit(result, cli.json)
}
