//! The `pred` command-line tool: JSON-over-pipes `create | reduce | solve`
//! plus `path`, `show`, `list`, `evaluate` and `examples`.

pub mod commands;
pub mod error;
pub mod format;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "pred", version, about = "Create, reduce and solve NP-hard problem instances")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit an instance document.
    Create(CreateArgs),
    /// Reduce an instance or envelope along the cheapest path to a target.
    Reduce {
        /// Input document, `-` for stdin.
        input: String,
        /// Target problem name or alias.
        #[arg(long)]
        to: String,
        /// Print the chosen route and per-step overheads to stderr.
        #[arg(long)]
        path: bool,
    },
    /// Solve an instance or envelope exactly.
    Solve {
        /// Input document, `-` for stdin.
        input: String,
        /// Print `Problem:`/`Solver:`/`Solution:`/`Evaluation:` lines instead of JSON.
        #[arg(long)]
        pretty: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Show the cheapest route between two problems.
    Path { from: String, to: String },
    /// Describe a problem: measures, complexity, reductions, example.
    Show { problem: String },
    /// List registered variants with their complexities.
    List {
        /// Emit counts and the topology report as JSON.
        #[arg(long)]
        stats: bool,
    },
    /// Score a configuration against an instance.
    Evaluate {
        /// Input document, `-` for stdin.
        input: String,
        /// Comma-separated variable values.
        #[arg(long)]
        config: String,
    },
    /// Export the canonical example database as JSON.
    Examples,
}

#[derive(Debug, Args)]
pub struct CreateArgs {
    /// Problem name, alias, or canonical example id with `--example`.
    pub problem: String,
    /// Emit the canonical example.
    #[arg(long, conflicts_with_all = ["file", "graph", "clauses", "matrix", "sets"])]
    pub example: bool,
    /// Read an instance document, `-` for stdin.
    #[arg(long)]
    pub file: Option<String>,
    /// Edge list such as `0-1,1-2,2-3`.
    #[arg(long)]
    pub graph: Option<String>,
    /// Vertex count; defaults to the largest index plus one.
    #[arg(long)]
    pub vertices: Option<usize>,
    /// Comma-separated vertex weights.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// Number of colors for graph coloring.
    #[arg(long, default_value_t = 3)]
    pub colors: usize,
    /// Bound for decision problems.
    #[arg(long, allow_hyphen_values = true)]
    pub bound: Option<i64>,
    /// Clauses as signed 1-based literals, e.g. `1,-2;2,3`.
    #[arg(long, allow_hyphen_values = true)]
    pub clauses: Option<String>,
    /// Variable count; defaults to the largest literal.
    #[arg(long)]
    pub variables: Option<usize>,
    /// Matrix rows separated by `;`, e.g. `2,-3;-3,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
    /// Sets separated by `;`, e.g. `0,1;1,2`.
    #[arg(long)]
    pub sets: Option<String>,
    /// Universe size; defaults to the largest element plus one.
    #[arg(long)]
    pub elements: Option<usize>,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Configurations brute force may enumerate.
    #[arg(long, default_value_t = pred_core::model::DEFAULT_MAX_CONFIGS)]
    pub max_configs: u64,
    /// Branch-and-bound nodes the ILP solver may visit.
    #[arg(long, default_value_t = pred_core::solvers::DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
}

/// Parses `args` and runs one command. Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return 2;
            }
            let _ = write!(stdout, "{text}");
            return 0;
        }
    };
    match commands::execute(cli.command, stdin, stderr) {
        Ok(out) => match stdout.write_all(out.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
