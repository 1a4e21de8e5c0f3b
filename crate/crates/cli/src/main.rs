mod commands;
mod input;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Environment variable overriding the default enumeration ceiling.
pub const CEILING_ENV: &str = "TURANLAB_CEILING";

#[derive(Parser, Debug)]
#[command(name = "turanlab", version, about = "Generalized Turán experiments on small graphs")]
pub struct Cli {
    /// Directory for result files and the run manifest.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Copies, injective maps and automorphisms of PATTERN in HOST.
    Count { pattern: String, host: String },

    /// Largest number of copies of PATTERN over FORBIDDEN-free graphs on N vertices.
    Ex {
        n: usize,
        pattern: String,
        /// Forbidden graphs; files may hold several, `+` joins arguments.
        forbidden: Vec<String>,
        /// Maximize over complete multipartite graphs with at most R parts instead.
        #[arg(long, value_name = "R")]
        multipartite_only: Option<usize>,
        /// Enumeration ceiling (falls back to TURANLAB_CEILING).
        #[arg(long)]
        ceiling: Option<usize>,
    },

    /// Runs a symmetrization process on HOST and logs every step.
    Symmetrize {
        host: String,
        pattern: String,
        /// Part bound; required in zykov mode.
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Zykov)]
        mode: Mode,
        /// Odd cycles shorter than 2k+1 are removed first in bipartize mode.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Step budget (default n^3).
        #[arg(long)]
        max_steps: Option<usize>,
    },

    /// Edit distance from HOST to the nearest graph of the target shape.
    Distance {
        host: String,
        r: usize,
        #[arg(long, value_enum, default_value_t = Target::Multipartite)]
        target: Target,
        /// Largest order solved exactly.
        #[arg(long, default_value_t = turanlab::partition::DEFAULT_EXACT_CEILING)]
        exact_ceiling: usize,
        /// Use local search above the exact ceiling instead of failing.
        #[arg(long)]
        allow_heuristic: bool,
    },

    /// Copies, deficiency and distances for every FORBIDDEN-free graph on N vertices.
    Profile {
        n: usize,
        pattern: String,
        forbidden: String,
        r: usize,
        #[arg(long)]
        ceiling: Option<usize>,
    },

    /// Checks that the listed graphs, in order, form a nice sequence.
    Nice {
        #[arg(required = true)]
        family: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Zykov,
    Bipartize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Turan,
    Multipartite,
}

/// A message and the process exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub const PARSE: u8 = 2;
    pub const CEILING: u8 = 3;
    pub const NON_TERMINATION: u8 = 4;
    pub const PRECONDITION: u8 = 5;
    const OTHER: u8 = 1;

    pub fn parse(message: String) -> Self {
        CliError { code: Self::PARSE, message }
    }

    pub fn other(message: String) -> Self {
        CliError { code: Self::OTHER, message }
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        Self::other(format!("{}: {e}", path.display()))
    }
}

impl From<turanlab::Error> for CliError {
    fn from(e: turanlab::Error) -> Self {
        use turanlab::Error::*;
        let code = match e {
            Graph6 { .. } | EdgeList { .. } | AtLine { .. } => Self::PARSE,
            CeilingExceeded { .. } => Self::CEILING,
            _ => Self::PRECONDITION,
        };
        CliError { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
