use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "skewbrace",
    version,
    about = "Finite skew braces: validation, Sylow and Hall sub-skew braces, enumeration"
)]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print the proof trace of constructive runs.
    #[arg(long, global = true)]
    trace: bool,
    /// Use exhaustive search instead of the constructive algorithm.
    #[arg(long, global = true)]
    brute_force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// JSON, one document per run.
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a brace file holds a valid skew brace.
    Verify { file: PathBuf },
    /// Find a Sylow p-sub-skew brace.
    Sylow {
        #[arg(short = 'p', long = "prime")]
        p: usize,
        file: PathBuf,
    },
    /// Find a Hall sub-skew brace for a set of primes.
    Hall {
        /// Comma-separated primes, e.g. `2,5`.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<usize>,
        file: PathBuf,
    },
    /// Decide whether the brace is supersoluble.
    Supersoluble { file: PathBuf },
    /// Print the opposite skew brace in brace-file format.
    Opposite { file: PathBuf },
    /// List all skew braces on the catalog groups of an order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Restrict to one catalog group, e.g. `S3` or `Z2xZ2`.
        #[arg(long)]
        group: Option<String>,
    },
    /// Check the Sylow, Hall and left-ideal properties on a file or on every
    /// `.brace` file in a directory.
    CheckTheorems { path: PathBuf },
    /// Write every brace on every catalog group up to an order into a directory.
    Corpus {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

pub struct Options {
    pub format: Format,
    pub trace: bool,
    pub brute_force: bool,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let opts = Options {
        format: cli.format,
        trace: cli.trace,
        brute_force: cli.brute_force,
    };
    match cli.command {
        Command::Verify { file } => commands::verify(&opts, &file),
        Command::Sylow { p, file } => commands::sylow(&opts, p, &file),
        Command::Hall { primes, file } => commands::hall(&opts, &primes, &file),
        Command::Supersoluble { file } => commands::supersoluble(&opts, &file),
        Command::Opposite { file } => commands::opposite(&opts, &file),
        Command::Enumerate { order, group } => commands::enumerate(&opts, order, group.as_deref()),
        Command::CheckTheorems { path } => commands::check_theorems(&opts, &path),
        Command::Corpus { max_order, out } => commands::corpus(&opts, max_order, Path::new(&out)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(msg) = f.message() {
                eprintln!("{msg}");
            }
            ExitCode::from(f.code())
        }
    }
}
